// nbp: command-line front end.
// Exit codes: 0 ok / verdict true, 1 verdict false, 2 usage or input error, 3 anomaly.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "nbp/corpus.hpp"
#include "nbp/discharging.hpp"
#include "nbp/io.hpp"
#include "nbp/oracle.hpp"
#include "nbp/reducer.hpp"

namespace {

using namespace nbp;

constexpr int kOk = 0, kFalse = 1, kUsage = 2, kAnomaly = 3;

struct Args {
  std::string file, coloring, cycle, precolor, family, out;
  std::string mode = to_string(kDefaultMode);
  std::uint32_t seed = 0;
  bool fallback_oracle = false;
  int jobs = 1;
};

Mode mode_of(const std::string& s) { return s == "strict" ? Mode::Strict : Mode::Lenient; }

SolveOptions options(const Args& a) {
  SolveOptions o;
  o.jobs = a.jobs;
  return o;
}

std::optional<CycleRef> cycle_of(const PlaneGraph& g, const std::string& s) {
  if (s.empty()) return std::nullopt;
  auto c = CycleRef::canonical(parse_vertex_list(s));
  require_cycle(g, c);
  return c;
}

// a coloring argument is either the string itself or a file whose first line is the string
IFColoring coloring_of(const std::string& arg, int n) {
  std::string s = arg;
  if (std::filesystem::is_regular_file(arg)) {
    std::ifstream in(arg);
    std::getline(in, s);
  }
  auto phi = IFColoring::parse(s);
  if (phi.size() != n)
    throw std::invalid_argument("coloring has length " + std::to_string(phi.size()) + ", graph has " +
                                std::to_string(n) + " vertices");
  return phi;
}

int report_anomalies(const std::vector<Anomaly>& as) {
  for (auto& a : as) std::cerr << "anomaly kind=" << a.kind << " detail=" << a.detail << "\n";
  return as.empty() ? kOk : kAnomaly;
}

int cmd_validate(const Args& a) {
  auto r = verify_class(read_pg(a.file));
  std::cout << r.str() << "\n";
  return r.in_class ? kOk : kFalse;
}

int cmd_color(const Args& a) {
  auto g = read_pg(a.file);
  if (a.fallback_oracle && has_forbidden_cycles(g)) {
    auto phi = solve(SolveRequest{g, IFColoring(g.order())}, options(a));
    if (!phi) {
      std::cout << "none\n";
      return kFalse;
    }
    std::cout << phi->str() << "\ncertificate=" << is_if_coloring(g, *phi).describe() << " source=oracle\n";
    return kOk;
  }
  auto r = near_bipartite_partition(g, mode_of(a.mode), options(a));
  std::cout << r.coloring.str() << "\ncertificate=" << is_if_coloring(g, r.coloring).describe()
            << (r.girth_fallback ? " source=oracle" : " source=reducer") << "\n";
  return report_anomalies(r.anomalies);
}

int cmd_check(const Args& a) {
  auto g = read_pg(a.file);
  auto phi = coloring_of(a.coloring, g.order());
  auto ind = is_independent(g, phi);
  auto forest = induces_forest(g, phi);
  bool ok = ind && forest;
  std::cout << "independent=" << ind.describe() << "\nforest=" << forest.describe() << "\n";
  if (auto c = cycle_of(g, a.cycle)) {
    auto sup = is_superextension(g, *c, phi, mode_of(a.mode));
    std::cout << "superextension=" << sup.describe() << " mode=" << a.mode << "\n";
    ok = ok && sup;
  }
  return ok ? kOk : kFalse;
}

int cmd_audit(const Args& a) {
  auto r = audit(read_pg(a.file));
  std::cout << r.str();
  return r.conserved && r.bounds_hold() ? kOk : kFalse;
}

int cmd_count(const Args& a) {
  auto g = read_pg(a.file);
  std::cout << count(SolveRequest{g, IFColoring(g.order()), cycle_of(g, a.cycle), mode_of(a.mode)}, options(a))
            << "\n";
  return kOk;
}

int cmd_superextend(const Args& a) {
  auto g = read_pg(a.file);
  auto c = cycle_of(g, a.cycle);
  auto pre = coloring_of(a.precolor, g.order());
  try {
    auto r = superextend(g, *c, pre, mode_of(a.mode), options(a));
    std::cout << r.coloring.str() << "\ncertificate=" << is_superextension(g, *c, r.coloring, mode_of(a.mode)).describe()
              << "\n";
    return report_anomalies(r.anomalies);
  } catch (const ReducerError& e) {
    if (e.code() != ReducerErrc::NotSuperextendable) throw;
    std::cout << "none\n";
    return kFalse;
  }
}

int cmd_gen(const Args& a) {
  auto e = gen_family(a.family, a.seed);
  auto text = write_pg(e.graph);
  if (a.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(a.out);
    if (!(out << text)) throw std::runtime_error("cannot write " + a.out);
    std::cout << e.provenance << " -> " << a.out << "\n";
  }
  return kOk;
}

int cmd_trace(const Args& a) {
  auto g = read_pg(a.file);
  if (!a.cycle.empty()) {
    auto c = cycle_of(g, a.cycle);
    IFColoring pre = a.precolor.empty() ? valid_precolorings(g, *c).front() : coloring_of(a.precolor, g.order());
    auto r = superextend(g, *c, pre, mode_of(a.mode), options(a));
    std::cout << r.trace.str();
    return report_anomalies(r.anomalies);
  }
  auto r = near_bipartite_partition(g, mode_of(a.mode), options(a));
  std::cout << r.trace.str();
  if (r.girth_fallback) std::cout << "fallback=oracle\n";
  return report_anomalies(r.anomalies);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"near-bipartite partitions of plane graphs without 4-, 6- and 8-cycles"};
  app.require_subcommand(1);
  Args a;
  app.add_option("--jobs", a.jobs, "oracle worker threads")->check(CLI::PositiveNumber);

  auto file = [&](CLI::App* s) { s->add_option("file", a.file, "graph in pg format")->required(); };
  auto mode = [&](CLI::App* s) {
    s->add_option("--mode", a.mode, "strict or lenient")->check(CLI::IsMember({"strict", "lenient"}));
  };
  auto cycle = [&](CLI::App* s, bool required) {
    auto o = s->add_option("--cycle", a.cycle, "cycle as v0,v1,...");
    if (required) o->required();
  };

  auto* validate = app.add_subcommand("validate", "class membership and cycle statistics");
  file(validate);
  auto* color = app.add_subcommand("color", "near-bipartite partition");
  file(color);
  mode(color);
  color->add_flag("--fallback-oracle", a.fallback_oracle, "use the exact solver on out-of-class input");
  auto* check = app.add_subcommand("check", "certify a coloring");
  file(check);
  check->add_option("coloring", a.coloring, "coloring string or file")->required();
  cycle(check, false);
  mode(check);
  auto* audit_cmd = app.add_subcommand("audit", "discharging ledger");
  file(audit_cmd);
  auto* count_cmd = app.add_subcommand("count", "number of IF-colorings or superextensions");
  file(count_cmd);
  cycle(count_cmd, false);
  mode(count_cmd);
  auto* sup = app.add_subcommand("superextend", "extend a precoloring of a cycle");
  file(sup);
  cycle(sup, true);
  sup->add_option("--precolor", a.precolor, "coloring string, unset off the cycle")->required();
  mode(sup);
  auto* gen = app.add_subcommand("gen", "generate a corpus graph");
  gen->add_option("--family", a.family, "cactus:<b> | greedy:<n>[:<keep>] | ears:<n>:<outer> | subdivision:<base>:<k>")
      ->required();
  gen->add_option("--seed", a.seed)->required();
  gen->add_option("--out", a.out);
  auto* trace = app.add_subcommand("trace", "reduction trace");
  file(trace);
  cycle(trace, false);
  trace->add_option("--precolor", a.precolor);
  mode(trace);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*validate) return cmd_validate(a);
    if (*color) return cmd_color(a);
    if (*check) return cmd_check(a);
    if (*audit_cmd) return cmd_audit(a);
    if (*count_cmd) return cmd_count(a);
    if (*sup) return cmd_superextend(a);
    if (*gen) return cmd_gen(a);
    if (*trace) return cmd_trace(a);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
