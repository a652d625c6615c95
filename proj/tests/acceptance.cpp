// Acceptance suite: one PASS/FAIL line per criterion, details indented below.
// Exit status is nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "graphs.hpp"
#include "lift_probe.hpp"
#include "nbp/corpus.hpp"
#include "nbp/discharging.hpp"
#include "nbp/oracle.hpp"
#include "nbp/reducer.hpp"

namespace {

using namespace nbp;

const std::string kDir = NBP_CORPUS_DIR;

struct Line {
  std::string id;
  bool pass;
  std::string summary;
  std::vector<std::string> details;
};

std::vector<Line> results;

void emit(Line l) {
  std::cout << "criterion " << l.id << " " << (l.pass ? "PASS" : "FAIL") << " " << l.summary << "\n";
  for (auto& d : l.details) std::cout << "    " << d << "\n";
  std::cout.flush();
  results.push_back(std::move(l));
}

std::string cyc(const CycleRef& c) {
  std::string s;
  for (std::size_t i = 0; i < c.verts.size(); ++i) s += (i ? "," : "") + std::to_string(c.verts[i]);
  return s;
}

// every desk graph with every cycle of length <= 12
struct Sweep {
  const CorpusEntry* entry;
  CycleRef cycle;
};

std::vector<Sweep> sweep_of(const std::vector<CorpusEntry>& desk) {
  std::vector<Sweep> out;
  for (auto& e : desk)
    for (auto& c : short_cycles(e.graph, 12)) out.push_back({&e, c});
  return out;
}

void criterion1(const std::vector<Sweep>& sweep, Mode mode, const std::string& id) {
  long pairs = 0, failures = 0;
  std::vector<std::string> details;
  std::set<std::string> graphs;
  for (auto& s : sweep) {
    for (auto& pre : valid_precolorings(s.entry->graph, s.cycle)) {
      ++pairs;
      if (solve(SolveRequest{s.entry->graph, pre, s.cycle, mode})) continue;
      if (++failures <= 3)
        details.push_back(s.entry->provenance + " cycle=" + cyc(s.cycle) + " precoloring=" + pre.str() +
                          " has no " + to_string(mode) + " superextension");
      graphs.insert(s.entry->provenance);
    }
  }
  std::ostringstream os;
  os << "mode=" << to_string(mode) << " cycles=" << sweep.size() << " precolorings=" << pairs
     << " not-superextendable=" << failures;
  if (failures) {
    std::string g;
    for (auto& x : graphs) g += (g.empty() ? "" : ",") + x;
    details.push_back("failing graphs: " + g);
  }
  emit({id, failures == 0, os.str(), details});
}

void criterion2(const std::vector<Sweep>& sweep, BranchCoverage& cov) {
  long runs = 0, anomalies = 0, cert = 0, errors = 0;
  std::vector<std::string> details;
  for (auto& s : sweep) {
    const auto& g = s.entry->graph;
    for (auto& pre : valid_precolorings(g, s.cycle)) {
      ++runs;
      try {
        auto r = superextend(g, s.cycle, pre, Mode::Lenient);
        cov.merge(r.coverage);
        anomalies += static_cast<long>(r.anomalies.size());
        for (auto& a : r.anomalies)
          if (details.size() < 5) details.push_back(s.entry->provenance + " anomaly " + a.kind + ": " + a.detail);
        bool ok = is_independent(g, r.coloring) && induces_forest(g, r.coloring) &&
                  is_superextension(g, s.cycle, r.coloring, Mode::Lenient);
        if (!ok) {
          ++cert;
          if (details.size() < 5) details.push_back(s.entry->provenance + " certificate rejected");
        }
      } catch (const std::exception& e) {
        ++errors;
        if (details.size() < 5) details.push_back(s.entry->provenance + " cycle=" + cyc(s.cycle) + " " + e.what());
      }
    }
  }
  std::ostringstream os;
  os << "mode=lenient runs=" << runs << " anomalies=" << anomalies << " certificate-failures=" << cert
     << " errors=" << errors;
  emit({"2", anomalies == 0 && cert == 0 && errors == 0, os.str(), details});
}

void criterion3(const std::vector<CorpusEntry>& all) {
  int bad = 0;
  std::vector<std::string> details;
  for (auto& e : all) {
    auto l = run_rules(e.graph);
    if (l.total() != 0 || initial_charges(e.graph).total() != 0) {
      ++bad;
      details.push_back(e.provenance + " total=" + std::to_string(l.total()) + "/3");
    }
  }
  emit({"3", bad == 0, "graphs=" + std::to_string(all.size()) + " nonzero-totals=" + std::to_string(bad), details});
}

void criterion4(const std::vector<CorpusEntry>& all) {
  int eligible = 0, missing = 0;
  std::vector<std::string> details;
  for (auto& e : all) {
    const auto& g = e.graph;
    auto oc = g.outer_cycle();
    if (!oc || oc->length() > 12 || static_cast<int>(oc->length()) == g.order()) continue;
    ++eligible;
    if (!find_configuration(g, *oc)) {
      ++missing;
      details.push_back(e.provenance + " has no configuration");
    }
  }
  emit({"4", missing == 0 && eligible > 0,
        "eligible=" + std::to_string(eligible) + " without-configuration=" + std::to_string(missing), details});
}

std::int64_t surplus_from(const PlaneGraph& g, const ChargeLedger& l, std::set<Vertex> face) {
  for (int f = 0; f < static_cast<int>(g.faces().size()); ++f) {
    if (f == g.outer_face()) continue;
    const auto& b = g.faces()[f].boundary;
    if (std::set<Vertex>(b.begin(), b.end()) != face) continue;
    std::int64_t t = 0;
    for (auto& x : l.log)
      if (x.from == ElementRef::face(f) && x.rule == "surplus") t += x.thirds;
    return t;
  }
  return -1;
}

void criterion5() {
  std::vector<std::string> details;
  bool ok = true;

  // every internal 3-face ends at exactly 0
  int tri = 0, tri_bad = 0;
  for (auto* name : {"tetrad-exerciser", "l4-exerciser", "triangle-pendant", "c9-ear"}) {
    auto g = curated_entry(kDir, name)->graph;
    auto l = run_rules(g);
    for (int f = 0; f < static_cast<int>(g.faces().size()); ++f)
      if (f != g.outer_face() && g.faces()[f].degree() == 3) {
        ++tri;
        if (l.face[f].thirds != 0) ++tri_bad;
      }
  }
  details.push_back("3-faces checked=" + std::to_string(tri) + " nonzero=" + std::to_string(tri_bad));
  ok = ok && tri > 0 && tri_bad == 0;

  auto s2 = curated_entry(kDir, "special2-exerciser")->graph;
  auto s2s = surplus_from(s2, run_rules(s2), {0, 1, 2, 12, 13});
  details.push_back("special-2 5-face surplus=" + std::to_string(s2s) + "/3 (hand value 2/3, bound >= 2/3)");
  ok = ok && s2s == 2;

  auto nine = curated_entry(kDir, "nine-face-exerciser")->graph;
  auto ns = surplus_from(nine, run_rules(nine), {12, 1, 2, 3, 4, 5, 13, 15, 14});
  details.push_back("9-face surplus=" + std::to_string(ns) + "/3 (hand value 1/3, bound >= 1/3)");
  ok = ok && ns == 1;

  int expects = 0, mismatched = 0;
  for (auto& e : curated(kDir)) {
    if (!e.expect) continue;
    ++expects;
    if (audit(e.graph).verdict() != *e.expect) {
      ++mismatched;
      details.push_back(e.provenance + " verdict differs from .expect");
    }
  }
  details.push_back("expect files=" + std::to_string(expects) + " mismatched=" + std::to_string(mismatched));
  ok = ok && mismatched == 0;
  emit({"5", ok, "hand-computed ledger values", details});
}

void criterion6(const std::vector<Sweep>& sweep) {
  std::vector<std::string> details;
  auto c5 = testing::cycle_graph(5);
  auto edge = PlaneGraph::build(2, {{1}, {0}}, {0, 1});
  auto one = PlaneGraph::build(1, {{}}, {});
  auto n5 = count(SolveRequest{c5, IFColoring(5)});
  auto n2 = count(SolveRequest{edge, IFColoring(2)});
  auto n1 = count(SolveRequest{one, IFColoring(1)});
  bool ok = n5 == 10 && n2 == 3 && n1 == 2;
  details.push_back("count C5=" + std::to_string(n5) + " edge=" + std::to_string(n2) + " vertex=" + std::to_string(n1));

  std::mt19937 rng(2024);
  int pairs = 0, violations = 0;
  while (pairs < 100) {
    auto& s = sweep[rng() % sweep.size()];
    auto pres = valid_precolorings(s.entry->graph, s.cycle);
    auto& pre = pres[rng() % pres.size()];
    const auto& g = s.entry->graph;
    auto strict = count(SolveRequest{g, pre, s.cycle, Mode::Strict});
    auto lenient = count(SolveRequest{g, pre, s.cycle, Mode::Lenient});
    auto free = count(SolveRequest{g, pre});
    ++pairs;
    if (!(strict <= lenient && lenient <= free)) {
      ++violations;
      details.push_back(s.entry->provenance + " strict=" + std::to_string(strict) + " lenient=" +
                        std::to_string(lenient) + " unconstrained=" + std::to_string(free));
    }
  }
  details.push_back("random pairs=" + std::to_string(pairs) + " order violations=" + std::to_string(violations));
  emit({"6", ok && violations == 0, "oracle counts and monotonicity", details});
}

void criterion7(const std::vector<CorpusEntry>& all, BranchCoverage& cov) {
  int bad = 0, forests = 0, forest_bad = 0;
  std::vector<std::string> details;
  std::vector<std::pair<std::string, PlaneGraph>> graphs;
  for (auto& e : all) graphs.push_back({e.provenance, e.graph});
  graphs.push_back({"path:6", testing::path_graph(6)});
  graphs.push_back({"star:3", testing::star3()});
  for (auto& [name, g] : graphs) {
    try {
      auto r = near_bipartite_partition(g);
      cov.merge(r.coverage);
      if (!is_independent(g, r.coloring) || !induces_forest(g, r.coloring) || !r.anomalies.empty()) {
        ++bad;
        details.push_back(name + " rejected");
      }
      if (girth(g) == 0) {
        ++forests;
        if (!r.I.empty() || static_cast<int>(r.F.size()) != g.order()) {
          ++forest_bad;
          details.push_back(name + " forest not returned as (empty, V)");
        }
      }
    } catch (const std::exception& e) {
      ++bad;
      details.push_back(name + " " + e.what());
    }
  }
  std::ostringstream os;
  os << "graphs=" << graphs.size() << " rejected=" << bad << " forests=" << forests << " forest-mismatch=" << forest_bad;
  emit({"7", bad == 0 && forest_bad == 0 && forests > 0, os.str(), details});
}

void criterion8(BranchCoverage cov) {
  std::vector<std::string> details;
  int failures = 0;
  for (auto* name : {"tetrad-exerciser", "l4-exerciser"}) {
    auto st = testing::probe_lifts(curated_entry(kDir, name)->graph, 2000, 1);
    cov.merge(st.coverage);
    failures += static_cast<int>(st.failures.size());
    details.push_back(std::string("probe ") + name + " lifted=" + std::to_string(st.lifted) +
                      " unsat=" + std::to_string(st.unsat) + " budget=" + std::to_string(st.budget) +
                      " failures=" + std::to_string(st.failures.size()));
    for (std::size_t i = 0; i < st.failures.size() && i < 3; ++i) details.push_back("  " + st.failures[i]);
  }
  for (auto& b : kFiveFaceBranches) details.push_back(std::string(b.id) + " hits=" + std::to_string(cov.count(b.id)));
  for (auto& b : kTetradBranches) details.push_back(std::string(b.id) + " hits=" + std::to_string(cov.count(b.id)));
  auto missing = cov.missing();
  for (auto& b : missing) details.push_back("never taken: " + std::string(b.id) + " (" + std::string(b.rule) + ")");
  const auto total = kFiveFaceBranches.size() + kTetradBranches.size();
  emit({"8", missing.empty() && failures == 0,
        "branches=" + std::to_string(total - missing.size()) + "/" + std::to_string(total) +
            " lift-failures=" + std::to_string(failures),
        details});
}

}  // namespace

int main() {
  auto t0 = std::chrono::steady_clock::now();
  auto desk = desk_corpus(kDir);
  std::vector<CorpusEntry> all = desk;
  for (auto& e : curated(kDir))
    if (e.graph.order() > 16) all.push_back(e);

  CoverageFlags flags;
  for (auto& e : desk) flags.merge(flags_of(e.graph));
  auto sweep = sweep_of(desk);
  std::cout << "desk corpus: " << desk.size() << " graphs, " << sweep.size() << " cycles of length <= 12, coverage "
            << (flags.missing().empty() ? "complete" : "incomplete") << "\n";

  BranchCoverage cov;
  criterion1(sweep, Mode::Strict, "1");
  criterion1(sweep, Mode::Lenient, "1-lenient");
  criterion2(sweep, cov);
  criterion3(all);
  criterion4(all);
  criterion5();
  criterion6(sweep);
  criterion7(all, cov);
  criterion8(cov);

  int failed = 0;
  for (auto& r : results)
    if (!r.pass && r.id.find('-') == std::string::npos) ++failed;
  auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("summary: %d of 8 criteria failed (%.1fs)\n", failed, secs);
  return failed == 0 ? 0 : 1;
}
