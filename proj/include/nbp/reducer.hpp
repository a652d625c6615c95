#pragma once

// Constructive superextension: find a reducible configuration, shrink the
// graph, recurse, and lift the coloring back by explicit case analysis.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "nbp/coloring.hpp"
#include "nbp/oracle.hpp"
#include "nbp/plane_graph.hpp"

namespace nbp {

enum class ConfigKind { LowDegreeInternal, OuterChord, SeparatingSmallCycle, CommonInternalNeighbor, BadInternal5Face, Tetrad };

inline const char* to_string(ConfigKind k) {
  switch (k) {
    case ConfigKind::LowDegreeInternal: return "LowDegreeInternal";
    case ConfigKind::OuterChord: return "OuterChord";
    case ConfigKind::SeparatingSmallCycle: return "SeparatingSmallCycle";
    case ConfigKind::CommonInternalNeighbor: return "CommonInternalNeighbor";
    case ConfigKind::BadInternal5Face: return "BadInternal5Face";
    case ConfigKind::Tetrad: return "Tetrad";
  }
  return "?";
}

/// Payload by kind:
///   LowDegreeInternal       verts = {v}
///   OuterChord              verts = {a, b}
///   SeparatingSmallCycle    cycle
///   CommonInternalNeighbor  verts = {w, v0, v1}
///   BadInternal5Face        verts = v1..v5 along the face, attach = u1..u5, face
///   Tetrad                  verts = v1..v4, attach = {x, y, v1', v4'}, face
struct Configuration {
  ConfigKind kind = ConfigKind::LowDegreeInternal;
  std::vector<Vertex> verts;
  std::vector<Vertex> attach;
  std::optional<CycleRef> cycle;
  int face = -1;

  std::string describe() const {
    auto list = [](const std::vector<Vertex>& v) {
      std::string s;
      for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
      return s;
    };
    std::string s = to_string(kind);
    switch (kind) {
      case ConfigKind::LowDegreeInternal: return s + " v=" + std::to_string(verts[0]);
      case ConfigKind::OuterChord: return s + " edge=" + list(verts);
      case ConfigKind::SeparatingSmallCycle: return s + " cycle=" + list(cycle->verts);
      case ConfigKind::CommonInternalNeighbor:
        return s + " w=" + std::to_string(verts[0]) + " v0=" + std::to_string(verts[1]) +
               " v1=" + std::to_string(verts[2]);
      case ConfigKind::BadInternal5Face: return s + " face=" + list(verts) + " u=" + list(attach);
      case ConfigKind::Tetrad:
        return s + " path=" + list(verts) + " x=" + std::to_string(attach[0]) + " y=" + std::to_string(attach[1]) +
               " v1'=" + std::to_string(attach[2]) + " v4'=" + std::to_string(attach[3]);
    }
    return s;
  }
};

enum class ReducerErrc { OutOfClass, InvalidPrecoloring, ClassViolated, LiftFailed, NotSuperextendable };

inline const char* to_string(ReducerErrc c) {
  switch (c) {
    case ReducerErrc::OutOfClass: return "OutOfClass";
    case ReducerErrc::InvalidPrecoloring: return "InvalidPrecoloring";
    case ReducerErrc::ClassViolated: return "ClassViolated";
    case ReducerErrc::LiftFailed: return "LiftFailed";
    case ReducerErrc::NotSuperextendable: return "NotSuperextendable";
  }
  return "?";
}

class ReducerError : public std::runtime_error {
 public:
  ReducerError(ReducerErrc c, const std::string& what)
      : std::runtime_error(std::string(to_string(c)) + ": " + what), code_(c) {}
  ReducerErrc code() const noexcept { return code_; }

 private:
  ReducerErrc code_;
};

// ---------------------------------------------------------------------------
// Lift branches

struct LiftBranch {
  std::string_view id;
  std::string_view rule;
};

inline constexpr std::array<LiftBranch, 11> kFiveFaceBranches{{
    {"face5.I.u5F", "identified vertex I, u5 F: v1,v2,v4 <- F and v5 <- I"},
    {"face5.I.u5I", "identified vertex I, u5 I: v5 <- F"},
    {"face5.I.u5I.recolor", "identified vertex I, u5 I, u2 and u4 F: recolor v3 <- F and v2,v4 <- I"},
    {"face5.F.u4I", "identified vertex F, u4 I: v1,v4 <- F, v2 and v5 opposite to u2 and u5"},
    {"face5.F.u4I.recolor", "identified vertex F, u4 I, u2 and u5 both I: recolor v1 <- I"},
    {"face5.F.X", "identified vertex F, u4 F, u2 or u3 I: v1,v4 <- I and v2,v3,v5 <- F"},
    {"face5.F.Z", "identified vertex F, u2,u3,u4 F, u5 I: v2,v4 <- I and v1,v3,v5 <- F"},
    {"face5.F.allF.X", "all u F, no F-path u3..C0, no F-path u2..u3: v1,v4 <- I and v2,v3,v5 <- F"},
    {"face5.F.allF.Y", "all u F, no F-path u3..C0, F-path u2..u3: v1,v2,v4 <- F and v3,v5 <- I"},
    {"face5.F.allF.mirror.Y", "all u F, no F-path u1..C0, no F-path u1..u2: v1,v2,v4 <- F and v3,v5 <- I"},
    {"face5.F.allF.mirror.X", "all u F, no F-path u1..C0, F-path u1..u2: v1,v4 <- I and v2,v3,v5 <- F"},
}};

inline constexpr std::array<LiftBranch, 8> kTetradBranches{{
    {"tetrad.I", "v1',y I: v1,v2,v4 <- F and v3 opposite to v4'"},
    {"tetrad.F.v4I.xI", "v1',y F, v4' I, x I: v1,v3,v4 <- F and v2 <- I"},
    {"tetrad.F.v4I.xF", "v1',y F, v4' I, x F: v1 <- I and v2,v3,v4 <- F"},
    {"tetrad.F.v4F.xI", "v1',y F, v4' F, x I: v2,v4 <- I and v1,v3 <- F"},
    {"tetrad.F.noPv.noA", "no F-path v1'..C0 nor v1'..v4': v1,v4 <- I and v2,v3 <- F"},
    {"tetrad.F.noPy.noB", "no F-path y..C0 nor y..v4': v1,v3 <- I and v2,v4 <- F"},
    {"tetrad.F.case1", "no F-path v1'..C0 nor y..v4': v1,v3 <- I and v2,v4 <- F"},
    {"tetrad.F.case2", "no F-path y..C0 nor v1'..v4': v1,v4 <- I and v2,v3 <- F"},
}};

struct BranchCoverage {
  std::map<std::string, std::uint64_t> hits;

  void hit(const std::string& label) { ++hits[label]; }
  void merge(const BranchCoverage& o) {
    for (auto& [k, v] : o.hits) hits[k] += v;
  }
  std::uint64_t count(std::string_view label) const {
    auto it = hits.find(std::string(label));
    return it == hits.end() ? 0 : it->second;
  }
  /// Labeled 5-face and tetrad branches never taken.
  std::vector<LiftBranch> missing() const {
    std::vector<LiftBranch> out;
    for (auto& b : kFiveFaceBranches)
      if (!count(b.id)) out.push_back(b);
    for (auto& b : kTetradBranches)
      if (!count(b.id)) out.push_back(b);
    return out;
  }
};

// ---------------------------------------------------------------------------
// Configuration finder

namespace detail {

inline std::optional<Vertex> common_neighbor(const PlaneGraph& g, Vertex a, Vertex b, Vertex except = -1) {
  for (Vertex w : g.neighbors(a))
    if (w != except && w != b && g.adjacent(w, b)) return w;
  return std::nullopt;
}

inline Vertex third_neighbor(const PlaneGraph& g, Vertex v, Vertex p, Vertex q) {
  for (Vertex w : g.neighbors(v))
    if (w != p && w != q) return w;
  return -1;
}

inline bool consecutive_on(const CycleRef& c, Vertex a, Vertex b) {
  const int k = c.length();
  for (int i = 0; i < k; ++i)
    if (c.verts[i] == a) return c.verts[(i + 1) % k] == b || c.verts[(i + k - 1) % k] == b;
  return false;
}

inline void require_outer(const PlaneGraph& g, const CycleRef& c0) {
  auto oc = g.outer_cycle();
  if (!oc || !(*oc == CycleRef::canonical(c0.verts)))
    throw std::invalid_argument("C0 must bound the outer face");
}

}  // namespace detail

/// First configuration in priority order; C0 must bound the outer face.
inline std::optional<Configuration> find_configuration(const PlaneGraph& g, const CycleRef& c0) {
  detail::require_outer(g, c0);
  const auto on = cycle_mask(g, c0);
  const int n = g.order();

  for (Vertex v = 0; v < n; ++v)
    if (!on[v] && g.degree(v) <= 2) return Configuration{ConfigKind::LowDegreeInternal, {v}, {}, {}, -1};

  for (Vertex a = 0; a < n; ++a) {
    if (!on[a]) continue;
    std::vector<Vertex> nb = g.neighbors(a);
    std::sort(nb.begin(), nb.end());
    for (Vertex b : nb)
      if (a < b && on[b] && !detail::consecutive_on(c0, a, b))
        return Configuration{ConfigKind::OuterChord, {a, b}, {}, {}, -1};
  }

  auto c0c = CycleRef::canonical(c0.verts);
  for (auto& c : short_cycles(g, 12))
    if (!(c == c0c) && is_separating(g, c)) return Configuration{ConfigKind::SeparatingSmallCycle, {}, {}, c, -1};

  for (Vertex w = 0; w < n; ++w) {
    if (on[w]) continue;
    std::vector<Vertex> cn;
    for (Vertex x : g.neighbors(w))
      if (on[x]) cn.push_back(x);
    std::sort(cn.begin(), cn.end());
    for (std::size_t i = 0; i < cn.size(); ++i)
      for (std::size_t j = i + 1; j < cn.size(); ++j)
        if (!g.adjacent(cn[i], cn[j]))
          return Configuration{ConfigKind::CommonInternalNeighbor, {w, cn[i], cn[j]}, {}, {}, -1};
  }

  const auto& fs = g.faces();
  for (int f = 0; f < static_cast<int>(fs.size()); ++f) {
    if (f == g.outer_face() || fs[f].degree() != 5) continue;
    const auto& b = fs[f].boundary;
    std::vector<Vertex> s = b;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) continue;
    bool ok = true;
    for (Vertex v : b) ok = ok && !on[v] && g.degree(v) == 3;
    if (!ok) continue;
    std::vector<Vertex> u(5);
    for (int i = 0; i < 5; ++i) u[i] = detail::third_neighbor(g, b[i], b[(i + 4) % 5], b[(i + 1) % 5]);
    return Configuration{ConfigKind::BadInternal5Face, b, u, {}, f};
  }

  for (int f = 0; f < static_cast<int>(fs.size()); ++f) {
    if (f == g.outer_face()) continue;
    const auto& b = fs[f].boundary;
    const int len = static_cast<int>(b.size());
    if (len < 4) continue;
    for (int i = 0; i < len; ++i)
      for (int dir : {1, -1}) {
        std::array<Vertex, 4> p;
        for (int k = 0; k < 4; ++k) p[k] = b[((i + dir * k) % len + len) % len];
        std::array<Vertex, 4> s = p;
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end()) continue;
        bool ok = true;
        for (Vertex v : p) ok = ok && !on[v] && g.degree(v) == 3;
        if (!ok) continue;
        auto v1p = detail::common_neighbor(g, p[0], p[1], p[2]);
        auto v4p = detail::common_neighbor(g, p[3], p[2], p[1]);
        if (!v1p || !v4p) continue;
        Vertex x = detail::third_neighbor(g, p[0], p[1], *v1p);
        Vertex y = detail::third_neighbor(g, p[3], p[2], *v4p);
        return Configuration{ConfigKind::Tetrad, {p[0], p[1], p[2], p[3]}, {x, y, *v1p, *v4p}, {}, f};
      }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Surgeries

/// Reduced graph with the old-to-new vertex map and the image of C0.
struct Reduced {
  PlaneGraph graph;
  std::vector<Vertex> to_new;
  CycleRef outer;
};

namespace detail {

inline CycleRef map_cycle(const CycleRef& c, const std::vector<Vertex>& to_new) {
  std::vector<Vertex> v;
  for (Vertex x : c.verts) v.push_back(to_new[x]);
  return CycleRef::canonical(v);
}

inline IFColoring map_coloring(const IFColoring& phi, const std::vector<Vertex>& to_new, int n) {
  IFColoring out(n);
  for (Vertex v = 0; v < phi.size(); ++v)
    if (to_new[v] >= 0 && phi[v] != Color::Unset) out[to_new[v]] = phi[v];
  return out;
}

inline void copy_back(IFColoring& phi, const IFColoring& sub, const std::vector<Vertex>& to_new) {
  for (Vertex v = 0; v < phi.size(); ++v)
    if (to_new[v] >= 0) phi[v] = sub[to_new[v]];
}

/// Delete `gone`, then identify a and b; the result must keep C0 intact,
/// chordless, outer, and free of forbidden cycles.
inline Reduced delete_and_identify(const PlaneGraph& g, const CycleRef& c0, const std::vector<Vertex>& gone, Vertex a,
                                   Vertex b) {
  Relabeled del, id;
  try {
    del = delete_vertices_mapped(g, gone);
    id = identify_mapped(del.graph, del.to_new[a], del.to_new[b]);
  } catch (const GraphError& e) {
    throw ReducerError(ReducerErrc::ClassViolated, std::string("surgery failed: ") + e.what());
  }
  Reduced r{id.graph, std::vector<Vertex>(g.order(), -1), {}};
  for (Vertex v = 0; v < g.order(); ++v)
    if (del.to_new[v] >= 0) r.to_new[v] = id.to_new[del.to_new[v]];
  std::vector<Vertex> img;
  for (Vertex v : c0.verts) img.push_back(r.to_new[v]);
  std::vector<Vertex> s = img;
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    throw ReducerError(ReducerErrc::ClassViolated, "identification merges two vertices of C0");
  r.outer = CycleRef::canonical(img);
  const int k = static_cast<int>(img.size());
  for (int i = 0; i < k; ++i)
    for (int j = i + 2; j < k; ++j)
      if (!(i == 0 && j == k - 1) && r.graph.adjacent(img[i], img[j]))
        throw ReducerError(ReducerErrc::ClassViolated, "identification creates a chord of C0");
  auto oc = r.graph.outer_cycle();
  if (!oc || !(*oc == r.outer)) throw ReducerError(ReducerErrc::ClassViolated, "C0 no longer bounds the outer face");
  if (auto bad = find_forbidden_cycle(r.graph)) {
    std::string s2;
    for (Vertex v : bad->verts) s2 += " " + std::to_string(v);
    throw ReducerError(ReducerErrc::ClassViolated, "reduced graph has a forbidden cycle:" + s2);
  }
  return r;
}

}  // namespace detail

/// G' = (G - {v1,v2,v4,v5}) with v3 and u1 identified.
inline Reduced reduce_5face(const PlaneGraph& g, const CycleRef& c0, const Configuration& cfg) {
  const auto& v = cfg.verts;
  return detail::delete_and_identify(g, c0, {v[0], v[1], v[3], v[4]}, v[2], cfg.attach[0]);
}

/// G' = (G - {v1,v2,v3,v4}) with y and v1' identified.
inline Reduced reduce_tetrad(const PlaneGraph& g, const CycleRef& c0, const Configuration& cfg) {
  return detail::delete_and_identify(g, c0, cfg.verts, cfg.attach[1], cfg.attach[2]);
}

// ---------------------------------------------------------------------------
// Lifts

struct Lifted {
  IFColoring phi;
  std::string label;
};

namespace detail {

inline Color opposite(Color c) { return c == Color::I ? Color::F : Color::I; }

/// Whether u, together with its F component off C0, touches a vertex of C0
/// that counts as a path end under `mode`.
inline bool reaches_outer(const PlaneGraph& g, const std::vector<char>& on, const IFColoring& phi, Vertex u,
                          Mode mode) {
  auto qualifies = [&](Vertex c) { return on[c] && (mode == Mode::Strict || phi.is(c, Color::F)); };
  if (on[u]) return qualifies(u);
  if (!phi.is(u, Color::F)) return false;
  std::vector<char> seen(g.order(), 0);
  std::vector<Vertex> st{u};
  seen[u] = 1;
  while (!st.empty()) {
    Vertex x = st.back();
    st.pop_back();
    for (Vertex w : g.neighbors(x)) {
      if (qualifies(w)) return true;
      if (!on[w] && !seen[w] && phi.is(w, Color::F)) {
        seen[w] = 1;
        st.push_back(w);
      }
    }
  }
  return false;
}

inline bool f_connected(const PlaneGraph& g, const IFColoring& phi, Vertex a, Vertex b) {
  return f_path_between(g, phi, a, b).has_value();
}

}  // namespace detail

/// Re-inserts an internal vertex of degree <= 2: F if it sees an I, else I.
inline Lifted lift_low_degree(const PlaneGraph& g, Vertex v, IFColoring phi) {
  bool sees_i = false;
  for (Vertex w : g.neighbors(v)) sees_i = sees_i || phi.is(w, Color::I);
  phi[v] = sees_i ? Color::F : Color::I;
  return {std::move(phi), sees_i ? "low.F" : "low.I"};
}

/// `partial` colours G except v1..v5; u1 carries the identified vertex's colour.
inline Lifted lift_5face(const PlaneGraph& g, const CycleRef& c0, const Configuration& cfg, const IFColoring& partial,
                         Mode mode) {
  const Vertex v1 = cfg.verts[0], v2 = cfg.verts[1], v3 = cfg.verts[2], v4 = cfg.verts[3], v5 = cfg.verts[4];
  const Vertex u1 = cfg.attach[0], u2 = cfg.attach[1], u3 = cfg.attach[2], u4 = cfg.attach[3], u5 = cfg.attach[4];
  const auto I = Color::I, F = Color::F;
  IFColoring phi = partial;
  auto is = [&](Vertex x, Color c) { return partial.is(x, c); };
  auto paint = [&](std::initializer_list<Vertex> vs, Color c) {
    for (Vertex x : vs) phi[x] = c;
  };
  auto X = [&] { paint({v1, v4}, I), paint({v2, v3, v5}, F); };
  auto Y = [&] { paint({v1, v2, v4}, F), paint({v3, v5}, I); };
  auto Z = [&] { paint({v2, v4}, I), paint({v1, v3, v5}, F); };

  const Color w = partial[u1];
  if (w == Color::Unset) throw ReducerError(ReducerErrc::LiftFailed, "identified vertex uncoloured");
  if (w == I) {
    paint({u1, v3}, I);
    paint({v1, v2, v4}, F);
    if (is(u5, F)) {
      paint({v5}, I);
      return {phi, "face5.I.u5F"};
    }
    paint({v5}, F);
    if (!(is(u2, F) && is(u4, F))) return {phi, "face5.I.u5I"};
    paint({v3}, F);
    paint({v2, v4}, I);
    return {phi, "face5.I.u5I.recolor"};
  }
  paint({u1, v3}, F);
  if (is(u4, I)) {
    paint({v1, v4}, F);
    phi[v2] = detail::opposite(partial[u2]);
    phi[v5] = detail::opposite(partial[u5]);
    if (!(is(u2, I) && is(u5, I))) return {phi, "face5.F.u4I"};
    paint({v1}, I);
    return {phi, "face5.F.u4I.recolor"};
  }
  if (!(is(u2, F) && is(u3, F))) {
    X();
    return {phi, "face5.F.X"};
  }
  if (is(u5, I)) {
    Z();
    return {phi, "face5.F.Z"};
  }
  const auto on = cycle_mask(g, c0);
  if (!detail::reaches_outer(g, on, partial, u3, mode)) {
    if (!detail::f_connected(g, partial, u2, u3)) {
      X();
      return {phi, "face5.F.allF.X"};
    }
    Y();
    return {phi, "face5.F.allF.Y"};
  }
  if (!detail::f_connected(g, partial, u1, u2)) {
    Y();
    return {phi, "face5.F.allF.mirror.Y"};
  }
  X();
  return {phi, "face5.F.allF.mirror.X"};
}

/// `partial` colours G except v1..v4; v1' and y carry the identified colour.
inline Lifted lift_tetrad(const PlaneGraph& g, const CycleRef& c0, const Configuration& cfg, const IFColoring& partial,
                          Mode mode) {
  const Vertex v1 = cfg.verts[0], v2 = cfg.verts[1], v3 = cfg.verts[2], v4 = cfg.verts[3];
  const Vertex x = cfg.attach[0], y = cfg.attach[1], v1p = cfg.attach[2], v4p = cfg.attach[3];
  const auto I = Color::I, F = Color::F;
  IFColoring phi = partial;
  auto paint = [&](std::initializer_list<Vertex> vs, Color c) {
    for (Vertex t : vs) phi[t] = c;
  };
  const Color w = partial[v1p];
  if (w == Color::Unset || partial[y] != w)
    throw ReducerError(ReducerErrc::LiftFailed, "identified pair coloured inconsistently");
  if (w == I) {
    paint({v1, v2, v4}, F);
    phi[v3] = detail::opposite(partial[v4p]);
    return {phi, "tetrad.I"};
  }
  if (partial.is(v4p, I)) {
    if (partial.is(x, I)) {
      paint({v1, v3, v4}, F), paint({v2}, I);
      return {phi, "tetrad.F.v4I.xI"};
    }
    paint({v1}, I), paint({v2, v3, v4}, F);
    return {phi, "tetrad.F.v4I.xF"};
  }
  if (partial.is(x, I)) {
    paint({v2, v4}, I), paint({v1, v3}, F);
    return {phi, "tetrad.F.v4F.xI"};
  }
  const auto on = cycle_mask(g, c0);
  const bool a = detail::f_connected(g, partial, v1p, v4p);
  const bool b = detail::f_connected(g, partial, v4p, y);
  const bool pv = detail::reaches_outer(g, on, partial, v1p, mode);
  const bool py = detail::reaches_outer(g, on, partial, y, mode);
  if (!pv && !a) {
    paint({v1, v4}, I), paint({v2, v3}, F);
    return {phi, "tetrad.F.noPv.noA"};
  }
  if (!py && !b) {
    paint({v1, v3}, I), paint({v2, v4}, F);
    return {phi, "tetrad.F.noPy.noB"};
  }
  if (!pv && !b) {
    paint({v1, v3}, I), paint({v2, v4}, F);
    return {phi, "tetrad.F.case1"};
  }
  if (!py && !a) {
    paint({v1, v4}, I), paint({v2, v3}, F);
    return {phi, "tetrad.F.case2"};
  }
  throw ReducerError(ReducerErrc::LiftFailed, "tetrad: F-paths reach C0 from both v1' and y");
}

// ---------------------------------------------------------------------------
// Driver

struct TraceStep {
  int index = 0;
  std::string kind;
  std::string config;
  int sigma_before = 0;
  int sigma_after = 0;
  std::string label;
};

struct ReductionTrace {
  std::vector<TraceStep> steps;

  std::string str() const {
    std::ostringstream os;
    for (auto& s : steps)
      os << "step " << s.index << " kind=" << s.kind << " sigma=" << s.sigma_before << "->" << s.sigma_after
         << " case=" << s.label << "\n";
    return os.str();
  }
};

struct Anomaly {
  std::string kind;    // NoConfiguration, CommonInternalNeighbor, ClassViolated, LiftFailed
  std::string detail;
};

namespace detail {

class Reducer {
 public:
  Reducer(Mode mode, SolveOptions opts) : mode_(mode), opts_(opts) {}

  ReductionTrace trace;
  std::vector<Anomaly> anomalies;
  BranchCoverage coverage;
  bool girth_fallback = false;

  /// C0 need not bound the outer face: both sides are solved and merged.
  IFColoring run(const PlaneGraph& g, const CycleRef& c0, const IFColoring& pre) {
    auto oc = g.outer_cycle();
    if (oc && *oc == CycleRef::canonical(c0.verts)) return solve_outer(g, c0, pre);
    IFColoring phi = pre;
    auto in = inside_part(g, c0);
    auto out = outside_part(g, c0, false, true);
    for (const Relabeled* r : {&in, &out}) {
      auto sub = solve_outer(r->graph, map_cycle(c0, r->to_new), map_coloring(pre, r->to_new, r->graph.order()));
      copy_back(phi, sub, r->to_new);
    }
    return phi;
  }

  IFColoring partition(const PlaneGraph& g) {
    if (girth(g) == 0) {
      IFColoring phi(g.order());
      for (Vertex v = 0; v < g.order(); ++v) phi[v] = Color::F;
      return phi;
    }
    auto cs = short_cycles(g, 12);
    if (cs.empty()) {
      girth_fallback = true;
      auto r = solve(SolveRequest{g, IFColoring(g.order())}, opts_);
      if (!r) throw ReducerError(ReducerErrc::NotSuperextendable, "graph is not near-bipartite");
      return *r;
    }
    const CycleRef& c = cs.front();
    return run(g, c, valid_precolorings(g, c).front());
  }

 private:
  IFColoring solve_outer(const PlaneGraph& g, const CycleRef& c0, const IFColoring& pre) {
    if (g.order() == c0.length()) return pre;
    auto cfg = find_configuration(g, c0);
    if (!cfg) return fallback(g, c0, pre, "NoConfiguration", "no reducible configuration found");

    const std::size_t k = trace.steps.size();
    trace.steps.push_back({static_cast<int>(k), to_string(cfg->kind), cfg->describe(), g.sigma(), 0, ""});
    int after = 0;
    std::string label;
    IFColoring phi;
    try {
      phi = apply(g, c0, pre, *cfg, after, label);
      if (auto c = is_if_coloring(g, phi); !c)
        throw ReducerError(ReducerErrc::LiftFailed, label + ": " + c.describe());
      if (auto c = superextension_violation(g, cycle_mask(g, c0), phi, mode_); !c)
        throw ReducerError(ReducerErrc::LiftFailed, label + ": " + c.describe());
    } catch (const ReducerError& e) {
      if (e.code() != ReducerErrc::ClassViolated && e.code() != ReducerErrc::LiftFailed &&
          e.code() != ReducerErrc::OutOfClass)
        throw;
      std::string kind = cfg->kind == ConfigKind::CommonInternalNeighbor ? "CommonInternalNeighbor"
                                                                         : to_string(e.code());
      phi = fallback(g, c0, pre, kind, cfg->describe() + ": " + e.what());
      label = "fallback";
      after = std::max(after, 0);
    }
    trace.steps[k].sigma_after = after;
    trace.steps[k].label = label;
    if (!label.empty() && label != "fallback") coverage.hit(label);
    return phi;
  }

  IFColoring apply(const PlaneGraph& g, const CycleRef& c0, const IFColoring& pre, const Configuration& cfg,
                   int& after, std::string& label) {
    switch (cfg.kind) {
      case ConfigKind::LowDegreeInternal: {
        Vertex v = cfg.verts[0];
        IFColoring phi(g.order());
        for (auto& r : components_after_delete(g, {v})) {
          after = std::max(after, r.graph.sigma());
          if (r.to_new[c0.verts[0]] >= 0) {
            auto sub = solve_outer(r.graph, map_cycle(c0, r.to_new), map_coloring(pre, r.to_new, r.graph.order()));
            copy_back(phi, sub, r.to_new);
          } else {
            copy_back(phi, partition(r.graph), r.to_new);
          }
        }
        auto l = lift_low_degree(g, v, phi);
        label = l.label;
        return l.phi;
      }
      case ConfigKind::OuterChord: {
        const int len = c0.length();
        int ia = static_cast<int>(std::find(c0.verts.begin(), c0.verts.end(), cfg.verts[0]) - c0.verts.begin());
        int ib = static_cast<int>(std::find(c0.verts.begin(), c0.verts.end(), cfg.verts[1]) - c0.verts.begin());
        IFColoring phi = pre;
        for (auto [s, t] : {std::pair{ia, ib}, std::pair{ib, ia}}) {
          std::vector<Vertex> arc;
          for (int i = s;; i = (i + 1) % len) {
            arc.push_back(c0.verts[i]);
            if (i == t) break;
          }
          auto ci = CycleRef::canonical(arc);
          auto r = inside_part(g, ci);
          after = std::max(after, r.graph.sigma());
          auto sub = solve_outer(r.graph, map_cycle(ci, r.to_new), map_coloring(pre, r.to_new, r.graph.order()));
          copy_back(phi, sub, r.to_new);
        }
        label = "chord.split";
        return phi;
      }
      case ConfigKind::SeparatingSmallCycle: {
        const CycleRef& c = *cfg.cycle;
        IFColoring phi(g.order());
        auto out = outside_part(g, c, true, false);
        after = out.graph.sigma();
        copy_back(phi,
                  solve_outer(out.graph, map_cycle(c0, out.to_new), map_coloring(pre, out.to_new, out.graph.order())),
                  out.to_new);
        auto in = inside_part(g, c);
        after = std::max(after, in.graph.sigma());
        IFColoring on_c = restrict_to(phi, c.verts);
        copy_back(phi, solve_outer(in.graph, map_cycle(c, in.to_new), map_coloring(on_c, in.to_new, in.graph.order())),
                  in.to_new);
        label = "separating.union";
        return phi;
      }
      case ConfigKind::CommonInternalNeighbor:
        throw ReducerError(ReducerErrc::ClassViolated, "internal common neighbour of non-adjacent C0 vertices");
      case ConfigKind::BadInternal5Face:
      case ConfigKind::Tetrad: {
        const bool five = cfg.kind == ConfigKind::BadInternal5Face;
        Reduced r = five ? reduce_5face(g, c0, cfg) : reduce_tetrad(g, c0, cfg);
        after = r.graph.sigma();
        auto sub = solve_outer(r.graph, r.outer, map_coloring(pre, r.to_new, r.graph.order()));
        IFColoring partial(g.order());
        copy_back(partial, sub, r.to_new);
        for (Vertex v : cfg.verts) partial[v] = Color::Unset;
        auto l = five ? lift_5face(g, c0, cfg, partial, mode_) : lift_tetrad(g, c0, cfg, partial, mode_);
        label = l.label;
        return l.phi;
      }
    }
    throw std::logic_error("unhandled configuration");
  }

  IFColoring fallback(const PlaneGraph& g, const CycleRef& c0, const IFColoring& pre, const std::string& kind,
                      const std::string& detail) {
    anomalies.push_back({kind, detail});
    auto r = solve(SolveRequest{g, pre, c0, mode_}, opts_);
    if (!r) throw ReducerError(ReducerErrc::NotSuperextendable, "oracle finds no superextension: " + detail);
    return *r;
  }

  Mode mode_;
  SolveOptions opts_;
};

inline void require_in_class(const PlaneGraph& g) {
  if (auto c = find_forbidden_cycle(g)) {
    std::string s;
    for (Vertex v : c->verts) s += " " + std::to_string(v);
    throw ReducerError(ReducerErrc::OutOfClass, "forbidden " + std::to_string(c->length()) + "-cycle:" + s);
  }
}

}  // namespace detail

struct SuperextendResult {
  IFColoring coloring;
  ReductionTrace trace;
  std::vector<Anomaly> anomalies;
  BranchCoverage coverage;
};

/// Extends the precoloring `pre` of C0 (every other vertex unset) to a
/// certified superextension. Anomalies are recorded, not thrown: the
/// offending subproblem is solved by the oracle instead.
inline SuperextendResult superextend(const PlaneGraph& g, const CycleRef& c0, const IFColoring& pre,
                                     Mode mode = kDefaultMode, SolveOptions opts = {}) {
  if (!is_cycle(g, c0)) throw ReducerError(ReducerErrc::OutOfClass, "C0 is not a cycle of G");
  if (c0.length() > 12) throw ReducerError(ReducerErrc::OutOfClass, "C0 longer than 12");
  detail::require_in_class(g);
  if (pre.size() != g.order()) throw ReducerError(ReducerErrc::InvalidPrecoloring, "wrong length");
  const auto on = cycle_mask(g, c0);
  for (Vertex v = 0; v < g.order(); ++v)
    if ((pre[v] == Color::Unset) == static_cast<bool>(on[v]))
      throw ReducerError(ReducerErrc::InvalidPrecoloring, "exactly the vertices of C0 must be coloured");
  if (auto c = is_if_coloring(g, pre); !c) throw ReducerError(ReducerErrc::InvalidPrecoloring, c.describe());

  detail::Reducer r(mode, opts);
  SuperextendResult out;
  out.coloring = r.run(g, c0, pre);
  if (!is_superextension(g, c0, out.coloring, mode))
    throw std::logic_error("reducer produced an invalid superextension");
  out.trace = std::move(r.trace);
  out.anomalies = std::move(r.anomalies);
  out.coverage = std::move(r.coverage);
  return out;
}

struct NearBipartite {
  std::vector<Vertex> I, F;
  IFColoring coloring;
  bool girth_fallback = false;  // no cycle of length <= 12: solved by the oracle
  ReductionTrace trace;
  std::vector<Anomaly> anomalies;
  BranchCoverage coverage;
};

inline NearBipartite near_bipartite_partition(const PlaneGraph& g, Mode mode = kDefaultMode, SolveOptions opts = {}) {
  detail::require_in_class(g);
  detail::Reducer r(mode, opts);
  NearBipartite out;
  out.coloring = r.partition(g);
  if (!is_if_coloring(g, out.coloring)) throw std::logic_error("reducer produced an invalid IF-coloring");
  for (Vertex v = 0; v < g.order(); ++v) (out.coloring.is(v, Color::I) ? out.I : out.F).push_back(v);
  out.girth_fallback = r.girth_fallback;
  out.trace = std::move(r.trace);
  out.anomalies = std::move(r.anomalies);
  out.coverage = std::move(r.coverage);
  return out;
}

}  // namespace nbp
