#pragma once

#include <algorithm>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "nbp/dsu.hpp"
#include "nbp/plane_graph.hpp"

namespace nbp {

enum class Color : unsigned char { Unset, I, F };

inline char to_char(Color c) { return c == Color::I ? 'I' : c == Color::F ? 'F' : '.'; }

/// How endpoint colours matter for superextension.
///  Strict: a path with both ends on C and all inner vertices coloured F and
///          off C violates, whatever the colours of its ends.
///  Lenient: such a path violates only when both ends are coloured F too.
enum class Mode { Strict, Lenient };

/// Lenient is the default: strict superextension fails on in-class inputs
/// (a vertex off C adjacent to an I and an F vertex of C has no legal colour).
inline constexpr Mode kDefaultMode = Mode::Lenient;

inline const char* to_string(Mode m) { return m == Mode::Strict ? "strict" : "lenient"; }

struct IFColoring {
  std::vector<Color> assignment;

  IFColoring() = default;
  explicit IFColoring(int n) : assignment(n, Color::Unset) {}

  static IFColoring parse(const std::string& s) {
    IFColoring c(static_cast<int>(s.size()));
    for (std::size_t i = 0; i < s.size(); ++i) {
      switch (s[i]) {
        case 'I': c.assignment[i] = Color::I; break;
        case 'F': c.assignment[i] = Color::F; break;
        case '.': break;
        default: throw std::invalid_argument(std::string("bad colour character '") + s[i] + "'");
      }
    }
    return c;
  }

  std::string str() const {
    std::string s;
    for (Color c : assignment) s += to_char(c);
    return s;
  }

  int size() const { return static_cast<int>(assignment.size()); }
  Color operator[](Vertex v) const { return assignment[v]; }
  Color& operator[](Vertex v) { return assignment[v]; }
  bool is(Vertex v, Color c) const { return assignment[v] == c; }
  bool total() const { return std::none_of(assignment.begin(), assignment.end(), [](Color c) { return c == Color::Unset; }); }

  friend bool operator==(const IFColoring&, const IFColoring&) = default;
};

enum class WitnessKind { None, Edge, FCycle, FPath };

struct Certificate {
  bool valid = true;
  WitnessKind kind = WitnessKind::None;
  std::vector<Vertex> witness;

  explicit operator bool() const { return valid; }

  std::string describe() const {
    if (valid) return "valid";
    std::string s = kind == WitnessKind::Edge ? "I-I edge" : kind == WitnessKind::FCycle ? "F-cycle" : "F-path";
    for (std::size_t i = 0; i < witness.size(); ++i) s += (i ? "," : " ") + std::to_string(witness[i]);
    return s;
  }
};

class NotAnIFColoring : public std::runtime_error {
 public:
  explicit NotAnIFColoring(Certificate c)
      : std::runtime_error("not an IF-coloring: " + c.describe()), cert(std::move(c)) {}
  Certificate cert;
};

inline Certificate is_independent(const PlaneGraph& g, const IFColoring& phi) {
  for (Vertex u = 0; u < g.order(); ++u)
    if (phi.is(u, Color::I))
      for (Vertex v : g.neighbors(u))
        if (u < v && phi.is(v, Color::I)) return {false, WitnessKind::Edge, {u, v}};
  return {};
}

/// Path a..b through vertices coloured F avoiding `forbidden` and, when
/// skip_edge is set, not using the edge {a,b} directly.
inline std::optional<std::vector<Vertex>> f_path_between(const PlaneGraph& g, const IFColoring& phi, Vertex a,
                                                         Vertex b, const std::vector<Vertex>& forbidden = {},
                                                         bool skip_edge = false) {
  if (!phi.is(a, Color::F) || !phi.is(b, Color::F)) return std::nullopt;
  std::vector<char> blocked(g.order(), 0);
  for (Vertex v : forbidden) blocked[v] = 1;
  if (blocked[a] || blocked[b]) return std::nullopt;
  std::vector<Vertex> parent(g.order(), -1);
  std::queue<Vertex> q;
  parent[a] = a;
  q.push(a);
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop();
    for (Vertex w : g.neighbors(v)) {
      if (parent[w] >= 0 || blocked[w] || !phi.is(w, Color::F)) continue;
      if (skip_edge && v == a && w == b) continue;
      parent[w] = v;
      if (w == b) {
        std::vector<Vertex> path{b};
        while (path.back() != a) path.push_back(parent[path.back()]);
        std::reverse(path.begin(), path.end());
        return path;
      }
      q.push(w);
    }
  }
  return std::nullopt;
}

inline Certificate induces_forest(const PlaneGraph& g, const IFColoring& phi) {
  Dsu dsu(g.order());
  for (Vertex u = 0; u < g.order(); ++u) {
    if (!phi.is(u, Color::F)) continue;
    for (Vertex v : g.neighbors(u)) {
      if (v < u || !phi.is(v, Color::F)) continue;
      if (!dsu.unite(u, v)) {
        auto p = f_path_between(g, phi, u, v, {}, true);
        return {false, WitnessKind::FCycle, p.value_or(std::vector<Vertex>{u, v})};
      }
    }
  }
  return {};
}

inline Certificate is_if_coloring(const PlaneGraph& g, const IFColoring& phi) {
  if (auto c = is_independent(g, phi); !c) return c;
  return induces_forest(g, phi);
}

/// Off-cycle F components touching two qualifying cycle vertices. `on_cycle`
/// marks V(C). Only coloured vertices are considered.
inline Certificate superextension_violation(const PlaneGraph& g, const std::vector<char>& on_cycle,
                                            const IFColoring& phi, Mode mode) {
  auto qualifies = [&](Vertex c) { return mode == Mode::Strict || phi.is(c, Color::F); };
  std::vector<int> comp(g.order(), -1);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (on_cycle[s] || !phi.is(s, Color::F) || comp[s] >= 0) continue;
    std::vector<Vertex> members{s};
    comp[s] = s;
    for (std::size_t i = 0; i < members.size(); ++i)
      for (Vertex w : g.neighbors(members[i]))
        if (!on_cycle[w] && phi.is(w, Color::F) && comp[w] < 0) {
          comp[w] = s;
          members.push_back(w);
        }
    // first two distinct qualifying cycle vertices adjacent to the component
    Vertex first = -1, firstVia = -1, second = -1, secondVia = -1;
    for (Vertex x : members)
      for (Vertex c : g.neighbors(x)) {
        if (!on_cycle[c] || !qualifies(c)) continue;
        if (first < 0) {
          first = c;
          firstVia = x;
        } else if (c != first && second < 0) {
          second = c;
          secondVia = x;
        }
      }
    if (second < 0) continue;
    // path firstVia .. secondVia inside the component
    std::vector<Vertex> parent(g.order(), -1);
    std::queue<Vertex> q;
    parent[firstVia] = firstVia;
    q.push(firstVia);
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      for (Vertex w : g.neighbors(v))
        if (comp[w] == s && parent[w] < 0) {
          parent[w] = v;
          q.push(w);
        }
    }
    std::vector<Vertex> path{second, secondVia};
    while (path.back() != firstVia) path.push_back(parent[path.back()]);
    path.push_back(first);
    std::reverse(path.begin(), path.end());
    return {false, WitnessKind::FPath, path};
  }
  return {};
}

inline std::vector<char> cycle_mask(const PlaneGraph& g, const CycleRef& c) {
  std::vector<char> m(g.order(), 0);
  for (Vertex v : c.verts) m[v] = 1;
  return m;
}

/// Checks that phi is an IF-coloring with no forbidden path between two
/// vertices of C (see Mode). Throws NotAnIFColoring otherwise.
inline Certificate is_superextension(const PlaneGraph& g, const CycleRef& c, const IFColoring& phi,
                                     Mode mode = kDefaultMode) {
  if (auto base = is_if_coloring(g, phi); !base) throw NotAnIFColoring(base);
  return superextension_violation(g, cycle_mask(g, c), phi, mode);
}

/// All IF-colorings of G[V(C)], as colorings of G with everything off C
/// unset. Bit i of the enumeration index colours c.verts[i] with I.
inline std::vector<IFColoring> valid_precolorings(const PlaneGraph& g, const CycleRef& c) {
  const int k = c.length();
  std::vector<IFColoring> out;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (g.adjacent(c.verts[i], c.verts[j])) edges.push_back({i, j});
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    bool ok = true;
    Dsu dsu(k);
    for (auto [i, j] : edges) {
      bool ii = mask >> i & 1u, jj = mask >> j & 1u;
      if (ii && jj) ok = false;
      else if (!ii && !jj && !dsu.unite(i, j)) ok = false;
      if (!ok) break;
    }
    if (!ok) continue;
    IFColoring phi(g.order());
    for (int i = 0; i < k; ++i) phi[c.verts[i]] = (mask >> i & 1u) ? Color::I : Color::F;
    out.push_back(std::move(phi));
  }
  return out;
}

inline IFColoring restrict_to(const IFColoring& phi, const std::vector<Vertex>& keep) {
  IFColoring out(phi.size());
  for (Vertex v : keep) out[v] = phi[v];
  return out;
}

}  // namespace nbp
