#pragma once

// Definition-level checks used as oracles in tests. They deliberately avoid
// union-find and the search code of the library.

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "nbp/coloring.hpp"
#include "nbp/plane_graph.hpp"

namespace nbp::testing {

inline bool brute_independent(const PlaneGraph& g, const IFColoring& phi) {
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v : g.neighbors(u))
      if (phi.is(u, Color::I) && phi.is(v, Color::I)) return false;
  return true;
}

// acyclic iff |E_F| = |V_F| - #components(F)
inline bool brute_forest(const PlaneGraph& g, const IFColoring& phi) {
  int vf = 0, ef = 0, comps = 0;
  std::vector<char> seen(g.order(), 0);
  for (Vertex u = 0; u < g.order(); ++u) {
    if (!phi.is(u, Color::F)) continue;
    ++vf;
    for (Vertex v : g.neighbors(u))
      if (u < v && phi.is(v, Color::F)) ++ef;
    if (seen[u]) continue;
    ++comps;
    std::vector<Vertex> st{u};
    seen[u] = 1;
    while (!st.empty()) {
      Vertex x = st.back();
      st.pop_back();
      for (Vertex y : g.neighbors(x))
        if (phi.is(y, Color::F) && !seen[y]) {
          seen[y] = 1;
          st.push_back(y);
        }
    }
  }
  return ef == vf - comps;
}

// Enumerates simple paths with both ends on C, at least one inner vertex,
// and every inner vertex off C and coloured F.
inline bool brute_superextension(const PlaneGraph& g, const CycleRef& c, const IFColoring& phi, Mode mode) {
  std::vector<char> on(g.order(), 0);
  for (Vertex v : c.verts) on[v] = 1;
  std::vector<char> used(g.order(), 0);
  bool bad = false;
  std::function<void(Vertex, Vertex, int)> walk = [&](Vertex start, Vertex x, int inner) {
    for (Vertex y : g.neighbors(x)) {
      if (bad) return;
      if (on[y]) {
        if (y != start && inner > 0 &&
            (mode == Mode::Strict || (phi.is(start, Color::F) && phi.is(y, Color::F))))
          bad = true;
        continue;
      }
      if (used[y] || !phi.is(y, Color::F)) continue;
      used[y] = 1;
      walk(start, y, inner + 1);
      used[y] = 0;
    }
  };
  for (Vertex s : c.verts) walk(s, s, 0);
  return !bad;
}

/// Exhaustive count over all 2^k completions of `fixed`.
inline std::uint64_t brute_count(const PlaneGraph& g, const IFColoring& fixed, const std::optional<CycleRef>& wrt,
                                 Mode mode) {
  std::vector<Vertex> free;
  for (Vertex v = 0; v < g.order(); ++v)
    if (fixed[v] == Color::Unset) free.push_back(v);
  std::uint64_t total = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free.size()); ++mask) {
    IFColoring phi = fixed;
    for (std::size_t i = 0; i < free.size(); ++i) phi[free[i]] = (mask >> i & 1u) ? Color::I : Color::F;
    if (!brute_independent(g, phi) || !brute_forest(g, phi)) continue;
    if (wrt && !brute_superextension(g, *wrt, phi, mode)) continue;
    ++total;
  }
  return total;
}

/// Lengths of all simple cycles up to max_len, by DFS from each cycle's least
/// vertex over plain adjacency.
inline std::set<int> brute_cycle_lengths(const PlaneGraph& g, int max_len) {
  std::set<int> out;
  std::vector<char> used(g.order(), 0);
  std::function<void(Vertex, Vertex, int)> walk = [&](Vertex s, Vertex x, int len) {
    for (Vertex y : g.neighbors(x)) {
      if (y == s && len >= 3) out.insert(len);
      if (y <= s || used[y] || len + 1 > max_len) continue;
      used[y] = 1;
      walk(s, y, len + 1);
      used[y] = 0;
    }
  };
  for (Vertex s = 0; s < g.order(); ++s) {
    used[s] = 1;
    walk(s, s, 1);
    used[s] = 0;
  }
  return out;
}

}  // namespace nbp::testing
