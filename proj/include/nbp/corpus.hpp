#pragma once

// Desk-scale graphs without {4,6,8}-cycles: class checks, seeded
// generators, and curated instances stored as .pg files.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "nbp/discharging.hpp"
#include "nbp/io.hpp"
#include "nbp/plane_graph.hpp"

namespace nbp {

struct ClassReport {
  bool in_class = true;
  std::optional<CycleRef> forbidden;
  int girth = 0;                  // 0 for forests
  std::vector<int> cycle_lengths;  // distinct lengths <= 12 that occur

  std::string str() const {
    std::ostringstream os;
    if (in_class) {
      os << "in-class";
    } else {
      os << "out-of-class forbidden=" << forbidden->length() << "-cycle ";
      for (std::size_t i = 0; i < forbidden->verts.size(); ++i) os << (i ? "," : "") << forbidden->verts[i];
    }
    os << " girth=";
    if (girth == 0)
      os << "none";
    else
      os << girth;
    os << " cycles<=12=";
    if (cycle_lengths.empty()) os << "none";
    for (std::size_t i = 0; i < cycle_lengths.size(); ++i) os << (i ? "," : "") << cycle_lengths[i];
    return os.str();
  }
};

/// Simplicity, connectivity and genus are enforced when a PlaneGraph is
/// built; this adds the forbidden-cycle test and cycle statistics.
inline ClassReport verify_class(const PlaneGraph& g) {
  ClassReport r;
  r.forbidden = find_forbidden_cycle(g);
  r.in_class = !r.forbidden;
  r.girth = girth(g);
  std::set<int> lens;
  for_each_short_cycle(g, 12, [&](const std::vector<Vertex>& c) {
    lens.insert(static_cast<int>(c.size()));
    return true;
  });
  r.cycle_lengths.assign(lens.begin(), lens.end());
  return r;
}

struct GraphStats {
  int n = 0, m = 0, girth = 0;
  std::map<int, int> face_degrees;  // degree -> number of faces, outer face included
};

inline GraphStats stats_of(const PlaneGraph& g) {
  GraphStats s{g.order(), g.size(), girth(g), {}};
  for (auto& f : g.faces()) ++s.face_degrees[f.degree()];
  return s;
}

struct CorpusEntry {
  std::string provenance;  // "<generator>:seed=<s>" or "curated:<name>"
  PlaneGraph graph;
  GraphStats stats;
  std::optional<std::string> expect;  // companion .expect contents
};

class CorpusError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::uint32_t draw(std::mt19937& rng, std::uint32_t bound) { return rng() % bound; }

/// Fisher-Yates with raw engine draws, so output does not depend on the
/// standard library's distribution implementations.
template <class T>
void shuffle_with(std::vector<T>& v, std::mt19937& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[draw(rng, static_cast<std::uint32_t>(i))]);
}

/// Same graph with labels permuted: new label of v is perm[v].
inline PlaneGraph relabel(const PlaneGraph& g, const std::vector<Vertex>& perm) {
  std::vector<std::vector<Vertex>> rot(g.order());
  for (Vertex v = 0; v < g.order(); ++v)
    for (Vertex w : g.neighbors(v)) rot[perm[v]].push_back(perm[w]);
  const auto& ob = g.outer();
  if (g.order() == 1) return PlaneGraph::with_outer_dart(1, rot, 0, 0);
  return PlaneGraph::with_outer_dart(g.order(), std::move(rot), perm[ob[0]], perm[ob[1]]);
}

inline PlaneGraph largest_face_outer(int n, std::vector<std::vector<Vertex>> rot) {
  if (n == 1) return PlaneGraph::with_outer_dart(1, std::move(rot), 0, 0);
  PlaneGraph g = PlaneGraph::with_outer_dart(n, rot, 0, rot[0][0]);
  int best = 0;
  for (int f = 1; f < static_cast<int>(g.faces().size()); ++f)
    if (g.faces()[f].degree() > g.faces()[best].degree()) best = f;
  const auto& b = g.faces()[best].boundary;
  return PlaneGraph::with_outer_dart(n, std::move(rot), b[0], b[1]);
}

inline double cross(std::pair<double, double> o, std::pair<double, double> a, std::pair<double, double> b) {
  return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
}

inline bool crosses(const std::vector<std::pair<double, double>>& p, std::pair<int, int> e, std::pair<int, int> f) {
  if (e.first == f.first || e.first == f.second || e.second == f.first || e.second == f.second) return false;
  double d1 = cross(p[e.first], p[e.second], p[f.first]);
  double d2 = cross(p[e.first], p[e.second], p[f.second]);
  double d3 = cross(p[f.first], p[f.second], p[e.first]);
  double d4 = cross(p[f.first], p[f.second], p[e.second]);
  return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0));
}

}  // namespace detail

/// Outer face = face with the largest signed area.
inline PlaneGraph with_geometric_outer(const std::vector<std::pair<double, double>>& pts,
                                       std::vector<std::vector<Vertex>> rot) {
  const int n = static_cast<int>(pts.size());
  if (n == 1) return PlaneGraph::with_outer_dart(1, rot, 0, 0);
  PlaneGraph g = PlaneGraph::with_outer_dart(n, rot, 0, rot[0][0]);
  int best = -1;
  double best_area = -1e300;
  for (int f = 0; f < static_cast<int>(g.faces().size()); ++f) {
    const auto& b = g.faces()[f].boundary;
    double area = 0;
    for (std::size_t i = 0; i < b.size(); ++i) {
      auto [x1, y1] = pts[b[i]];
      auto [x2, y2] = pts[b[(i + 1) % b.size()]];
      area += x1 * y2 - x2 * y1;
    }
    if (area > best_area) {
      best_area = area;
      best = f;
    }
  }
  const auto& b = g.faces()[best].boundary;
  return PlaneGraph::with_outer_dart(n, std::move(rot), b[0], b[1]);
}

/// Connected straight-line graph on n random lattice points: a random
/// maximal non-crossing edge set, then each edge dropped with probability
/// drop_pct/100 unless that disconnects the graph.
inline PlaneGraph random_straight_line_graph(int n, int drop_pct, std::mt19937& rng) {
  std::vector<std::pair<double, double>> pts(n);
  for (auto& p : pts) p = {static_cast<double>(detail::draw(rng, 10000)), static_cast<double>(detail::draw(rng, 10000))};
  std::vector<std::pair<int, int>> cand;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) cand.push_back({i, j});
  detail::shuffle_with(cand, rng);
  std::vector<std::pair<int, int>> edges;
  for (auto e : cand) {
    bool ok = true;
    for (auto f : edges)
      if (detail::crosses(pts, e, f)) {
        ok = false;
        break;
      }
    // reject edges passing through a third point
    for (int k = 0; k < n && ok; ++k) {
      if (k == e.first || k == e.second) continue;
      if (detail::cross(pts[e.first], pts[e.second], pts[k]) == 0) {
        auto [ax, ay] = pts[e.first];
        auto [bx, by] = pts[e.second];
        auto [kx, ky] = pts[k];
        if (std::min(ax, bx) <= kx && kx <= std::max(ax, bx) && std::min(ay, by) <= ky && ky <= std::max(ay, by))
          ok = false;
      }
    }
    if (ok) edges.push_back(e);
  }
  detail::shuffle_with(edges, rng);
  for (std::size_t i = 0; i < edges.size();) {
    if (static_cast<int>(detail::draw(rng, 100)) >= drop_pct) {
      ++i;
      continue;
    }
    std::vector<std::pair<int, int>> rest(edges);
    rest.erase(rest.begin() + static_cast<long>(i));
    std::vector<std::vector<int>> adj(n);
    for (auto [a, b] : rest) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
    std::vector<char> seen(n, 0);
    std::vector<int> st{0};
    seen[0] = 1;
    int cnt = 1;
    while (!st.empty()) {
      int v = st.back();
      st.pop_back();
      for (int w : adj[v])
        if (!seen[w]) {
          seen[w] = 1;
          ++cnt;
          st.push_back(w);
        }
    }
    if (cnt == n)
      edges = std::move(rest);
    else
      ++i;
  }
  std::vector<std::pair<Vertex, Vertex>> es(edges.begin(), edges.end());
  return with_geometric_outer(pts, rotation_from_coordinates(pts, es));
}

/// Every edge of `base` replaced by a path with k inner vertices; labels are
/// then permuted by the seed. Throws CorpusError if the result has a
/// forbidden cycle.
inline CorpusEntry gen_subdivision(const PlaneGraph& base, int k, std::uint32_t seed) {
  if (k < 0) throw CorpusError("PreconditionViolated: k must be >= 0");
  const int n0 = base.order();
  std::vector<std::vector<Vertex>> rot(n0);
  // dart (u,v) with u < v owns inner vertices first + 0..k-1 from u to v
  std::map<std::pair<Vertex, Vertex>, Vertex> first;
  int next = n0;
  for (Vertex u = 0; u < n0; ++u)
    for (Vertex v : base.neighbors(u))
      if (u < v) {
        first[{u, v}] = next;
        next += k;
      }
  rot.resize(next);
  auto inner = [&](Vertex u, Vertex v, int i) {  // i-th inner vertex walking from u to v
    return u < v ? first[{u, v}] + i : first[{v, u}] + (k - 1 - i);
  };
  for (Vertex u = 0; u < n0; ++u)
    for (Vertex v : base.neighbors(u)) rot[u].push_back(k ? inner(u, v, 0) : v);
  for (Vertex u = 0; u < n0; ++u)
    for (Vertex v : base.neighbors(u)) {
      if (u > v || k == 0) continue;
      for (int i = 0; i < k; ++i) {
        Vertex x = inner(u, v, i);
        Vertex prev = i == 0 ? u : inner(u, v, i - 1);
        Vertex nxt = i == k - 1 ? v : inner(u, v, i + 1);
        rot[x] = {prev, nxt};
      }
    }
  const auto& ob = base.outer();
  PlaneGraph g = n0 == 1 ? PlaneGraph::with_outer_dart(1, rot, 0, 0)
                         : PlaneGraph::with_outer_dart(next, rot, ob[0], k ? inner(ob[0], ob[1], 0) : ob[1]);
  if (auto bad = find_forbidden_cycle(g))
    throw CorpusError("PreconditionViolated: subdivision has a " + std::to_string(bad->length()) + "-cycle");
  std::mt19937 rng(seed);
  std::vector<Vertex> perm(g.order());
  for (Vertex v = 0; v < g.order(); ++v) perm[v] = v;
  detail::shuffle_with(perm, rng);
  PlaneGraph out = detail::relabel(g, perm);
  return {"subdivision:k=" + std::to_string(k) + ":seed=" + std::to_string(seed), out, stats_of(out), {}};
}

/// Cactus of n_blocks blocks, each a triangle (probability 2/3, always for the
/// first block) or a bridge, hung at a random existing vertex.
inline CorpusEntry gen_triangle_cactus(int n_blocks, std::uint32_t seed) {
  if (n_blocks < 1) throw CorpusError("PreconditionViolated: n_blocks must be >= 1");
  std::mt19937 rng(seed);
  std::vector<std::vector<Vertex>> rot(1);
  for (int b = 0; b < n_blocks; ++b) {
    Vertex v = static_cast<Vertex>(detail::draw(rng, static_cast<std::uint32_t>(rot.size())));
    bool tri = b == 0 || detail::draw(rng, 3) != 0;
    auto pos = rot[v].begin() + detail::draw(rng, static_cast<std::uint32_t>(rot[v].size() + 1));
    Vertex a = static_cast<Vertex>(rot.size());
    if (tri) {
      Vertex c = a + 1;
      rot[v].insert(pos, {a, c});
      rot.push_back({c, v});
      rot.push_back({v, a});
    } else {
      rot[v].insert(pos, a);
      rot.push_back({v});
    }
  }
  PlaneGraph g = detail::largest_face_outer(static_cast<int>(rot.size()), rot);
  return {"cactus:blocks=" + std::to_string(n_blocks) + ":seed=" + std::to_string(seed), g, stats_of(g), {}};
}

namespace detail {

// simple path of exactly len edges from a to b in adj
inline bool has_path_of_length(const std::vector<std::vector<int>>& adj, int a, int b, int len) {
  std::vector<char> used(adj.size(), 0);
  std::function<bool(int, int)> go = [&](int x, int left) {
    if (left == 0) return x == b;
    if (x == b) return false;
    used[x] = 1;
    for (int y : adj[x])
      if (!used[y] && go(y, left - 1)) {
        used[x] = 0;
        return true;
      }
    used[x] = 0;
    return false;
  };
  return go(a, len);
}

}  // namespace detail

/// Random lattice points; non-crossing straight edges are offered in seeded
/// order and kept (with probability keep_pct/100) when they close no 4-, 6-
/// or 8-cycle. Retries with the same engine until the result is connected.
inline CorpusEntry gen_greedy(int n, std::uint32_t seed, int keep_pct = 100) {
  if (n < 1) throw CorpusError("PreconditionViolated: n must be >= 1");
  std::mt19937 rng(seed);
  for (;;) {
    std::vector<std::pair<double, double>> pts(n);
    for (auto& p : pts)
      p = {static_cast<double>(detail::draw(rng, 1000)), static_cast<double>(detail::draw(rng, 1000))};
    std::vector<std::pair<int, int>> cand;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) cand.push_back({i, j});
    detail::shuffle_with(cand, rng);
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> adj(n);
    for (auto e : cand) {
      bool ok = static_cast<int>(detail::draw(rng, 100)) < keep_pct;
      for (auto f : edges)
        if (ok && detail::crosses(pts, e, f)) ok = false;
      for (int k = 0; k < n && ok; ++k) {
        if (k == e.first || k == e.second) continue;
        if (detail::cross(pts[e.first], pts[e.second], pts[k]) == 0) {
          auto [ax, ay] = pts[e.first];
          auto [bx, by] = pts[e.second];
          auto [kx, ky] = pts[k];
          if (std::min(ax, bx) <= kx && kx <= std::max(ax, bx) && std::min(ay, by) <= ky && ky <= std::max(ay, by))
            ok = false;
        }
      }
      for (int len : {3, 5, 7})
        if (ok && detail::has_path_of_length(adj, e.first, e.second, len)) ok = false;
      if (!ok) continue;
      edges.push_back(e);
      adj[e.first].push_back(e.second);
      adj[e.second].push_back(e.first);
    }
    std::vector<char> seen(n, 0);
    std::vector<int> st{0};
    seen[0] = 1;
    int cnt = 1;
    while (!st.empty()) {
      int v = st.back();
      st.pop_back();
      for (int w : adj[v])
        if (!seen[w]) seen[w] = 1, ++cnt, st.push_back(w);
    }
    if (cnt != n) continue;
    std::vector<std::pair<Vertex, Vertex>> es(edges.begin(), edges.end());
    PlaneGraph g = with_geometric_outer(pts, rotation_from_coordinates(pts, es));
    return {"greedy:n=" + std::to_string(n) + ":keep=" + std::to_string(keep_pct) + ":seed=" + std::to_string(seed), g,
            stats_of(g), {}};
  }
}

/// Starts from a cycle of length outer_len (3..12, not 4, 6 or 8) and adds
/// seeded ears: a path of 1..8 edges drawn inside an internal face between two
/// of its vertices, kept only if the graph stays in-class. Stops at n vertices
/// or after `tries` attempts. The starting cycle stays the outer face.
inline CorpusEntry gen_ears(int n, int outer_len, std::uint32_t seed, int tries = 400) {
  if (outer_len < 3 || outer_len > 12 || outer_len == 4 || outer_len == 6 || outer_len == 8 || n < outer_len)
    throw CorpusError("PreconditionViolated: bad outer length or n");
  std::mt19937 rng(seed);
  std::vector<std::vector<Vertex>> rot(outer_len);
  for (int i = 0; i < outer_len; ++i) rot[i] = {(i + 1) % outer_len, (i + outer_len - 1) % outer_len};
  PlaneGraph g = PlaneGraph::with_outer_dart(outer_len, rot, 1, 0);
  for (int t = 0; t < tries && g.order() < n; ++t) {
    const auto& fs = g.faces();
    std::vector<int> inner;
    for (int f = 0; f < static_cast<int>(fs.size()); ++f)
      if (f != g.outer_face()) inner.push_back(f);
    const auto& b = fs[inner[detail::draw(rng, static_cast<std::uint32_t>(inner.size()))]].boundary;
    const auto len = static_cast<std::uint32_t>(b.size());
    // favour internal 2-vertices as ends so that internal degrees grow
    std::vector<std::uint32_t> twos;
    for (std::uint32_t k = 0; k < len; ++k)
      if (b[k] >= outer_len && g.degree(b[k]) == 2) twos.push_back(k);
    auto pick = [&] {
      if (!twos.empty() && detail::draw(rng, 4) != 0) return twos[detail::draw(rng, static_cast<std::uint32_t>(twos.size()))];
      return detail::draw(rng, len);
    };
    std::uint32_t i = pick(), j = pick();
    int edges = 1 + static_cast<int>(detail::draw(rng, 8));
    Vertex a = b[i], c = b[j];
    if (a == c || g.order() + edges - 1 > n || (edges == 1 && g.adjacent(a, c))) continue;
    auto r = g.rotation();
    const int base = g.order();
    std::vector<Vertex> path{a};
    for (int k = 0; k < edges - 1; ++k) path.push_back(base + k);
    path.push_back(c);
    r.resize(base + edges - 1);
    for (int k = 1; k + 1 < static_cast<int>(path.size()); ++k) r[path[k]] = {path[k - 1], path[k + 1]};
    // open the face corner at position idx: new neighbour goes just before the predecessor
    auto open = [&](std::uint32_t idx, Vertex nb) {
      Vertex v = b[idx], pred = b[(idx + len - 1) % len];
      auto& rv = r[v];
      rv.insert(std::find(rv.begin(), rv.end(), pred), nb);
    };
    open(i, path[1]);
    open(j, path[path.size() - 2]);
    const auto& ob = g.outer();
    const int m = static_cast<int>(r.size());
    PlaneGraph h = PlaneGraph::with_outer_dart(m, std::move(r), ob[0], ob[1]);
    if (!has_forbidden_cycles(h)) g = std::move(h);
  }
  return {"ears:n=" + std::to_string(n) + ":outer=" + std::to_string(outer_len) + ":seed=" + std::to_string(seed), g,
          stats_of(g), {}};
}

/// Curated instances: every <name>.pg in dir, by name, with <name>.expect
/// attached when present.
inline std::vector<CorpusEntry> curated(const std::string& dir) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  for (auto& e : fs::directory_iterator(dir))
    if (e.path().extension() == ".pg") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<CorpusEntry> out;
  for (auto& p : files) {
    PlaneGraph g = read_pg(p.string());
    CorpusEntry e{"curated:" + p.stem().string(), g, stats_of(g), {}};
    fs::path ex = p;
    ex.replace_extension(".expect");
    if (fs::exists(ex)) {
      std::ifstream in(ex);
      std::stringstream ss;
      ss << in.rdbuf();
      e.expect = ss.str();
    }
    out.push_back(std::move(e));
  }
  return out;
}

inline std::optional<CorpusEntry> curated_entry(const std::string& dir, const std::string& name) {
  for (auto& e : curated(dir))
    if (e.provenance == "curated:" + name) return e;
  return std::nullopt;
}

/// Small planar bases for gen_subdivision: triangle, square, k4, cube, prism.
inline PlaneGraph named_base(const std::string& name) {
  std::vector<std::pair<double, double>> p;
  std::vector<std::pair<Vertex, Vertex>> e;
  if (name == "triangle") {
    p = {{0, 0}, {4, 0}, {2, 4}};
    e = {{0, 1}, {1, 2}, {2, 0}};
  } else if (name == "square") {
    p = {{0, 0}, {4, 0}, {4, 4}, {0, 4}};
    e = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  } else if (name == "k4") {
    p = {{0, 0}, {4, 0}, {2, 4}, {2, 1.5}};
    e = {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 3}, {2, 3}};
  } else if (name == "cube") {
    p = {{0, 0}, {4, 0}, {4, 4}, {0, 4}, {1, 1}, {3, 1}, {3, 3}, {1, 3}};
    e = {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4}, {0, 4}, {1, 5}, {2, 6}, {3, 7}};
  } else if (name == "prism") {
    p = {{0, 0}, {6, 0}, {3, 5}, {2, 1}, {4, 1}, {3, 3}};
    e = {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}};
  } else {
    throw CorpusError("unknown base graph: " + name);
  }
  return with_geometric_outer(p, rotation_from_coordinates(p, e));
}

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  return out;
}

inline int to_int(const std::string& s) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw CorpusError("not an integer: '" + s + "'");
}

}  // namespace detail

/// Generator dispatch for the command line. Family ids:
///   cactus:<blocks>   greedy:<n>[:<keep_pct>]   ears:<n>:<outer_len>
///   subdivision:<base>:<k>   (base as in named_base; the seed permutes labels)
inline CorpusEntry gen_family(const std::string& family, std::uint32_t seed) {
  auto parts = detail::split(family, ':');
  const std::size_t np = parts.size();
  if (np == 2 && parts[0] == "cactus") return gen_triangle_cactus(detail::to_int(parts[1]), seed);
  if ((np == 2 || np == 3) && parts[0] == "greedy")
    return gen_greedy(detail::to_int(parts[1]), seed, np == 3 ? detail::to_int(parts[2]) : 100);
  if (np == 3 && parts[0] == "ears") return gen_ears(detail::to_int(parts[1]), detail::to_int(parts[2]), seed);
  if (np == 3 && parts[0] == "subdivision") {
    auto e = gen_subdivision(named_base(parts[1]), detail::to_int(parts[2]), seed);
    e.provenance = "subdivision:base=" + parts[1] + ":k=" + parts[2] + ":seed=" + std::to_string(seed);
    return e;
  }
  throw CorpusError("unknown family: " + family);
}

struct CoverageFlags {
  bool with_internal = false, without_internal = false;
  bool face3 = false, face5 = false, face7 = false, face9plus = false;
  bool special2 = false, bad3 = false;

  void merge(const CoverageFlags& o) {
    with_internal |= o.with_internal, without_internal |= o.without_internal;
    face3 |= o.face3, face5 |= o.face5, face7 |= o.face7, face9plus |= o.face9plus;
    special2 |= o.special2, bad3 |= o.bad3;
  }
  std::vector<std::string> missing() const {
    std::vector<std::string> out;
    auto need = [&](bool b, const char* name) {
      if (!b) out.push_back(name);
    };
    need(with_internal, "internal-vertices");
    need(without_internal, "no-internal-vertices");
    need(face3, "3-face");
    need(face5, "5-face");
    need(face7, "7-face");
    need(face9plus, "9+-face");
    need(special2, "special-2-vertex");
    need(bad3, "bad-3-vertex");
    return out;
  }
};

/// Face flags refer to internal faces.
inline CoverageFlags flags_of(const PlaneGraph& g) {
  CoverageFlags f;
  auto c = classify(g);
  bool internal = std::any_of(c.internal.begin(), c.internal.end(), [](char x) { return x != 0; });
  f.with_internal = internal;
  f.without_internal = !internal;
  for (int i = 0; i < static_cast<int>(g.faces().size()); ++i) {
    if (!c.face_internal[i]) continue;
    int d = g.faces()[i].degree();
    f.face3 |= d == 3, f.face5 |= d == 5, f.face7 |= d == 7, f.face9plus |= d >= 9;
  }
  f.special2 = std::any_of(c.special2.begin(), c.special2.end(), [](char x) { return x != 0; });
  f.bad3 = std::any_of(c.bad3.begin(), c.bad3.end(), [](char x) { return x != 0; });
  return f;
}

/// The generated part of the desk corpus: fixed families and seeds.
inline std::vector<std::pair<std::string, std::uint32_t>> desk_generators() {
  std::vector<std::pair<std::string, std::uint32_t>> out = {
      {"subdivision:triangle:0", 1}, {"subdivision:triangle:2", 1}, {"subdivision:k4:2", 1},
      {"subdivision:square:2", 3},   {"subdivision:triangle:4", 2},
  };
  for (std::uint32_t s = 1; s <= 5; ++s) out.push_back({"cactus:" + std::to_string(2 + s), s});
  for (std::uint32_t s = 1; s <= 8; ++s) out.push_back({"greedy:" + std::to_string(8 + s), s});
  const int outers[] = {5, 7, 9, 10, 11, 12};
  for (std::uint32_t s = 1; s <= 12; ++s)
    out.push_back({"ears:" + std::to_string(11 + s % 6) + ":" + std::to_string(outers[s % 6]), s});
  return out;
}

/// Curated instances with at most max_n vertices followed by the generated
/// entries of desk_generators() that fit the same bound.
inline std::vector<CorpusEntry> desk_corpus(const std::string& curated_dir, int max_n = 16) {
  std::vector<CorpusEntry> out;
  for (auto& e : curated(curated_dir))
    if (e.graph.order() <= max_n) out.push_back(std::move(e));
  for (auto& [family, seed] : desk_generators()) {
    auto e = gen_family(family, seed);
    if (e.graph.order() <= max_n) out.push_back(std::move(e));
  }
  return out;
}

}  // namespace nbp
