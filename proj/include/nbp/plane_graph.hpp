#pragma once

// Combinatorial plane graphs given by a rotation system.
//
// Conventions (pinned by tests):
//  * rot[v] lists the neighbours of v in clockwise order.
//  * The successor of dart (u->v) on its face is (v->w) where w immediately
//    precedes u in rot[v]. In a drawing with the y axis pointing up, the face
//    of a dart lies on its right: bounded faces are walked clockwise and the
//    outer face counterclockwise.
//  * A face boundary stores the tail of each dart on the walk, so its size is
//    the face degree (number of edge sides).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nbp {

using Vertex = int;

enum class GraphErrc {
  IndexOutOfRange,
  NotSymmetric,
  NotSimple,
  NotConnected,
  NotGenusZero,
  OuterNotAFace,
  NotACycle,
  Disconnects,
  NotOnCommonFace,
  CreatesMultiEdge,
};

inline const char* to_string(GraphErrc c) {
  switch (c) {
    case GraphErrc::IndexOutOfRange: return "IndexOutOfRange";
    case GraphErrc::NotSymmetric: return "NotSymmetric";
    case GraphErrc::NotSimple: return "NotSimple";
    case GraphErrc::NotConnected: return "NotConnected";
    case GraphErrc::NotGenusZero: return "NotGenusZero";
    case GraphErrc::OuterNotAFace: return "OuterNotAFace";
    case GraphErrc::NotACycle: return "NotACycle";
    case GraphErrc::Disconnects: return "Disconnects";
    case GraphErrc::NotOnCommonFace: return "NotOnCommonFace";
    case GraphErrc::CreatesMultiEdge: return "CreatesMultiEdge";
  }
  return "?";
}

class GraphError : public std::runtime_error {
 public:
  GraphError(GraphErrc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
  GraphErrc code() const noexcept { return code_; }

 private:
  GraphErrc code_;
};

struct Face {
  std::vector<Vertex> boundary;
  int degree() const { return static_cast<int>(boundary.size()); }
  bool contains(Vertex v) const {
    return std::find(boundary.begin(), boundary.end(), v) != boundary.end();
  }
};

/// A cycle as an ordered vertex sequence, kept in canonical form: it starts
/// at its least vertex and verts[1] < verts.back().
struct CycleRef {
  std::vector<Vertex> verts;

  static CycleRef canonical(std::vector<Vertex> seq) {
    CycleRef c;
    if (seq.empty()) return c;
    auto it = std::min_element(seq.begin(), seq.end());
    std::rotate(seq.begin(), it, seq.end());
    if (seq.size() > 2 && seq[1] > seq.back()) std::reverse(seq.begin() + 1, seq.end());
    c.verts = std::move(seq);
    return c;
  }

  int length() const { return static_cast<int>(verts.size()); }
  bool contains(Vertex v) const {
    return std::find(verts.begin(), verts.end(), v) != verts.end();
  }
  friend bool operator==(const CycleRef&, const CycleRef&) = default;
  friend auto operator<=>(const CycleRef& a, const CycleRef& b) {
    if (a.verts.size() != b.verts.size()) return a.verts.size() <=> b.verts.size();
    return a.verts <=> b.verts;
  }
};

class PlaneGraph {
 public:
  PlaneGraph() = default;

  /// Validates and builds. `outer` must equal one traced face boundary up to
  /// rotation and reflection; it is stored in traced orientation.
  static PlaneGraph build(int n, std::vector<std::vector<Vertex>> rot, const std::vector<Vertex>& outer) {
    PlaneGraph g = unchecked(n, std::move(rot));
    int f = g.match_face(outer);
    if (f < 0) throw GraphError(GraphErrc::OuterNotAFace, "outer sequence is not a face boundary");
    g.set_outer_face(f);
    return g;
  }

  /// Builds with the outer face given as the face containing dart (u->v).
  /// For a single vertex graph pass u = v = 0.
  static PlaneGraph with_outer_dart(int n, std::vector<std::vector<Vertex>> rot, Vertex u, Vertex v) {
    PlaneGraph g = unchecked(n, std::move(rot));
    g.set_outer_face(n == 1 ? 0 : g.face_of_dart(u, v));
    return g;
  }

  int order() const { return n_; }
  int size() const { return m_; }
  int sigma() const { return n_ + m_; }
  int degree(Vertex v) const { return static_cast<int>(rot_[v].size()); }
  const std::vector<Vertex>& neighbors(Vertex v) const { return rot_[v]; }
  const std::vector<std::vector<Vertex>>& rotation() const { return rot_; }

  bool adjacent(Vertex u, Vertex v) const {
    const auto& r = rot_[u];
    return std::find(r.begin(), r.end(), v) != r.end();
  }

  const std::vector<Face>& faces() const { return faces_; }
  int outer_face() const { return outer_face_; }
  const std::vector<Vertex>& outer() const { return faces_[outer_face_].boundary; }
  bool on_outer(Vertex v) const { return on_outer_[v] != 0; }

  /// Index into faces() of the face walked by dart (u->v).
  int face_of_dart(Vertex u, Vertex v) const {
    return dart_face_[dart_id(u, v)];
  }

  /// Rotation position of v in rot[u].
  int position(Vertex u, Vertex v) const {
    const auto& r = rot_[u];
    auto it = std::find(r.begin(), r.end(), v);
    if (it == r.end()) throw GraphError(GraphErrc::IndexOutOfRange, "no such dart");
    return static_cast<int>(it - r.begin());
  }

  /// Successor of dart (u->v) along its face.
  std::pair<Vertex, Vertex> next_dart(Vertex u, Vertex v) const {
    const auto& r = rot_[v];
    int d = static_cast<int>(r.size());
    int j = position(v, u);
    return {v, r[(j + d - 1) % d]};
  }

  /// Faces incident with v, without repetition, in face-index order.
  std::vector<int> faces_at(Vertex v) const {
    std::vector<int> out;
    for (Vertex w : rot_[v]) out.push_back(face_of_dart(v, w));
    if (rot_[v].empty() && n_ == 1) out.push_back(0);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  /// The cycle formed by the outer boundary, if that boundary is a cycle.
  std::optional<CycleRef> outer_cycle() const {
    const auto& b = outer();
    if (b.size() < 3) return std::nullopt;
    std::vector<Vertex> s = b;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) return std::nullopt;
    return CycleRef::canonical(b);
  }

 private:
  int dart_id(Vertex u, Vertex v) const { return offset_[u] + position(u, v); }

  static PlaneGraph unchecked(int n, std::vector<std::vector<Vertex>> rot) {
    PlaneGraph g;
    if (n < 1 || static_cast<int>(rot.size()) != n)
      throw GraphError(GraphErrc::IndexOutOfRange, "rotation table size differs from n");
    g.n_ = n;
    g.rot_ = std::move(rot);
    g.validate_and_trace();
    return g;
  }

  void validate_and_trace() {
    long darts = 0;
    for (Vertex v = 0; v < n_; ++v) {
      for (Vertex w : rot_[v]) {
        if (w < 0 || w >= n_)
          throw GraphError(GraphErrc::IndexOutOfRange, "neighbour id out of range at " + std::to_string(v));
        if (w == v) throw GraphError(GraphErrc::NotSimple, "self-loop at " + std::to_string(v));
      }
      std::vector<Vertex> s = rot_[v];
      std::sort(s.begin(), s.end());
      if (std::adjacent_find(s.begin(), s.end()) != s.end())
        throw GraphError(GraphErrc::NotSimple, "repeated neighbour at " + std::to_string(v));
      darts += static_cast<long>(s.size());
    }
    for (Vertex v = 0; v < n_; ++v)
      for (Vertex w : rot_[v])
        if (std::find(rot_[w].begin(), rot_[w].end(), v) == rot_[w].end())
          throw GraphError(GraphErrc::NotSymmetric,
                           std::to_string(w) + " in rot[" + std::to_string(v) + "] but not conversely");
    m_ = static_cast<int>(darts / 2);

    std::vector<char> seen(n_, 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : rot_[v])
        if (!seen[w]) {
          seen[w] = 1;
          ++reached;
          stack.push_back(w);
        }
    }
    if (reached != n_) throw GraphError(GraphErrc::NotConnected, "graph is not connected");

    offset_.assign(n_ + 1, 0);
    for (Vertex v = 0; v < n_; ++v) offset_[v + 1] = offset_[v] + static_cast<int>(rot_[v].size());
    dart_face_.assign(offset_[n_], -1);
    faces_.clear();
    for (Vertex u = 0; u < n_; ++u) {
      for (int i = 0; i < static_cast<int>(rot_[u].size()); ++i) {
        if (dart_face_[offset_[u] + i] >= 0) continue;
        Face f;
        int id = static_cast<int>(faces_.size());
        Vertex a = u, b = rot_[u][i];
        while (dart_face_[dart_id(a, b)] < 0) {
          dart_face_[dart_id(a, b)] = id;
          f.boundary.push_back(a);
          std::tie(a, b) = next_dart(a, b);
        }
        faces_.push_back(std::move(f));
      }
    }
    if (n_ == 1) faces_.push_back(Face{});
    if (n_ - m_ + static_cast<int>(faces_.size()) != 2)
      throw GraphError(GraphErrc::NotGenusZero,
                       "V-E+F = " + std::to_string(n_ - m_ + static_cast<int>(faces_.size())));
  }

  // Exact orientation wins over reflection: the two faces of a cycle graph
  // differ only in orientation.
  int match_face(const std::vector<Vertex>& seq) const {
    for (bool reflect : {false, true})
      for (int f = 0; f < static_cast<int>(faces_.size()); ++f) {
        const auto& b = faces_[f].boundary;
        if (b.size() != seq.size()) continue;
        if (b.empty()) return f;
        const std::size_t k = b.size();
        for (std::size_t s = 0; s < k; ++s) {
          bool same = true;
          for (std::size_t i = 0; i < k && same; ++i)
            same = (reflect ? b[(s + k - i) % k] : b[(s + i) % k]) == seq[i];
          if (same) return f;
        }
      }
    return -1;
  }

  void set_outer_face(int f) {
    outer_face_ = f;
    on_outer_.assign(n_, 0);
    for (Vertex v : faces_[f].boundary) on_outer_[v] = 1;
    if (n_ == 1) on_outer_[0] = 1;
    // rotate the stored walk so that it is the lexicographically least rotation
    auto& b = faces_[f].boundary;
    if (b.size() > 1) {
      std::vector<Vertex> best = b;
      for (std::size_t s = 1; s < b.size(); ++s) {
        std::vector<Vertex> cand(b.begin() + s, b.end());
        cand.insert(cand.end(), b.begin(), b.begin() + s);
        if (cand < best) best = std::move(cand);
      }
      b = std::move(best);
    }
  }

  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<Vertex>> rot_;
  std::vector<int> offset_;
  std::vector<int> dart_face_;
  std::vector<Face> faces_;
  int outer_face_ = 0;
  std::vector<char> on_outer_;
};

/// A graph produced by surgery together with the vertex correspondence.
/// to_new[old] is -1 for removed vertices; to_old lists, for each new
/// vertex, the old vertex it came from (the surviving one for identified pairs).
struct Relabeled {
  PlaneGraph graph;
  std::vector<Vertex> to_new;
  std::vector<Vertex> to_old;
};

inline std::vector<Face> faces(const PlaneGraph& g) { return g.faces(); }

/// Verifies that `c` is a cycle of g (length >= 3, distinct, cyclically adjacent).
inline void require_cycle(const PlaneGraph& g, const CycleRef& c) {
  const auto& v = c.verts;
  if (v.size() < 3) throw GraphError(GraphErrc::NotACycle, "cycle needs length >= 3");
  std::vector<Vertex> s = v;
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    throw GraphError(GraphErrc::NotACycle, "repeated vertex");
  for (Vertex x : v)
    if (x < 0 || x >= g.order()) throw GraphError(GraphErrc::NotACycle, "vertex out of range");
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!g.adjacent(v[i], v[(i + 1) % v.size()]))
      throw GraphError(GraphErrc::NotACycle, "consecutive vertices not adjacent");
}

inline bool is_cycle(const PlaneGraph& g, const CycleRef& c) {
  try {
    require_cycle(g, c);
    return true;
  } catch (const GraphError&) {
    return false;
  }
}

/// Calls `visit` for each cycle of length <= max_len exactly once, in
/// canonical orientation. Stops early when visit returns false.
inline void for_each_short_cycle(const PlaneGraph& g, int max_len,
                                 const std::function<bool(const std::vector<Vertex>&)>& visit) {
  const int n = g.order();
  std::vector<char> on_path(n, 0);
  std::vector<Vertex> path;
  bool stop = false;
  std::function<void(Vertex)> extend = [&](Vertex start) {
    Vertex last = path.back();
    for (Vertex w : g.neighbors(last)) {
      if (stop) return;
      if (w == start) {
        if (path.size() >= 3 && path[1] < path.back())
          if (!visit(path)) stop = true;
        continue;
      }
      if (w < start || on_path[w] || static_cast<int>(path.size()) >= max_len) continue;
      on_path[w] = 1;
      path.push_back(w);
      extend(start);
      path.pop_back();
      on_path[w] = 0;
    }
  };
  for (Vertex s = 0; s < n && !stop; ++s) {
    path.assign(1, s);
    on_path[s] = 1;
    extend(s);
    on_path[s] = 0;
  }
}

/// All cycles of length <= max_len, sorted by length then vertex sequence.
inline std::vector<CycleRef> short_cycles(const PlaneGraph& g, int max_len) {
  std::vector<CycleRef> out;
  for_each_short_cycle(g, max_len, [&](const std::vector<Vertex>& p) {
    out.push_back(CycleRef{p});
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

/// Some cycle with length in {4, 6, 8}, if one exists.
inline std::optional<CycleRef> find_forbidden_cycle(const PlaneGraph& g) {
  std::optional<CycleRef> hit;
  for_each_short_cycle(g, 8, [&](const std::vector<Vertex>& p) {
    if (p.size() % 2 == 0 && p.size() >= 4) {
      hit = CycleRef{p};
      return false;
    }
    return true;
  });
  return hit;
}

inline bool has_forbidden_cycles(const PlaneGraph& g) { return find_forbidden_cycle(g).has_value(); }

/// Length of a shortest cycle, or 0 for forests.
inline int girth(const PlaneGraph& g) {
  int best = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    std::vector<int> dist(g.order(), -1), parent(g.order(), -1);
    std::queue<Vertex> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      for (Vertex w : g.neighbors(v)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          q.push(w);
        } else if (parent[v] != w) {
          int len = dist[v] + dist[w] + 1;
          if (best == 0 || len < best) best = len;
        }
      }
    }
  }
  return best;
}

/// Clockwise rotation system of a straight-line drawing.
inline std::vector<std::vector<Vertex>> rotation_from_coordinates(
    const std::vector<std::pair<double, double>>& pts, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  std::vector<std::vector<Vertex>> rot(pts.size());
  for (auto [u, v] : edges) {
    rot[u].push_back(v);
    rot[v].push_back(u);
  }
  for (std::size_t v = 0; v < pts.size(); ++v) {
    auto angle = [&](Vertex w) { return std::atan2(pts[w].second - pts[v].second, pts[w].first - pts[v].first); };
    std::sort(rot[v].begin(), rot[v].end(), [&](Vertex a, Vertex b) { return angle(a) > angle(b); });
  }
  return rot;
}

struct Sides {
  std::vector<Vertex> inside;   // int(C), ascending
  std::vector<Vertex> outside;  // ext(C), ascending
  std::vector<char> face_outside;  // per face of g
};

/// Partition of the faces and of V(G) minus C by the cycle C, relative to the
/// designated outer face: faces are joined across every edge not on C and the
/// class of the outer face is the outside.
inline Sides cycle_sides(const PlaneGraph& g, const CycleRef& c) {
  require_cycle(g, c);
  const int nf = static_cast<int>(g.faces().size());
  std::set<std::pair<Vertex, Vertex>> cedges;
  for (std::size_t i = 0; i < c.verts.size(); ++i) {
    Vertex a = c.verts[i], b = c.verts[(i + 1) % c.verts.size()];
    cedges.insert({std::min(a, b), std::max(a, b)});
  }
  std::vector<int> parent(nf);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v : g.neighbors(u))
      if (u < v && !cedges.count({u, v})) parent[find(g.face_of_dart(u, v))] = find(g.face_of_dart(v, u));
  Sides s;
  s.face_outside.assign(nf, 0);
  int root = find(g.outer_face());
  for (int f = 0; f < nf; ++f) s.face_outside[f] = find(f) == root;
  std::vector<char> oncyc(g.order(), 0);
  for (Vertex v : c.verts) oncyc[v] = 1;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (oncyc[v]) continue;
    bool out = false;
    for (int f : g.faces_at(v)) out = out || s.face_outside[f];
    (out ? s.outside : s.inside).push_back(v);
  }
  return s;
}

inline std::pair<std::vector<Vertex>, std::vector<Vertex>> interior(const PlaneGraph& g, const CycleRef& c) {
  Sides s = cycle_sides(g, c);
  return {s.inside, s.outside};
}

inline bool is_separating(const PlaneGraph& g, const CycleRef& c) {
  auto [in, out] = interior(g, c);
  return !in.empty() && !out.empty();
}

namespace detail {

/// Keeps the vertices with keep[v] and the edges accepted by keep_edge; the
/// outer face of the result is the face containing the image of dart (ou->ov).
/// The result must be connected.
inline Relabeled extract(const PlaneGraph& g, const std::vector<char>& keep,
                         const std::function<bool(Vertex, Vertex)>& keep_edge, Vertex ou, Vertex ov) {
  Relabeled r;
  r.to_new.assign(g.order(), -1);
  for (Vertex v = 0; v < g.order(); ++v)
    if (keep[v]) {
      r.to_new[v] = static_cast<Vertex>(r.to_old.size());
      r.to_old.push_back(v);
    }
  const int n = static_cast<int>(r.to_old.size());
  std::vector<std::vector<Vertex>> rot(n);
  for (int i = 0; i < n; ++i) {
    Vertex v = r.to_old[i];
    for (Vertex w : g.neighbors(v))
      if (keep[w] && keep_edge(v, w)) rot[i].push_back(r.to_new[w]);
  }
  if (n == 1)
    r.graph = PlaneGraph::with_outer_dart(1, std::move(rot), 0, 0);
  else
    r.graph = PlaneGraph::with_outer_dart(n, std::move(rot), r.to_new[ou], r.to_new[ov]);
  return r;
}

/// A dart of the face that contains the old face `f` after the vertices
/// with !keep (and edges rejected by keep_edge) are removed.
inline std::optional<std::pair<Vertex, Vertex>> surviving_dart(const PlaneGraph& g, int f,
                                                               const std::vector<char>& keep,
                                                               const std::function<bool(Vertex, Vertex)>& keep_edge) {
  const auto& b = g.faces()[f].boundary;
  for (std::size_t i = 0; i < b.size(); ++i) {
    Vertex u = b[i];
    if (!keep[u]) continue;
    Vertex w = b[(i + 1) % b.size()];
    const auto& r = g.neighbors(u);
    const int d = static_cast<int>(r.size());
    int j = g.position(u, w);
    for (int k = 0; k < d; ++k) {
      Vertex x = r[(j - k + d) % d];
      if (keep[x] && keep_edge(u, x)) return std::make_pair(u, x);
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Induced plane subgraph on V - S. The outer face is the face that contains
/// what remains of the old outer face.
inline Relabeled delete_vertices_mapped(const PlaneGraph& g, const std::vector<Vertex>& s) {
  std::vector<char> keep(g.order(), 1);
  for (Vertex v : s) keep.at(v) = 0;
  int remaining = static_cast<int>(std::count(keep.begin(), keep.end(), 1));
  if (remaining == 0) throw GraphError(GraphErrc::Disconnects, "deleting every vertex");
  auto all = [](Vertex, Vertex) { return true; };
  // connectivity check first so the error names the right cause
  std::vector<char> seen(g.order(), 0);
  Vertex start = static_cast<Vertex>(std::find(keep.begin(), keep.end(), 1) - keep.begin());
  std::vector<Vertex> stack{start};
  seen[start] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v))
      if (keep[w] && !seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  if (reached != remaining) throw GraphError(GraphErrc::Disconnects, "deletion disconnects the graph");
  if (remaining == 1) return detail::extract(g, keep, all, start, start);
  auto dart = detail::surviving_dart(g, g.outer_face(), keep, all);
  if (!dart) {
    // the old outer face vanished entirely; fall back to any remaining dart
    Vertex u = start;
    dart = std::make_pair(u, *std::find_if(g.neighbors(u).begin(), g.neighbors(u).end(),
                                            [&](Vertex w) { return keep[w] != 0; }));
  }
  return detail::extract(g, keep, all, dart->first, dart->second);
}

inline PlaneGraph delete_vertices(const PlaneGraph& g, const std::vector<Vertex>& s) {
  return delete_vertices_mapped(g, s).graph;
}

/// Connected components of G - S, each with its own relabeling. The
/// component holding the remains of the outer face keeps it as outer face;
/// the others get face 0 as outer face.
inline std::vector<Relabeled> components_after_delete(const PlaneGraph& g, const std::vector<Vertex>& s) {
  std::vector<char> removed(g.order(), 0);
  for (Vertex v : s) removed.at(v) = 1;
  std::vector<int> comp(g.order(), -1);
  int nc = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (removed[v] || comp[v] >= 0) continue;
    std::vector<Vertex> stack{v};
    comp[v] = nc;
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(x))
        if (!removed[w] && comp[w] < 0) {
          comp[w] = nc;
          stack.push_back(w);
        }
    }
    ++nc;
  }
  auto all = [](Vertex, Vertex) { return true; };
  std::vector<Relabeled> out;
  for (int c = 0; c < nc; ++c) {
    std::vector<char> keep(g.order(), 0);
    for (Vertex v = 0; v < g.order(); ++v) keep[v] = comp[v] == c;
    Vertex first = static_cast<Vertex>(std::find(keep.begin(), keep.end(), 1) - keep.begin());
    auto dart = detail::surviving_dart(g, g.outer_face(), keep, all);
    if (!dart) {
      auto it = std::find_if(g.neighbors(first).begin(), g.neighbors(first).end(),
                             [&](Vertex w) { return keep[w] != 0; });
      dart = it == g.neighbors(first).end() ? std::make_pair(first, first) : std::make_pair(first, *it);
      auto r = detail::extract(g, keep, all, dart->first, dart->second);
      if (r.graph.order() > 1) {
        // no part of the outer face here: pin the outer face to face 0
        const auto& b = r.graph.faces()[0].boundary;
        Vertex a = b[0], bb = b.size() > 1 ? b[1] : b[0];
        r.graph = PlaneGraph::with_outer_dart(r.graph.order(), r.graph.rotation(), a, bb);
      }
      out.push_back(std::move(r));
    } else {
      out.push_back(detail::extract(g, keep, all, dart->first, dart->second));
    }
  }
  return out;
}

/// Identifies two non-adjacent vertices lying on a common face. The merged
/// vertex takes the place of `a`; `b` is removed.
inline Relabeled identify_mapped(const PlaneGraph& g, Vertex a, Vertex b) {
  if (a == b || g.adjacent(a, b))
    throw GraphError(GraphErrc::CreatesMultiEdge, "identifying equal or adjacent vertices makes a loop");
  int common = -1;
  for (int f = 0; f < static_cast<int>(g.faces().size()); ++f)
    if (g.faces()[f].contains(a) && g.faces()[f].contains(b)) {
      common = f;
      break;
    }
  if (common < 0) throw GraphError(GraphErrc::NotOnCommonFace, "vertices share no face");
  for (Vertex x : g.neighbors(a))
    if (g.adjacent(b, x))
      throw GraphError(GraphErrc::CreatesMultiEdge, "common neighbour " + std::to_string(x));

  // the corner of `common` at v: dart (p->v) followed by (v->q); rot[v] has q
  // immediately before p, so the face lies in the sector from q to p.
  auto opened = [&](Vertex v) {
    const auto& bd = g.faces()[common].boundary;
    std::size_t i = std::find(bd.begin(), bd.end(), v) - bd.begin();
    Vertex p = bd[(i + bd.size() - 1) % bd.size()];
    const auto& r = g.neighbors(v);
    const int d = static_cast<int>(r.size());
    int j = g.position(v, p);
    std::vector<Vertex> seq;
    for (int k = 0; k < d; ++k) seq.push_back(r[(j + k) % d]);
    return seq;  // p, ..., q
  };
  std::vector<Vertex> merged = opened(a);
  std::vector<Vertex> tail = opened(b);
  merged.insert(merged.end(), tail.begin(), tail.end());

  Relabeled r;
  r.to_new.assign(g.order(), -1);
  for (Vertex v = 0; v < g.order(); ++v)
    if (v != b) {
      r.to_new[v] = static_cast<Vertex>(r.to_old.size());
      r.to_old.push_back(v);
    }
  r.to_new[b] = r.to_new[a];
  const int n = g.order() - 1;
  std::vector<std::vector<Vertex>> rot(n);
  for (int i = 0; i < n; ++i) {
    Vertex v = r.to_old[i];
    const auto& src = v == a ? merged : g.neighbors(v);
    for (Vertex w : src) rot[i].push_back(r.to_new[w]);
  }
  const auto& ob = g.outer();
  Vertex ou = ob[0], ov = ob.size() > 1 ? ob[1] : ob[0];
  r.graph = PlaneGraph::with_outer_dart(n, std::move(rot), r.to_new[ou], r.to_new[ov]);
  return r;
}

inline PlaneGraph identify(const PlaneGraph& g, Vertex a, Vertex b) { return identify_mapped(g, a, b).graph; }

/// C together with int(C) and the edges drawn inside C; the outer face of the
/// result is bounded by C.
inline Relabeled inside_part(const PlaneGraph& g, const CycleRef& c) {
  Sides s = cycle_sides(g, c);
  std::vector<char> keep(g.order(), 0);
  for (Vertex v : c.verts) keep[v] = 1;
  for (Vertex v : s.inside) keep[v] = 1;
  auto keep_edge = [&](Vertex u, Vertex v) {
    return !s.face_outside[g.face_of_dart(u, v)] || !s.face_outside[g.face_of_dart(v, u)];
  };
  // the C-dart whose face lies outside ends up on the new outer face
  const auto& cv = c.verts;
  for (std::size_t i = 0; i < cv.size(); ++i) {
    Vertex x = cv[i], y = cv[(i + 1) % cv.size()];
    if (s.face_outside[g.face_of_dart(x, y)]) return detail::extract(g, keep, keep_edge, x, y);
    if (s.face_outside[g.face_of_dart(y, x)]) return detail::extract(g, keep, keep_edge, y, x);
  }
  throw GraphError(GraphErrc::NotACycle, "cycle has no outside face");
}

/// C together with ext(C). Edges drawn inside C are dropped unless
/// keep_inside_chords is set. With outer_on_cycle the outer face of the
/// result is the face bounded by C (the former inside); otherwise the old
/// outer face is kept.
inline Relabeled outside_part(const PlaneGraph& g, const CycleRef& c, bool keep_inside_chords,
                              bool outer_on_cycle = false) {
  Sides s = cycle_sides(g, c);
  std::vector<char> keep(g.order(), 0);
  for (Vertex v : c.verts) keep[v] = 1;
  for (Vertex v : s.outside) keep[v] = 1;
  std::vector<char> oncyc(g.order(), 0);
  for (Vertex v : c.verts) oncyc[v] = 1;
  auto keep_edge = [&](Vertex u, Vertex v) {
    if (s.face_outside[g.face_of_dart(u, v)] || s.face_outside[g.face_of_dart(v, u)]) return true;
    return keep_inside_chords && oncyc[u] && oncyc[v];
  };
  if (outer_on_cycle) {
    if (keep_inside_chords) throw GraphError(GraphErrc::OuterNotAFace, "inside chords split the cycle face");
    const auto& cv = c.verts;
    for (std::size_t i = 0; i < cv.size(); ++i) {
      Vertex x = cv[i], y = cv[(i + 1) % cv.size()];
      if (!s.face_outside[g.face_of_dart(x, y)]) return detail::extract(g, keep, keep_edge, x, y);
      if (!s.face_outside[g.face_of_dart(y, x)]) return detail::extract(g, keep, keep_edge, y, x);
    }
  }
  const auto& ob = g.outer();
  return detail::extract(g, keep, keep_edge, ob[0], ob[1 % ob.size()]);
}

}  // namespace nbp
