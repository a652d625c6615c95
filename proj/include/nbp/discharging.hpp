#pragma once

// Charges, rules R1-R4 and the audit report. All arithmetic is in integer
// thirds. C0 is the outer face; its initial charge uses the outer walk length,
// which equals |C0| whenever the outer boundary is a cycle.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "nbp/plane_graph.hpp"
#include "nbp/reducer.hpp"

namespace nbp {

struct ElementRef {
  enum class Kind { Vertex, InternalFace, Outer };
  Kind kind = Kind::Outer;
  int index = -1;  // vertex id or face index; unused for Outer

  static ElementRef vertex(Vertex v) { return {Kind::Vertex, v}; }
  static ElementRef face(int f) { return {Kind::InternalFace, f}; }
  static ElementRef outer() { return {Kind::Outer, -1}; }

  std::string str() const {
    switch (kind) {
      case Kind::Vertex: return "v" + std::to_string(index);
      case Kind::InternalFace: return "f" + std::to_string(index);
      case Kind::Outer: return "C0";
    }
    return "?";
  }
  friend bool operator==(const ElementRef&, const ElementRef&) = default;
};

struct Charge {
  std::int64_t thirds = 0;
  std::string str() const { return std::to_string(thirds) + "/3"; }
  friend bool operator==(const Charge&, const Charge&) = default;
};

struct Classification {
  // per vertex
  std::vector<char> on_c0, internal, bad3, special2;
  // per face (the outer face has both flags false)
  std::vector<char> face_internal, truly_internal;
  std::set<std::pair<Vertex, int>> poor;

  bool is_poor(Vertex v, int f) const { return poor.count({v, f}) > 0; }
};

namespace detail {

inline std::vector<Vertex> distinct(const std::vector<Vertex>& walk) {
  std::vector<Vertex> out;
  for (Vertex v : walk)
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  return out;
}

inline std::set<std::pair<int, int>> face_adjacency(const PlaneGraph& g) {
  std::set<std::pair<int, int>> adj;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v : g.neighbors(u)) {
      int a = g.face_of_dart(u, v), b = g.face_of_dart(v, u);
      if (a != b) adj.insert({std::min(a, b), std::max(a, b)});
    }
  return adj;
}

inline bool on_internal_face_of_degree(const PlaneGraph& g, Vertex v, int d) {
  for (int f : g.faces_at(v))
    if (f != g.outer_face() && g.faces()[f].degree() == d) return true;
  return false;
}

}  // namespace detail

inline Classification classify(const PlaneGraph& g) {
  const int n = g.order();
  const auto& fs = g.faces();
  Classification c;
  c.on_c0.assign(n, 0);
  c.internal.assign(n, 0);
  c.bad3.assign(n, 0);
  c.special2.assign(n, 0);
  c.face_internal.assign(fs.size(), 0);
  c.truly_internal.assign(fs.size(), 0);
  for (Vertex v = 0; v < n; ++v) {
    c.on_c0[v] = g.on_outer(v);
    c.internal[v] = !c.on_c0[v];
  }
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) == 3 && c.internal[v] && detail::on_internal_face_of_degree(g, v, 3)) c.bad3[v] = 1;
    if (g.degree(v) == 2 && c.on_c0[v] && detail::on_internal_face_of_degree(g, v, 5)) c.special2[v] = 1;
  }
  for (int f = 0; f < static_cast<int>(fs.size()); ++f) {
    if (f == g.outer_face()) continue;
    c.face_internal[f] = 1;
    c.truly_internal[f] = std::none_of(fs[f].boundary.begin(), fs[f].boundary.end(),
                                       [&](Vertex v) { return c.on_c0[v] != 0; });
  }
  auto adj = detail::face_adjacency(g);
  auto adjacent = [&](int a, int b) { return adj.count({std::min(a, b), std::max(a, b)}) > 0; };
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) != 4 || c.on_c0[v]) continue;
    auto at = g.faces_at(v);
    for (int f : at) {
      int tri_far = 0, tri_near = 0;
      bool five_near = false;
      for (int h : at) {
        if (h == f) continue;
        int d = fs[h].degree();
        if (d == 3) (adjacent(f, h) ? tri_near : tri_far)++;
        if (d == 5 && adjacent(f, h)) five_near = true;
      }
      if (tri_far > 0 || tri_near >= 2 || five_near) c.poor.insert({v, f});
    }
  }
  return c;
}

struct Transfer {
  ElementRef from, to;
  int thirds = 0;
  std::string rule;
};

struct ChargeLedger {
  std::vector<Charge> vertex, face;  // face[outer_face] is unused
  Charge outer;
  int outer_face = -1;
  std::vector<Transfer> log;

  Charge& at(const ElementRef& e) {
    switch (e.kind) {
      case ElementRef::Kind::Vertex: return vertex[e.index];
      case ElementRef::Kind::InternalFace: return face[e.index];
      case ElementRef::Kind::Outer: return outer;
    }
    return outer;
  }
  Charge get(const ElementRef& e) const {
    switch (e.kind) {
      case ElementRef::Kind::Vertex: return vertex[e.index];
      case ElementRef::Kind::InternalFace: return face[e.index];
      case ElementRef::Kind::Outer: return outer;
    }
    return outer;
  }

  void move(ElementRef from, ElementRef to, int thirds, std::string rule) {
    at(from).thirds -= thirds;
    at(to).thirds += thirds;
    log.push_back({from, to, thirds, std::move(rule)});
  }

  std::int64_t total() const {
    std::int64_t t = outer.thirds;
    for (auto& c : vertex) t += c.thirds;
    for (int f = 0; f < static_cast<int>(face.size()); ++f)
      if (f != outer_face) t += face[f].thirds;
    return t;
  }

  /// Every element in report order: vertices, internal faces, C0.
  std::vector<ElementRef> elements() const {
    std::vector<ElementRef> out;
    for (Vertex v = 0; v < static_cast<int>(vertex.size()); ++v) out.push_back(ElementRef::vertex(v));
    for (int f = 0; f < static_cast<int>(face.size()); ++f)
      if (f != outer_face) out.push_back(ElementRef::face(f));
    out.push_back(ElementRef::outer());
    return out;
  }
};

inline ChargeLedger initial_charges(const PlaneGraph& g) {
  ChargeLedger l;
  l.outer_face = g.outer_face();
  for (Vertex v = 0; v < g.order(); ++v) l.vertex.push_back({3 * (g.degree(v) - 4)});
  for (auto& f : g.faces()) l.face.push_back({3 * (f.degree() - 4)});
  l.outer = {3 * (static_cast<int>(g.outer().size()) + 4)};
  l.face[l.outer_face] = {};
  return l;
}

/// R1, R2, R3, R4, then the surplus step; every transfer is logged.
inline ChargeLedger run_rules(const PlaneGraph& g, const Classification& c) {
  ChargeLedger l = initial_charges(g);
  const auto& fs = g.faces();
  const int nf = static_cast<int>(fs.size());
  using E = ElementRef;

  for (int f = 0; f < nf; ++f)
    if (c.face_internal[f] && fs[f].degree() == 3)
      for (Vertex v : detail::distinct(fs[f].boundary)) l.move(E::vertex(v), E::face(f), 1, "R1");

  for (int f = 0; f < nf; ++f) {
    if (!c.face_internal[f]) continue;
    const int d = fs[f].degree();
    for (Vertex v : detail::distinct(fs[f].boundary)) {
      const int dv = g.degree(v);
      if (d == 5) {
        if (dv >= 4 && !c.on_c0[v]) l.move(E::vertex(v), E::face(f), 1, "R2");
        if (dv == 2 || (dv == 3 && c.internal[v])) l.move(E::face(f), E::vertex(v), 1, "R2");
      } else if (d >= 7) {
        if (dv == 2 || c.bad3[v]) {
          l.move(E::face(f), E::vertex(v), 2, "R2");
        } else if ((dv == 3 && c.internal[v]) || c.is_poor(v, f)) {
          l.move(E::face(f), E::vertex(v), 1, "R2");
        }
      }
    }
  }

  for (Vertex v = 0; v < g.order(); ++v) {
    if (!c.on_c0[v] || g.degree(v) < 4) continue;
    for (int f : g.faces_at(v))
      if (c.face_internal[f] && fs[f].degree() == 5) l.move(E::vertex(v), E::face(f), 1, "R3");
  }

  for (Vertex v : detail::distinct(g.outer())) {
    const int dv = g.degree(v);
    int amount = 3;
    if (c.special2[v]) {
      amount = 5;
    } else if (dv == 2 || (dv == 3 && detail::on_internal_face_of_degree(g, v, 3))) {
      amount = 4;
    }
    l.move(E::outer(), E::vertex(v), amount, "R4");
  }

  for (int f = 0; f < nf; ++f)
    if (c.face_internal[f] && fs[f].degree() >= 5 && l.face[f].thirds > 0)
      l.move(E::face(f), E::outer(), static_cast<int>(l.face[f].thirds), "surplus");
  return l;
}

inline ChargeLedger run_rules(const PlaneGraph& g) { return run_rules(g, classify(g)); }

struct BadRun {
  std::vector<Vertex> verts;  // consecutive bad 3-vertices in face order
  bool whole_face = false;    // the run wraps all the way around
  // for runs of length 4: whether v0v1, v2v3, v4v5 each lie on a 3-face
  std::optional<bool> triangle_pattern;
};

struct BadPattern {
  std::vector<BadRun> runs;
  bool five_consecutive = false;  // some run has length >= 5

  std::string str() const {
    std::ostringstream os;
    os << "runs=" << runs.size();
    for (auto& r : runs) {
      os << " [";
      for (std::size_t i = 0; i < r.verts.size(); ++i) os << (i ? "," : "") << r.verts[i];
      os << "]";
      if (r.triangle_pattern) os << (*r.triangle_pattern ? "+tri" : "-tri");
    }
    if (five_consecutive) os << " five-consecutive";
    return os.str();
  }
};

namespace detail {

inline bool edge_on_triangle(const PlaneGraph& g, Vertex a, Vertex b) {
  if (!g.adjacent(a, b)) return false;
  for (int f : {g.face_of_dart(a, b), g.face_of_dart(b, a)})
    if (f != g.outer_face() && g.faces()[f].degree() == 3) return true;
  return false;
}

}  // namespace detail

/// Maximal runs of consecutive bad 3-vertices along the boundary walk of f.
inline BadPattern consecutive_bad_pattern(const PlaneGraph& g, int f, const Classification& c) {
  const auto& b = g.faces()[f].boundary;
  const int d = static_cast<int>(b.size());
  BadPattern p;
  if (d == 0) return p;
  auto bad = [&](int i) { return c.bad3[b[((i % d) + d) % d]] != 0; };
  int start = -1;
  for (int i = 0; i < d; ++i)
    if (!bad(i)) {
      start = i;
      break;
    }
  if (start < 0) {
    BadRun r;
    r.verts = b;
    r.whole_face = true;
    p.runs.push_back(r);
    p.five_consecutive = d >= 5;
    return p;
  }
  for (int k = 1; k <= d; ++k) {
    int i = start + k;
    if (!bad(i) || bad(i - 1)) continue;
    BadRun r;
    int j = i;
    while (bad(j)) r.verts.push_back(b[j++ % d]);
    if (r.verts.size() == 4) {
      auto at = [&](int t) { return b[((t % d) + d) % d]; };
      r.triangle_pattern = detail::edge_on_triangle(g, at(i - 1), at(i)) &&
                           detail::edge_on_triangle(g, at(i + 1), at(i + 2)) &&
                           detail::edge_on_triangle(g, at(i + 3), at(i + 4));
    }
    if (r.verts.size() >= 5) p.five_consecutive = true;
    p.runs.push_back(std::move(r));
  }
  return p;
}

struct AuditReport {
  Classification classification;
  ChargeLedger initial, final;
  bool conserved = false;
  std::int64_t total = 0;
  bool vertices_nonnegative = true, faces_nonnegative = true, outer_positive = true;
  std::vector<ElementRef> negative;
  bool outer_is_cycle = false;
  int outer_length = 0;
  std::optional<Configuration> configuration;  // looked up when a bound fails

  bool bounds_hold() const { return vertices_nonnegative && faces_nonnegative && outer_positive; }

  std::string verdict() const {
    std::ostringstream os;
    os << "verdict\n";
    os << "vertices_nonnegative=" << (vertices_nonnegative ? "yes" : "no") << "\n";
    os << "internal_faces_nonnegative=" << (faces_nonnegative ? "yes" : "no") << "\n";
    os << "outer_final=" << final.outer.str() << " positive=" << (outer_positive ? "yes" : "no") << "\n";
    if (!bounds_hold()) {
      os << "negative=";
      for (std::size_t i = 0; i < negative.size(); ++i) os << (i ? "," : "") << negative[i].str();
      os << "\n";
      if (!outer_is_cycle)
        os << "configuration=n/a outer boundary is not a cycle\n";
      else if (outer_length > 12)
        os << "configuration=n/a C0 longer than 12\n";
      else
        os << "configuration=" << (configuration ? configuration->describe() : std::string("none")) << "\n";
    }
    os << "conservation=" << (conserved ? "OK" : "FAIL") << " total=" << Charge{total}.str() << "\n";
    return os.str();
  }

  std::string str() const {
    std::ostringstream os;
    for (auto& e : final.elements())
      os << e.str() << " init=" << initial.get(e).str() << " final=" << final.get(e).str() << "\n";
    os << "transfers " << final.log.size() << "\n";
    for (auto& t : final.log) os << t.from.str() << " -> " << t.to.str() << " " << t.thirds << "/3 " << t.rule << "\n";
    os << verdict();
    return os.str();
  }
};

/// Throws ReducerError(OutOfClass) when G has a {4,6,8}-cycle.
inline AuditReport audit(const PlaneGraph& g) {
  detail::require_in_class(g);
  AuditReport r;
  r.classification = classify(g);
  r.initial = initial_charges(g);
  r.final = run_rules(g, r.classification);
  r.total = r.final.total();
  r.conserved = r.total == 0 && r.initial.total() == 0;
  for (auto& e : r.final.elements()) {
    if (e.kind == ElementRef::Kind::Outer) continue;
    if (r.final.get(e).thirds < 0) {
      r.negative.push_back(e);
      (e.kind == ElementRef::Kind::Vertex ? r.vertices_nonnegative : r.faces_nonnegative) = false;
    }
  }
  r.outer_positive = r.final.outer.thirds > 0;
  auto oc = g.outer_cycle();
  r.outer_is_cycle = oc.has_value();
  r.outer_length = static_cast<int>(g.outer().size());
  if (!r.bounds_hold() && oc && oc->length() <= 12) r.configuration = find_configuration(g, *oc);
  return r;
}

}  // namespace nbp
