#pragma once

// Text formats.
//
//   pg 1
//   <n>
//   <d_0> <nbr> ... (clockwise, one line per vertex)
//   ...
//   outer <k> <v_0> ... <v_{k-1}>
//
// Lines starting with '#' are comments. The writer rotates every neighbour
// list to start at its least entry and emits the outer walk as stored.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "nbp/plane_graph.hpp"

namespace nbp {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline PlaneGraph parse_pg(std::istream& in) {
  std::string line, all;
  while (std::getline(in, line)) {
    auto p = line.find_first_not_of(" \t\r");
    if (p != std::string::npos && line[p] == '#') continue;
    all += line;
    all += '\n';
  }
  std::istringstream ts(all);
  std::string magic;
  int version = 0;
  if (!(ts >> magic >> version) || magic != "pg" || version != 1) throw ParseError("expected header 'pg 1'");
  int n = 0;
  if (!(ts >> n) || n < 1) throw ParseError("bad vertex count");
  std::vector<std::vector<Vertex>> rot(n);
  for (int v = 0; v < n; ++v) {
    int d = 0;
    if (!(ts >> d) || d < 0) throw ParseError("bad degree for vertex " + std::to_string(v));
    rot[v].resize(d);
    for (int i = 0; i < d; ++i)
      if (!(ts >> rot[v][i])) throw ParseError("truncated neighbour list for vertex " + std::to_string(v));
  }
  std::string kw;
  int k = 0;
  if (!(ts >> kw >> k) || kw != "outer" || k < 0) throw ParseError("expected 'outer k ...'");
  std::vector<Vertex> outer(k);
  for (int i = 0; i < k; ++i)
    if (!(ts >> outer[i])) throw ParseError("truncated outer sequence");
  std::string extra;
  if (ts >> extra) throw ParseError("trailing content: " + extra);
  return PlaneGraph::build(n, std::move(rot), outer);
}

inline PlaneGraph parse_pg(const std::string& text) {
  std::istringstream in(text);
  return parse_pg(in);
}

inline PlaneGraph read_pg(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return parse_pg(in);
}

inline std::string write_pg(const PlaneGraph& g) {
  std::ostringstream out;
  out << "pg 1\n" << g.order() << "\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    std::vector<Vertex> r = g.neighbors(v);
    if (!r.empty()) std::rotate(r.begin(), std::min_element(r.begin(), r.end()), r.end());
    out << r.size();
    for (Vertex w : r) out << ' ' << w;
    out << '\n';
  }
  out << "outer " << g.outer().size();
  for (Vertex v : g.outer()) out << ' ' << v;
  out << '\n';
  return out.str();
}

inline std::vector<Vertex> parse_vertex_list(const std::string& s) {
  std::vector<Vertex> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) throw ParseError("empty entry in vertex list");
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw ParseError("bad vertex id '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace nbp
