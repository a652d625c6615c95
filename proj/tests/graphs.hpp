#pragma once

// Small named graphs shared by the unit tests.

#include <utility>
#include <vector>

#include "nbp/plane_graph.hpp"

namespace nbp::testing {

inline PlaneGraph cycle_graph(int n) {
  std::vector<std::vector<Vertex>> rot(n);
  std::vector<Vertex> outer(n);
  for (int i = 0; i < n; ++i) {
    rot[i] = {(i + 1) % n, (i + n - 1) % n};
    outer[i] = i;
  }
  return PlaneGraph::build(n, rot, outer);
}

inline PlaneGraph path_graph(int n) {
  std::vector<std::vector<Vertex>> rot(n);
  for (int i = 0; i + 1 < n; ++i) {
    rot[i].push_back(i + 1);
    rot[i + 1].push_back(i);
  }
  std::vector<Vertex> walk;
  for (int i = 0; i < n; ++i) walk.push_back(i);
  for (int i = n - 2; i >= 1; --i) walk.push_back(i);
  return PlaneGraph::build(n, rot, walk);
}

inline PlaneGraph from_drawing(const std::vector<std::pair<double, double>>& pts,
                               const std::vector<std::pair<Vertex, Vertex>>& edges, const std::vector<Vertex>& outer) {
  return PlaneGraph::build(static_cast<int>(pts.size()), rotation_from_coordinates(pts, edges), outer);
}

inline PlaneGraph triangle() { return cycle_graph(3); }

// outer triangle 0,1,2 with centre 3
inline PlaneGraph k4() {
  return from_drawing({{0, 0}, {4, 0}, {2, 4}, {2, 1.5}}, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 3}, {2, 3}}, {0, 1, 2});
}

inline PlaneGraph cube() {
  return from_drawing({{0, 0}, {4, 0}, {4, 4}, {0, 4}, {1, 1}, {3, 1}, {3, 3}, {1, 3}},
                      {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4}, {0, 4}, {1, 5}, {2, 6}, {3, 7}},
                      {0, 1, 2, 3});
}

inline PlaneGraph star3() {
  return PlaneGraph::build(4, {{1, 2, 3}, {0}, {0}, {0}}, {0, 1, 0, 2, 0, 3});
}

// triangle 0,1,2 with vertex 3 drawn inside, joined to 0 only
inline PlaneGraph triangle_with_inner_pendant() {
  return from_drawing({{0, 0}, {4, 0}, {2, 4}, {1.5, 1}}, {{0, 1}, {1, 2}, {2, 0}, {0, 3}}, {0, 1, 2});
}

// triangle 0,1,2 with vertex 3 drawn outside, joined to 0 only
inline PlaneGraph triangle_with_outer_pendant() {
  return from_drawing({{0, 0}, {4, 0}, {2, 4}, {-2, -1}}, {{0, 1}, {1, 2}, {2, 0}, {0, 3}}, {0, 3, 0, 1, 2});
}

}  // namespace nbp::testing
