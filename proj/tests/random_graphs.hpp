#pragma once

// Random straight-line plane graphs for property tests.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "nbp/corpus.hpp"

namespace nbp::testing {

inline int draw(std::mt19937& rng, int bound) { return static_cast<int>(rng() % static_cast<std::uint32_t>(bound)); }

inline PlaneGraph with_geometric_outer(const std::vector<std::pair<double, double>>& pts,
                                       std::vector<std::vector<Vertex>> rot) {
  return nbp::with_geometric_outer(pts, std::move(rot));
}

inline PlaneGraph random_plane_graph(int n, int drop_pct, std::mt19937& rng) {
  return random_straight_line_graph(n, drop_pct, rng);
}

}  // namespace nbp::testing
