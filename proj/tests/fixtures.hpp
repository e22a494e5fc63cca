#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "arbor/tree.hpp"

namespace fixtures {

// Eleven vertices: v1..v9, vt, ve mapped to 0..10. Trunk is {v2, v4, v7, v8}.
inline arbor::Tree figure1() {
  const std::vector<arbor::Edge> edges{{0, 1}, {1, 2}, {1, 3}, {3, 4}, {3, 5},
                                       {3, 6}, {6, 7}, {7, 8}, {7, 9}, {9, 10}};
  return arbor::Tree(11, edges);
}

inline std::vector<arbor::Vertex> random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<arbor::Vertex> perm(n);
  for (arbor::Vertex i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace fixtures
