#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "topvs/graph.hpp"

namespace topvs::testing {

inline WeightedNetwork k4() {
  return from_edge_list({{0, 1, 6}, {0, 2, 5}, {1, 2, 4}, {0, 3, 3}, {1, 3, 2}, {2, 3, 1}},
                        4);
}

/// Complete network with i.i.d. uniform weights (distinct with probability 1).
inline WeightedNetwork random_network(std::size_t n, std::mt19937_64& gen,
                                      double lo = -1.0, double hi = 1.0) {
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> w(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      w[i * n + j] = w[j * n + i] = dist(gen);
    }
  }
  return WeightedNetwork::from_matrix(n, std::move(w));
}

/// Complete network with small integer weights, so ties are everywhere.
inline WeightedNetwork tied_network(std::size_t n, std::mt19937_64& gen,
                                    int levels = 3) {
  std::uniform_int_distribution<int> dist(0, levels - 1);
  std::vector<double> w(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      w[i * n + j] = w[j * n + i] = dist(gen);
    }
  }
  return WeightedNetwork::from_matrix(n, std::move(w));
}

inline std::vector<double> sorted_weights(const WeightedNetwork& net) {
  std::vector<double> out;
  for (const auto& e : net.edges()) out.push_back(e.w);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<double> sorted_union(std::vector<double> a,
                                        const std::vector<double>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  return a;
}

}  // namespace topvs::testing
