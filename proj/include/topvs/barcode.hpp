#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "topvs/graph.hpp"

namespace topvs {

/// One-dimensional persistence barcode of a graph filtration.
///
/// Connected components are born at the weights of the maximum spanning tree
/// and never die; cycles exist from the start and die at the remaining edge
/// weights. Both lists are ascending.
struct BirthDeathDecomposition {
  std::size_t node_count = 0;
  std::vector<double> births;
  std::vector<double> deaths;
  /// Maximum spanning tree edges in the order Kruskal accepted them.
  std::vector<WeightedEdge> tree_edges;
};

/// (|V| - 1, 1 + |V|(|V| - 3)/2)
std::pair<std::size_t, std::size_t> counts_for_size(std::size_t node_count);

/// Splits the edge weights into births (maximum spanning tree) and deaths.
/// Kruskal over edges sorted by (weight desc, smaller node, larger node).
BirthDeathDecomposition decompose(const WeightedNetwork& net);

struct BettiCurve {
  std::vector<double> thresholds;
  std::vector<std::size_t> beta0;
  std::vector<std::size_t> beta1;
  /// Edges with weight strictly above each threshold.
  std::vector<std::size_t> edge_counts;
};

/// Component and cycle counts of the thresholded graph {w_ij > eps}.
/// Thresholds must be strictly ascending.
BettiCurve betti_curves(const WeightedNetwork& net,
                        std::span<const double> thresholds);

/// Disjoint-set forest with path compression and union by rank.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n);
  std::size_t find(std::size_t x);
  /// Returns false when x and y were already connected.
  bool unite(std::size_t x, std::size_t y);
  std::size_t components() const { return components_; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<unsigned char> rank_;
  std::size_t components_;
};

}  // namespace topvs
