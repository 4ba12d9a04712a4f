#include "topvs/barcode.hpp"

#include <algorithm>
#include <numeric>

#include "topvs/error.hpp"

namespace topvs {

UnionFind::UnionFind(std::size_t n)
    : parent_(n), rank_(n, 0), components_(n) {
  std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t UnionFind::find(std::size_t x) {
  std::size_t root = x;
  while (parent_[root] != root) root = parent_[root];
  while (parent_[x] != root) {
    const auto next = parent_[x];
    parent_[x] = root;
    x = next;
  }
  return root;
}

bool UnionFind::unite(std::size_t x, std::size_t y) {
  x = find(x);
  y = find(y);
  if (x == y) return false;
  if (rank_[x] < rank_[y]) std::swap(x, y);
  parent_[y] = x;
  if (rank_[x] == rank_[y]) ++rank_[x];
  --components_;
  return true;
}

std::pair<std::size_t, std::size_t> counts_for_size(std::size_t v) {
  if (v < 2) throw InputError("node count must be at least 2");
  // 1 + v(v-3)/2 == v(v-1)/2 - (v-1), which stays in unsigned range.
  return {v - 1, v * (v - 1) / 2 - (v - 1)};
}

namespace {

std::vector<WeightedEdge> edges_by_weight_desc(const WeightedNetwork& net) {
  auto edges = net.edges();
  // edges() is already ordered by (i, j), so a stable sort on weight alone
  // yields the (weight desc, i, j) order.
  std::stable_sort(edges.begin(), edges.end(),
                   [](const WeightedEdge& a, const WeightedEdge& b) {
                     return a.w > b.w;
                   });
  return edges;
}

}  // namespace

BirthDeathDecomposition decompose(const WeightedNetwork& net) {
  const auto n = net.node_count();
  const auto [birth_count, death_count] = counts_for_size(n);

  BirthDeathDecomposition out;
  out.node_count = n;
  out.births.reserve(birth_count);
  out.deaths.reserve(death_count);
  out.tree_edges.reserve(birth_count);

  UnionFind forest(n);
  for (const auto& e : edges_by_weight_desc(net)) {
    if (forest.unite(e.i, e.j)) {
      out.births.push_back(e.w);
      out.tree_edges.push_back(e);
    } else {
      out.deaths.push_back(e.w);
    }
  }
  std::reverse(out.births.begin(), out.births.end());
  std::reverse(out.deaths.begin(), out.deaths.end());

  if (out.births.size() != birth_count || out.deaths.size() != death_count) {
    throw InvariantError("birth/death cardinalities do not match |V|");
  }
  return out;
}

BettiCurve betti_curves(const WeightedNetwork& net,
                        std::span<const double> thresholds) {
  for (std::size_t k = 1; k < thresholds.size(); ++k) {
    if (!(thresholds[k - 1] < thresholds[k])) {
      throw InputError("thresholds must be strictly ascending (position " +
                       std::to_string(k) + ")");
    }
  }
  const auto n = net.node_count();
  const auto edges = edges_by_weight_desc(net);

  BettiCurve curve;
  curve.thresholds.assign(thresholds.begin(), thresholds.end());
  const auto t = thresholds.size();
  curve.beta0.resize(t);
  curve.beta1.resize(t);
  curve.edge_counts.resize(t);

  // Sweep thresholds from high to low, adding edges with w > eps.
  UnionFind forest(n);
  std::size_t added = 0;
  for (std::size_t k = t; k-- > 0;) {
    const double eps = thresholds[k];
    while (added < edges.size() && edges[added].w > eps) {
      forest.unite(edges[added].i, edges[added].j);
      ++added;
    }
    const auto b0 = forest.components();
    curve.beta0[k] = b0;
    curve.edge_counts[k] = added;
    curve.beta1[k] = added + b0 - n;
  }
  return curve;
}

}  // namespace topvs
