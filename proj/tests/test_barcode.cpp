#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <random>

#include "support.hpp"
#include "topvs/barcode.hpp"
#include "topvs/error.hpp"

using namespace topvs;

namespace {

// Oracle: enumerate every (|V|-1)-edge subset, keep the spanning trees, and
// return the sorted weights of one with maximum total weight.
std::vector<double> brute_force_max_tree(const WeightedNetwork& net) {
  const auto edges = net.edges();
  const std::size_t n = net.node_count();
  const std::size_t k = n - 1;
  std::vector<bool> pick(edges.size(), false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
  double best = -INFINITY;
  std::vector<double> best_weights;
  std::size_t trees = 0;
  do {
    std::vector<std::size_t> comp(n);
    std::iota(comp.begin(), comp.end(), std::size_t{0});
    std::function<std::size_t(std::size_t)> root = [&](std::size_t x) {
      return comp[x] == x ? x : root(comp[x]);
    };
    bool acyclic = true;
    double total = 0;
    std::vector<double> ws;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (!pick[e]) continue;
      const auto a = root(edges[e].i), b = root(edges[e].j);
      if (a == b) {
        acyclic = false;
        break;
      }
      comp[a] = b;
      total += edges[e].w;
      ws.push_back(edges[e].w);
    }
    if (!acyclic) continue;
    ++trees;
    if (total > best) {
      best = total;
      std::sort(ws.begin(), ws.end());
      best_weights = ws;
    }
  } while (std::prev_permutation(pick.begin(), pick.end()));
  // Cayley's formula as a sanity check on the enumeration itself.
  CHECK(trees == static_cast<std::size_t>(std::pow(n, n - 2)));
  return best_weights;
}

// Oracle: components of {w > eps} by depth-first search.
std::size_t brute_force_components(const WeightedNetwork& net, double eps) {
  const auto n = net.node_count();
  std::vector<bool> seen(n, false);
  std::size_t count = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++count;
    std::vector<std::size_t> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      const auto u = stack.back();
      stack.pop_back();
      for (std::size_t v = 0; v < n; ++v) {
        if (v != u && !seen[v] && net.weight(u, v) > eps) {
          seen[v] = true;
          stack.push_back(v);
        }
      }
    }
  }
  return count;
}

}  // namespace

TEST_SUITE_BEGIN("barcode");

TEST_CASE("counts_for_size") {
  CHECK(counts_for_size(4) == std::pair<std::size_t, std::size_t>{3, 3});
  CHECK(counts_for_size(2) == std::pair<std::size_t, std::size_t>{1, 0});
  CHECK(counts_for_size(90) == std::pair<std::size_t, std::size_t>{89, 3916});
  CHECK_THROWS_AS(counts_for_size(1), InputError);
}

TEST_CASE("decompose K4") {
  const auto net = testing::k4();
  const auto oracle = brute_force_max_tree(net);
  CHECK(oracle == std::vector<double>{3, 5, 6});

  const auto bd = decompose(net);
  CHECK(bd.node_count == 4);
  CHECK(bd.births == oracle);
  CHECK(bd.deaths == std::vector<double>{1, 2, 4});
  REQUIRE(bd.tree_edges.size() == 3);
  CHECK(bd.tree_edges[0].w == 6);
}

TEST_CASE("decompose two nodes") {
  const auto bd = decompose(from_edge_list({{0, 1, 7}}, 2));
  CHECK(bd.births == std::vector<double>{7});
  CHECK(bd.deaths.empty());
}

TEST_CASE("decompose constant K4") {
  const double c = 2.25;
  const auto net = from_edge_list(
      {{0, 1, c}, {0, 2, c}, {0, 3, c}, {1, 2, c}, {1, 3, c}, {2, 3, c}}, 4);
  const auto bd = decompose(net);
  CHECK(bd.births == std::vector<double>{c, c, c});
  CHECK(bd.deaths == std::vector<double>{c, c, c});
}

TEST_CASE("tie-breaking picks the lexicographically first tree") {
  const auto net = from_edge_list(
      {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {1, 2, 1}, {1, 3, 1}, {2, 3, 1}}, 4);
  const auto bd = decompose(net);
  REQUIRE(bd.tree_edges.size() == 3);
  CHECK(bd.tree_edges[0].i == 0);
  CHECK(bd.tree_edges[0].j == 1);
  CHECK(bd.tree_edges[1].j == 2);
  CHECK(bd.tree_edges[2].j == 3);
}

TEST_CASE("births match the brute-force maximum spanning tree") {
  std::mt19937_64 gen(3);
  for (std::size_t n = 2; n <= 6; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      const auto net = trial % 2 ? testing::random_network(n, gen)
                                 : testing::tied_network(n, gen);
      CHECK(decompose(net).births == brute_force_max_tree(net));
    }
  }
}

TEST_CASE("decomposition invariants on random networks") {
  std::mt19937_64 gen(5);
  for (std::size_t n = 2; n <= 50; ++n) {
    for (int trial = 0; trial < 100; ++trial) {
      const auto net = testing::random_network(n, gen);
      const auto bd = decompose(net);
      const auto [m, d] = counts_for_size(n);
      REQUIRE(bd.births.size() == m);
      REQUIRE(bd.deaths.size() == d);
      REQUIRE(std::is_sorted(bd.births.begin(), bd.births.end()));
      REQUIRE(std::is_sorted(bd.deaths.begin(), bd.deaths.end()));
      REQUIRE(testing::sorted_union(bd.births, bd.deaths) ==
              testing::sorted_weights(net));
    }
  }
}

TEST_CASE("birth multiset does not depend on node order under ties") {
  std::mt19937_64 gen(8);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 3 + trial % 12;
    const auto net = testing::tied_network(n, gen);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), gen);
    const auto a = decompose(net);
    const auto b = decompose(net.relabeled(perm));
    CHECK(a.births == b.births);
    CHECK(a.deaths == b.deaths);
  }
}

TEST_CASE("betti_curves on K4") {
  const auto net = testing::k4();
  const std::vector<double> eps{0.5, 3.5, 6.5};
  const auto curve = betti_curves(net, eps);
  CHECK(curve.beta0 == std::vector<std::size_t>{1, 2, 4});
  CHECK(curve.beta1 == std::vector<std::size_t>{3, 1, 0});
  CHECK(brute_force_components(net, 3.5) == 2);
  CHECK(curve.edge_counts == std::vector<std::size_t>{6, 3, 0});
}

TEST_CASE("betti_curves at an edge weight excludes that edge") {
  const auto curve = betti_curves(testing::k4(), std::vector<double>{6.0});
  CHECK(curve.beta0[0] == 4);
  CHECK(curve.edge_counts[0] == 0);
}

TEST_CASE("betti_curves rejects unsorted thresholds") {
  CHECK_THROWS_AS(betti_curves(testing::k4(), std::vector<double>{1.0, 0.5}),
                  InputError);
  CHECK_THROWS_AS(betti_curves(testing::k4(), std::vector<double>{1.0, 1.0}),
                  InputError);
}

TEST_CASE("betti curves agree with births, deaths and the Euler relation") {
  std::mt19937_64 gen(13);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 3 + trial % 15;
    const auto net = trial % 3 ? testing::random_network(n, gen)
                               : testing::tied_network(n, gen, 4);
    const auto bd = decompose(net);

    auto values = testing::sorted_weights(net);
    values.erase(std::unique(values.begin(), values.end()), values.end());
    std::vector<double> eps{values.front() - 1.0};
    eps.insert(eps.end(), values.begin(), values.end());
    const auto curve = betti_curves(net, eps);

    auto mult = [](const std::vector<double>& v, double x) {
      return static_cast<std::size_t>(std::count(v.begin(), v.end(), x));
    };
    CHECK(curve.beta0.front() == 1);
    CHECK(curve.beta1.front() == counts_for_size(n).second);
    CHECK(curve.beta0.back() == n);
    CHECK(curve.beta1.back() == 0);
    for (std::size_t k = 0; k < eps.size(); ++k) {
      CHECK(curve.beta0[k] + curve.edge_counts[k] == n + curve.beta1[k]);
      CHECK(curve.beta0[k] == brute_force_components(net, eps[k]));
      if (k == 0) continue;
      CHECK(curve.beta0[k] >= curve.beta0[k - 1]);
      CHECK(curve.beta1[k] <= curve.beta1[k - 1]);
      CHECK(curve.beta0[k] - curve.beta0[k - 1] == mult(bd.births, eps[k]));
      CHECK(curve.beta1[k - 1] - curve.beta1[k] == mult(bd.deaths, eps[k]));
    }
  }
}

TEST_CASE("UnionFind") {
  UnionFind uf(5);
  CHECK(uf.components() == 5);
  CHECK(uf.unite(0, 1));
  CHECK(uf.unite(3, 4));
  CHECK_FALSE(uf.unite(1, 0));
  CHECK(uf.unite(1, 4));
  CHECK(uf.find(0) == uf.find(3));
  CHECK(uf.components() == 2);
}

TEST_SUITE_END();
