#include "topvs/graph.hpp"

#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "topvs/error.hpp"

namespace topvs {

WeightedNetwork WeightedNetwork::from_matrix(std::size_t node_count,
                                             std::vector<double> weights,
                                             double tolerance) {
  if (node_count < 2) {
    throw InputError("network needs at least 2 nodes, got " +
                     std::to_string(node_count));
  }
  if (weights.size() != node_count * node_count) {
    throw InputError("weight matrix has " + std::to_string(weights.size()) +
                     " entries, expected " +
                     std::to_string(node_count * node_count));
  }
  const std::size_t n = node_count;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!std::isfinite(weights[i * n + j])) {
        std::ostringstream msg;
        msg << "non-finite weight at (" << i << ", " << j << ")";
        throw InputError(msg.str());
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    double& d = weights[i * n + i];
    if (std::abs(d) > tolerance) {
      std::ostringstream msg;
      msg << "diagonal entry (" << i << ", " << i << ") = " << d
          << " is not zero";
      throw InputError(msg.str());
    }
    d = 0.0;
    for (std::size_t j = i + 1; j < n; ++j) {
      const double upper = weights[i * n + j];
      const double lower = weights[j * n + i];
      if (std::abs(upper - lower) > tolerance) {
        std::ostringstream msg;
        msg << "asymmetric weights: w(" << i << ", " << j << ") = " << upper
            << " but w(" << j << ", " << i << ") = " << lower;
        throw InputError(msg.str());
      }
      weights[j * n + i] = upper;
    }
  }
  return WeightedNetwork(n, std::move(weights));
}

std::vector<WeightedEdge> WeightedNetwork::edges() const {
  std::vector<WeightedEdge> out;
  out.reserve(edge_count());
  for (std::size_t i = 0; i < node_count_; ++i) {
    for (std::size_t j = i + 1; j < node_count_; ++j) {
      out.push_back({i, j, weights_[i * node_count_ + j]});
    }
  }
  return out;
}

WeightedNetwork WeightedNetwork::with_labels(
    std::vector<std::string> labels) const {
  if (!labels.empty() && labels.size() != node_count_) {
    throw InputError("label table has " + std::to_string(labels.size()) +
                     " names for " + std::to_string(node_count_) + " nodes");
  }
  WeightedNetwork copy = *this;
  copy.labels_ = std::move(labels);
  return copy;
}

WeightedNetwork WeightedNetwork::relabeled(
    const std::vector<std::size_t>& perm) const {
  const std::size_t n = node_count_;
  if (perm.size() != n) {
    throw InputError("permutation size does not match node count");
  }
  std::vector<bool> seen(n, false);
  for (auto p : perm) {
    if (p >= n || seen[p]) throw InputError("not a permutation");
    seen[p] = true;
  }
  std::vector<double> w(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      w[perm[i] * n + perm[j]] = weights_[i * n + j];
    }
  }
  WeightedNetwork out(n, std::move(w));
  if (!labels_.empty()) {
    out.labels_.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.labels_[perm[i]] = labels_[i];
  }
  return out;
}

WeightedNetwork from_edge_list(const std::vector<WeightedEdge>& entries,
                               std::size_t node_count) {
  if (node_count < 2) {
    throw InputError("network needs at least 2 nodes, got " +
                     std::to_string(node_count));
  }
  const std::size_t n = node_count;
  std::vector<double> w(n * n, 0.0);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& e : entries) {
    if (e.i >= n || e.j >= n) {
      std::ostringstream msg;
      msg << "edge (" << e.i << ", " << e.j << ") out of range for " << n
          << " nodes";
      throw InputError(msg.str());
    }
    if (e.i == e.j) {
      throw InputError("self-loop at node " + std::to_string(e.i));
    }
    const auto key = std::minmax(e.i, e.j);
    if (!seen.insert(key).second) {
      std::ostringstream msg;
      msg << "duplicate edge (" << key.first << ", " << key.second << ")";
      throw InputError(msg.str());
    }
    w[e.i * n + e.j] = e.w;
    w[e.j * n + e.i] = e.w;
  }
  return WeightedNetwork::from_matrix(n, std::move(w));
}

}  // namespace topvs
