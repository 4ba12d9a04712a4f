#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "topvs/graph.hpp"

namespace topvs {

/// Random modular network: nodes split evenly into contiguous modules.
/// A within-module edge draws N(1, 0.5^2) with probability r and N(0, 0.5^2)
/// otherwise; a between-module edge uses probability 1 - r for N(1, 0.5^2).
/// Negative weights are clipped to zero.
struct ModularSpec {
  std::size_t node_count = 90;
  std::size_t module_count = 3;
  double within_probability = 0.75;
  std::uint64_t seed = 0;
};

inline constexpr double kSignalMean = 1.0;
inline constexpr double kNoiseMean = 0.0;
inline constexpr double kWeightStddev = 0.5;

struct SimulatedNetwork {
  WeightedNetwork network;
  std::vector<std::size_t> module_of;
  /// Per pair i < j in row-major order: 1 if the weight came from N(1, .).
  std::vector<std::uint8_t> signal_branch;
};

void validate(const ModularSpec& spec);

/// Edges are drawn row-major over i < j, each consuming one uniform for the
/// branch and one for the normal variate, from stream 0 of `spec.seed`.
SimulatedNetwork generate_detailed(const ModularSpec& spec);
WeightedNetwork generate(const ModularSpec& spec);

struct BenchmarkSpec {
  std::vector<std::size_t> sizes{90};
  /// One group per entry; group k gets label "L<k+1>".
  std::vector<std::size_t> module_counts{3, 5};
  double within_probability = 0.75;
  /// Networks per group, split evenly over `sizes`.
  std::size_t per_group = 30;
  std::uint64_t seed = 0;
};

struct BenchmarkNetwork {
  std::string label;
  ModularSpec spec;
  WeightedNetwork network;
};

/// Groups in order, sizes in order within each group. Network k is
/// simulated with seed derive_seed(seed, k).
std::vector<BenchmarkNetwork> generate_benchmark(const BenchmarkSpec& spec);

}  // namespace topvs
