#include "topvs/simgen.hpp"

#include <algorithm>

#include "topvs/error.hpp"
#include "topvs/random.hpp"

namespace topvs {

void validate(const ModularSpec& spec) {
  if (spec.node_count < 2) throw InputError("modular network needs >= 2 nodes");
  if (spec.module_count == 0) throw InputError("module count must be positive");
  if (spec.node_count % spec.module_count != 0) {
    throw InputError(std::to_string(spec.node_count) +
                     " nodes cannot be split evenly into " +
                     std::to_string(spec.module_count) + " modules");
  }
  if (!(spec.within_probability >= 0.0 && spec.within_probability <= 1.0)) {
    throw InputError("within-module probability must lie in [0, 1]");
  }
}

SimulatedNetwork generate_detailed(const ModularSpec& spec) {
  validate(spec);
  const std::size_t n = spec.node_count;
  const std::size_t module_size = n / spec.module_count;

  std::vector<std::size_t> module_of(n);
  for (std::size_t i = 0; i < n; ++i) module_of[i] = i / module_size;

  CounterRng rng(spec.seed, 0);
  std::vector<double> w(n * n, 0.0);
  std::vector<std::uint8_t> signal;
  signal.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool within = module_of[i] == module_of[j];
      const double p_signal =
          within ? spec.within_probability : 1.0 - spec.within_probability;
      const bool is_signal = rng.uniform01() < p_signal;
      const double mean = is_signal ? kSignalMean : kNoiseMean;
      const double weight = std::max(0.0, rng.normal(mean, kWeightStddev));
      w[i * n + j] = weight;
      w[j * n + i] = weight;
      signal.push_back(is_signal ? 1 : 0);
    }
  }
  return {WeightedNetwork::from_matrix(n, std::move(w)), std::move(module_of),
          std::move(signal)};
}

WeightedNetwork generate(const ModularSpec& spec) {
  return generate_detailed(spec).network;
}

std::vector<BenchmarkNetwork> generate_benchmark(const BenchmarkSpec& spec) {
  if (spec.per_group == 0) throw InputError("per_group must be at least 1");
  if (spec.sizes.empty()) throw InputError("benchmark needs at least one size");
  if (spec.module_counts.empty()) {
    throw InputError("benchmark needs at least one module count");
  }
  if (spec.per_group % spec.sizes.size() != 0) {
    throw InputError("per_group " + std::to_string(spec.per_group) +
                     " cannot be split evenly over " +
                     std::to_string(spec.sizes.size()) + " sizes");
  }
  const std::size_t per_size = spec.per_group / spec.sizes.size();

  std::vector<BenchmarkNetwork> out;
  out.reserve(spec.per_group * spec.module_counts.size());
  std::uint64_t index = 0;
  for (std::size_t g = 0; g < spec.module_counts.size(); ++g) {
    const std::string label = "L" + std::to_string(g + 1);
    for (const auto size : spec.sizes) {
      for (std::size_t k = 0; k < per_size; ++k) {
        ModularSpec net_spec{size, spec.module_counts[g],
                             spec.within_probability,
                             derive_seed(spec.seed, index++)};
        out.push_back({label, net_spec, generate(net_spec)});
      }
    }
  }
  return out;
}

}  // namespace topvs
