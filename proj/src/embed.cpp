#include "topvs/embed.hpp"

#include <algorithm>

#include "topvs/error.hpp"
#include "topvs/wasserstein.hpp"

namespace topvs {

TopologicalVector::TopologicalVector(std::size_t ref_size,
                                     std::vector<double> births,
                                     std::vector<double> deaths)
    : ref_size_(ref_size), births_(std::move(births)), deaths_(std::move(deaths)) {
  if (ref_size_ < 3) {
    throw InputError("reference size must be at least 3, got " +
                     std::to_string(ref_size_));
  }
  const auto [m, n] = counts_for_size(ref_size_);
  if (births_.size() != m || deaths_.size() != n) {
    throw InputError("vector blocks have lengths (" +
                     std::to_string(births_.size()) + ", " +
                     std::to_string(deaths_.size()) + "), reference size " +
                     std::to_string(ref_size_) + " needs (" +
                     std::to_string(m) + ", " + std::to_string(n) + ")");
  }
  if (!std::is_sorted(births_.begin(), births_.end()) ||
      !std::is_sorted(deaths_.begin(), deaths_.end())) {
    throw InputError("vector blocks must be ascending");
  }
}

std::vector<double> TopologicalVector::concatenated() const {
  std::vector<double> out;
  out.reserve(dimension());
  out.insert(out.end(), births_.begin(), births_.end());
  out.insert(out.end(), deaths_.begin(), deaths_.end());
  return out;
}

TopologicalVector embed(const BirthDeathDecomposition& barcode,
                        std::size_t ref_size) {
  if (ref_size < 3) {
    throw InputError("reference size must be at least 3, got " +
                     std::to_string(ref_size));
  }
  if (barcode.deaths.empty()) {
    throw InputError("a " + std::to_string(barcode.node_count) +
                     "-node network has no cycles, so its death set is "
                     "empty; networks need at least 3 nodes to be embedded");
  }
  const auto [m, n] = counts_for_size(ref_size);
  return TopologicalVector(
      ref_size, pseudoinverse_sample(SortedValueSet(barcode.births), m),
      pseudoinverse_sample(SortedValueSet(barcode.deaths), n));
}

TopologicalVector embed(const WeightedNetwork& net, std::size_t ref_size) {
  return embed(decompose(net), ref_size);
}

DatasetEmbedding embed_dataset(std::span<const WeightedNetwork> nets,
                               std::optional<std::size_t> ref_size) {
  if (nets.empty()) throw InputError("cannot embed an empty dataset");
  DatasetEmbedding out;
  for (const auto& net : nets) {
    out.largest_node_count = std::max(out.largest_node_count, net.node_count());
  }
  out.ref_size = ref_size.value_or(out.largest_node_count);
  if (out.ref_size < out.largest_node_count) {
    throw InputError("reference size " + std::to_string(out.ref_size) +
                     " is below the largest network size " +
                     std::to_string(out.largest_node_count));
  }
  out.exceeds_largest = out.ref_size > out.largest_node_count;
  out.vectors.reserve(nets.size());
  for (std::size_t k = 0; k < nets.size(); ++k) {
    try {
      out.vectors.push_back(embed(nets[k], out.ref_size));
    } catch (const InputError& e) {
      throw InputError("network " + std::to_string(k) + ": " + e.what());
    }
  }
  return out;
}

std::pair<std::vector<double>, std::vector<double>> reconstruct_barcode(
    const TopologicalVector& vec) {
  return {vec.births(), vec.deaths()};
}

}  // namespace topvs
