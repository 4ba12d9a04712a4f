#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "topvs/barcode.hpp"
#include "topvs/graph.hpp"
#include "topvs/topological_vector.hpp"

namespace topvs {

/// Samples the birth and death quantile functions at m = ref_size - 1 and
/// n = 1 + ref_size(ref_size - 3)/2 points. With ref_size equal to the
/// network size the blocks are the raw sorted sets.
TopologicalVector embed(const BirthDeathDecomposition& barcode,
                        std::size_t ref_size);
TopologicalVector embed(const WeightedNetwork& net, std::size_t ref_size);

struct DatasetEmbedding {
  std::size_t ref_size = 0;
  std::size_t largest_node_count = 0;
  /// True when ref_size was set above the largest network, so every network
  /// is upsampled.
  bool exceeds_largest = false;
  std::vector<TopologicalVector> vectors;
};

/// Embeds every network at a shared reference size: the largest node count,
/// or `ref_size` if given (which may not be smaller than that).
DatasetEmbedding embed_dataset(std::span<const WeightedNetwork> nets,
                               std::optional<std::size_t> ref_size = {});

std::pair<std::vector<double>, std::vector<double>> reconstruct_barcode(
    const TopologicalVector& vec);

}  // namespace topvs
