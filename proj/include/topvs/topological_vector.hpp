#pragma once

#include <cstddef>
#include <vector>

namespace topvs {

/// Point of the topological vector space: sampled birth and death quantile
/// functions at a shared reference network size.
///
/// Blocks are kept apart so either barcode can be read back directly; use
/// concatenated() for classifier input.
class TopologicalVector {
 public:
  /// Validates block lengths against `ref_size` and that both are ascending.
  TopologicalVector(std::size_t ref_size, std::vector<double> births,
                    std::vector<double> deaths);

  std::size_t ref_size() const { return ref_size_; }
  const std::vector<double>& births() const { return births_; }
  const std::vector<double>& deaths() const { return deaths_; }
  std::size_t dimension() const { return births_.size() + deaths_.size(); }

  std::vector<double> concatenated() const;

  friend bool operator==(const TopologicalVector&,
                         const TopologicalVector&) = default;

 private:
  std::size_t ref_size_;
  std::vector<double> births_;
  std::vector<double> deaths_;
};

}  // namespace topvs
