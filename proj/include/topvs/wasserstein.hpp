#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "topvs/topological_vector.hpp"

namespace topvs {

/// Exponent of a p-Wasserstein distance or p-norm: finite p >= 1, or infinity.
class PNorm {
 public:
  /// Throws InputError unless p >= 1 (p = +inf is accepted).
  explicit PNorm(double p);
  static PNorm infinity();
  /// Accepts a decimal number or "inf".
  static PNorm parse(const std::string& text);

  bool is_infinite() const { return infinite_; }
  double value() const { return p_; }
  std::string to_string() const;

 private:
  double p_;
  bool infinite_;
};

/// Ascending, finite, nonempty list of values: a birth set or a death set
/// viewed as an empirical distribution of equal point masses.
class SortedValueSet {
 public:
  explicit SortedValueSet(std::vector<double> values);

  const std::vector<double>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }

 private:
  std::vector<double> values_;
};

/// Quantile function F^{-1}(j/k) for j = 1..k: element ceil(j*N/k) - 1.
std::vector<double> pseudoinverse_sample(const SortedValueSet& set,
                                         std::size_t k);

/// Plain p-norm of x - y; the max norm for p = inf.
double lp_distance(std::span<const double> x, std::span<const double> y,
                   PNorm p);

/// (1/k^p * sum_j |F_a^{-1}(j/k) - F_b^{-1}(j/k)|^p)^(1/p); for p = inf the
/// largest sample difference divided by k.
double wasserstein_approx(const SortedValueSet& a, const SortedValueSet& b,
                          std::size_t k, PNorm p);

/// Same-cardinality distance matching the l-th smallest values; rejects
/// unequal sizes.
double wasserstein_exact(const SortedValueSet& a, const SortedValueSet& b,
                         PNorm p);

/// p-product metric on (births, deaths) pairs, i.e. the p-norm of the
/// concatenated difference. Both vectors must share a reference size.
double product_metric(const TopologicalVector& x, const TopologicalVector& y,
                      PNorm p);

/// Coordinate-wise mean; the barcode mean under the approximated distance.
TopologicalVector barcode_mean(std::span<const TopologicalVector> vectors);

}  // namespace topvs
