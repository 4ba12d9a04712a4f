#include "topvs/wasserstein.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "topvs/error.hpp"

namespace topvs {

PNorm::PNorm(double p) : p_(p), infinite_(std::isinf(p) && p > 0) {
  if (std::isnan(p) || p < 1.0) {
    throw InputError("p must be >= 1 or inf, got " + std::to_string(p));
  }
}

PNorm PNorm::infinity() {
  return PNorm(std::numeric_limits<double>::infinity());
}

PNorm PNorm::parse(const std::string& text) {
  if (text == "inf" || text == "infinity" || text == "Inf") return infinity();
  std::size_t used = 0;
  double p = 0.0;
  try {
    p = std::stod(text, &used);
  } catch (const std::exception&) {
    throw InputError("invalid p '" + text + "'");
  }
  if (used != text.size()) throw InputError("invalid p '" + text + "'");
  return PNorm(p);
}

std::string PNorm::to_string() const {
  if (infinite_) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", p_);
  return buf;
}

SortedValueSet::SortedValueSet(std::vector<double> values)
    : values_(std::move(values)) {
  if (values_.empty()) {
    throw InputError("value set is empty (degenerate barcode)");
  }
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (!std::isfinite(values_[k])) {
      throw InputError("value set contains a non-finite value");
    }
    if (k > 0 && values_[k] < values_[k - 1]) {
      throw InputError("value set is not ascending at position " +
                       std::to_string(k));
    }
  }
}

std::vector<double> pseudoinverse_sample(const SortedValueSet& set,
                                         std::size_t k) {
  if (k == 0) throw InputError("sample count k must be positive");
  const auto& v = set.values();
  const std::size_t n = v.size();
  std::vector<double> out(k);
  for (std::size_t j = 1; j <= k; ++j) {
    // ceil(j*n/k) in integers; exact at the jumps of the empirical CDF.
    const std::size_t index = (j * n + k - 1) / k - 1;
    out[j - 1] = v[index];
  }
  return out;
}

double lp_distance(std::span<const double> x, std::span<const double> y,
                   PNorm p) {
  if (x.size() != y.size()) {
    throw InputError("p-norm distance between vectors of different length");
  }
  if (p.is_infinite()) {
    double worst = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
      worst = std::max(worst, std::abs(x[k] - y[k]));
    }
    return worst;
  }
  const double e = p.value();
  double sum = 0.0;
  if (e == 1.0) {
    for (std::size_t k = 0; k < x.size(); ++k) sum += std::abs(x[k] - y[k]);
    return sum;
  }
  if (e == 2.0) {
    for (std::size_t k = 0; k < x.size(); ++k) {
      const double d = x[k] - y[k];
      sum += d * d;
    }
    return std::sqrt(sum);
  }
  for (std::size_t k = 0; k < x.size(); ++k) {
    sum += std::pow(std::abs(x[k] - y[k]), e);
  }
  return std::pow(sum, 1.0 / e);
}

double wasserstein_approx(const SortedValueSet& a, const SortedValueSet& b,
                          std::size_t k, PNorm p) {
  const auto sa = pseudoinverse_sample(a, k);
  const auto sb = pseudoinverse_sample(b, k);
  // (k^-p * S)^(1/p) == S^(1/p) / k, and the p = inf limit is max / k.
  return lp_distance(sa, sb, p) / static_cast<double>(k);
}

double wasserstein_exact(const SortedValueSet& a, const SortedValueSet& b,
                         PNorm p) {
  if (a.size() != b.size()) {
    throw InputError("exact Wasserstein distance needs equal cardinalities (" +
                     std::to_string(a.size()) + " vs " +
                     std::to_string(b.size()) +
                     "); use the approximated distance instead");
  }
  return lp_distance(a.values(), b.values(), p) /
         static_cast<double>(a.size());
}

double product_metric(const TopologicalVector& x, const TopologicalVector& y,
                      PNorm p) {
  if (x.ref_size() != y.ref_size()) {
    throw InputError("product metric needs a shared reference size (" +
                     std::to_string(x.ref_size()) + " vs " +
                     std::to_string(y.ref_size()) + ")");
  }
  const auto m = x.births().size();
  const auto n = x.deaths().size();
  const double births = static_cast<double>(m) *
                        wasserstein_approx(SortedValueSet(x.births()),
                                           SortedValueSet(y.births()), m, p);
  const double deaths = static_cast<double>(n) *
                        wasserstein_approx(SortedValueSet(x.deaths()),
                                           SortedValueSet(y.deaths()), n, p);
  if (p.is_infinite()) return std::max(births, deaths);
  const double e = p.value();
  if (e == 1.0) return births + deaths;
  if (e == 2.0) return std::sqrt(births * births + deaths * deaths);
  return std::pow(std::pow(births, e) + std::pow(deaths, e), 1.0 / e);
}

TopologicalVector barcode_mean(std::span<const TopologicalVector> vectors) {
  if (vectors.empty()) throw InputError("mean of an empty list of vectors");
  const auto ref = vectors.front().ref_size();
  std::vector<double> births(vectors.front().births().size(), 0.0);
  std::vector<double> deaths(vectors.front().deaths().size(), 0.0);
  for (const auto& v : vectors) {
    if (v.ref_size() != ref) {
      throw InputError("mean over vectors with different reference sizes");
    }
    for (std::size_t k = 0; k < births.size(); ++k) births[k] += v.births()[k];
    for (std::size_t k = 0; k < deaths.size(); ++k) deaths[k] += v.deaths()[k];
  }
  const double count = static_cast<double>(vectors.size());
  for (auto& b : births) b /= count;
  for (auto& d : deaths) d /= count;
  return TopologicalVector(ref, std::move(births), std::move(deaths));
}

}  // namespace topvs
