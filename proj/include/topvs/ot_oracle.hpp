#pragma once

#include <cstddef>
#include <span>

#include "topvs/wasserstein.hpp"

namespace topvs {

inline constexpr std::size_t kOracleMaxSize = 8;

/// Brute-force optimal transport between two equal-size sets of unit point
/// masses: minimum over all bijections, normalized as (cost)^(1/p) / N.
/// Inputs need not be sorted. Test oracle only; rejects N > kOracleMaxSize.
double ot_oracle(std::span<const double> a, std::span<const double> b,
                 PNorm p);

}  // namespace topvs
