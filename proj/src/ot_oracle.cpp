#include "topvs/ot_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "topvs/error.hpp"

namespace topvs {

double ot_oracle(std::span<const double> a, std::span<const double> b,
                 PNorm p) {
  if (a.size() != b.size()) {
    throw InputError("oracle needs equal-size point sets");
  }
  if (a.empty()) throw InputError("oracle needs nonempty point sets");
  if (a.size() > kOracleMaxSize) {
    throw InputError("oracle limited to " + std::to_string(kOracleMaxSize) +
                     " points (factorial enumeration)");
  }
  const std::size_t n = a.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});

  double best = std::numeric_limits<double>::infinity();
  do {
    double cost = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double gap = std::abs(a[i] - b[perm[i]]);
      if (p.is_infinite()) {
        cost = std::max(cost, gap);
      } else {
        cost += std::pow(gap, p.value());
      }
    }
    best = std::min(best, cost);
  } while (std::next_permutation(perm.begin(), perm.end()));

  const double total = p.is_infinite() ? best : std::pow(best, 1.0 / p.value());
  return total / static_cast<double>(n);
}

}  // namespace topvs
