#pragma once

#include <algorithm>
#include <cstdint>

#include "eulerbern/rational.hpp"

namespace eulerbern {

/// C(n, k) by the multiplicative formula, dividing exactly at every step.
/// Returns 0 when k > n.
inline Integer binom(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  Integer result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // result * (n - k + i) is divisible by i since the running value is C(n-k+i, i).
    result *= static_cast<unsigned long>(n - k + i);
    mpz_divexact_ui(result.get_mpz_t(), result.get_mpz_t(), static_cast<unsigned long>(i));
  }
  return result;
}

}  // namespace eulerbern
