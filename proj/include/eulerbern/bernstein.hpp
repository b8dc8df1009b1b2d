#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>

#include "eulerbern/binomial.hpp"
#include "eulerbern/poly.hpp"
#include "eulerbern/rational.hpp"

namespace eulerbern {

struct BernsteinIndex {
  std::size_t k = 0;
  std::size_t n = 0;

  friend bool operator==(const BernsteinIndex&, const BernsteinIndex&) = default;
};

/// B_{k,n}(x) = C(n, k) x^k (1 - x)^{n-k} in the monomial basis.
/// k > n gives the zero polynomial.
inline Poly bernstein_poly(BernsteinIndex idx) {
  if (idx.k > idx.n) return {};
  return expand_pow_product(idx.k, idx.n - idx.k) * Rational(binom(idx.n, idx.k));
}

inline Rational bernstein_eval(BernsteinIndex idx, const Rational& x) {
  return bernstein_poly(idx).eval(x);
}

/// Bernstein operator of order n: sum_k samples[k] * B_{k,n}(x), where
/// samples[k] = f(k/n).
inline Rational bernstein_operator(std::span<const Rational> samples, std::size_t n,
                                   const Rational& x) {
  if (samples.size() != n + 1) {
    throw std::invalid_argument("bernstein_operator of order " + std::to_string(n) + " needs " +
                                std::to_string(n + 1) + " samples, got " +
                                std::to_string(samples.size()));
  }
  Rational acc;
  for (std::size_t k = 0; k <= n; ++k) {
    if (samples[k].is_zero()) continue;
    acc += samples[k] * bernstein_eval({k, n}, x);
  }
  return acc;
}

}  // namespace eulerbern
