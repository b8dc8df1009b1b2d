#pragma once

#include <cstddef>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "eulerbern/binomial.hpp"
#include "eulerbern/errors.hpp"
#include "eulerbern/poly.hpp"
#include "eulerbern/rational.hpp"

namespace eulerbern {

/// Memoized Euler numbers E_0, E_1, ... with E_n = E_n(0), i.e. the
/// coefficients of 2/(e^t + 1) = sum E_n t^n / n!.
///
/// The table only grows. Lookups of cached indices take a shared lock;
/// extension is serialized under an exclusive lock, so one cache may be
/// shared by concurrent workers.
class EulerCache {
 public:
  EulerCache() : values_{Rational(1)} {}

  Rational number(std::size_t n) {
    {
      std::shared_lock lock(mutex_);
      if (n < values_.size()) return values_[n];
    }
    std::unique_lock lock(mutex_);
    extend_locked(n);
    return values_[n];
  }

  /// Ensures E_0..E_n are cached.
  void reserve(std::size_t n) {
    {
      std::shared_lock lock(mutex_);
      if (n < values_.size()) return;
    }
    std::unique_lock lock(mutex_);
    extend_locked(n);
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return values_.size();
  }

  /// Process-wide cache used by the free functions below.
  static EulerCache& shared() {
    static EulerCache cache;
    return cache;
  }

 private:
  // E_n = -(1/2) sum_{l=0}^{n-1} C(n, l) E_l, from (e^t + 1) * sum E_n t^n/n! = 2.
  void extend_locked(std::size_t n) {
    values_.reserve(n + 1);
    for (std::size_t m = values_.size(); m <= n; ++m) {
      Rational acc;
      for (std::size_t l = 0; l < m; ++l) {
        if (values_[l].is_zero()) continue;
        acc += Rational(binom(m, l)) * values_[l];
      }
      values_.push_back(acc * Rational(-1, 2));
    }
  }

  mutable std::shared_mutex mutex_;
  std::vector<Rational> values_;
};

inline Rational euler_number(std::size_t n, EulerCache& cache = EulerCache::shared()) {
  return cache.number(n);
}

/// E_n(x) = sum_{l=0}^{n} C(n, l) E_l x^{n-l}.
inline Poly euler_poly(std::size_t n, EulerCache& cache = EulerCache::shared()) {
  std::vector<Rational> coeffs(n + 1);
  for (std::size_t l = 0; l <= n; ++l) {
    coeffs[n - l] = Rational(binom(n, l)) * cache.number(l);
  }
  return Poly(std::move(coeffs));
}

/// True iff E_n(1 - x) = (-1)^n E_n(x) coefficientwise.
inline bool euler_reflect_check(std::size_t n, EulerCache& cache = EulerCache::shared()) {
  const Poly e = euler_poly(n, cache);
  return e.reflected() == e * Rational(alternating_sign(static_cast<long long>(n)));
}

/// E_n(2), checked against 2 + E_n. Only defined for n > 0.
inline Rational euler_at_two(std::size_t n, EulerCache& cache = EulerCache::shared()) {
  if (n == 0) throw std::invalid_argument("euler_at_two requires n > 0 (E_0(2) = 1, not 2 + E_0)");
  const Rational value = euler_poly(n, cache).eval(2);
  const Rational expected = Rational(2) + cache.number(n);
  if (value != expected) {
    throw IdentityViolation("E_" + std::to_string(n) + "(2) = " + value.to_string() +
                            " but 2 + E_n = " + expected.to_string());
  }
  return value;
}

}  // namespace eulerbern
