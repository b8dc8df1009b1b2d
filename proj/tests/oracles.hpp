#pragma once

// Test-only reference computations. Each one takes a different route from
// the library code it is compared against.

#include <cstdint>
#include <random>
#include <vector>

#include "eulerbern/poly.hpp"
#include "eulerbern/rational.hpp"

namespace eulerbern::oracle {

/// E_0..E_n_max from the power series 2/(e^t + 1): invert the truncated
/// series (1 + e^t)/2 coefficientwise, then scale by n!.
inline std::vector<Rational> euler_numbers_by_series(std::size_t n_max) {
  std::vector<Rational> a(n_max + 1);  // (1 + e^t)/2
  Rational inv_factorial = 1;
  for (std::size_t i = 0; i <= n_max; ++i) {
    if (i > 0) inv_factorial /= Rational(static_cast<long>(i));
    a[i] = inv_factorial * Rational(1, 2);
  }
  a[0] = 1;
  std::vector<Rational> b(n_max + 1);  // 1/a
  b[0] = 1;
  for (std::size_t n = 1; n <= n_max; ++n) {
    Rational acc;
    for (std::size_t i = 1; i <= n; ++i) acc += a[i] * b[n - i];
    b[n] = -acc;
  }
  std::vector<Rational> out(n_max + 1);
  Rational factorial = 1;
  for (std::size_t n = 0; n <= n_max; ++n) {
    if (n > 0) factorial *= Rational(static_cast<long>(n));
    out[n] = b[n] * factorial;
  }
  return out;
}

/// Pascal's triangle up to row n_max.
inline std::vector<std::vector<Integer>> pascal(std::size_t n_max) {
  std::vector<std::vector<Integer>> rows(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    rows[n].assign(n + 1, 1);
    for (std::size_t k = 1; k < n; ++k) rows[n][k] = rows[n - 1][k - 1] + rows[n - 1][k];
  }
  return rows;
}

/// sum_{x=0}^{count-1} (-1)^x f(x), term by term over the rationals.
inline Rational alternating_sum(const Poly& f, std::uint64_t count) {
  Rational acc;
  for (std::uint64_t x = 0; x < count; ++x) {
    const Rational v = f.eval(Rational(static_cast<long>(x)));
    if (x % 2 == 0) {
      acc += v;
    } else {
      acc -= v;
    }
  }
  return acc;
}

/// ((1+q)/(1+q^L)) sum_{x=0}^{L-1} f(x) (-q)^x over the rationals.
inline Rational q_sum_exact(const Poly& f, const Rational& q, std::uint64_t count) {
  Rational acc, weight = 1;
  for (std::uint64_t x = 0; x < count; ++x) {
    acc += f.eval(Rational(static_cast<long>(x))) * weight;
    weight *= -q;
  }
  return (Rational(1) + q) / (Rational(1) + pow(q, count)) * acc;
}

/// Modular inverse by the extended Euclidean algorithm on machine integers.
inline std::int64_t inverse_mod(std::int64_t u, std::int64_t m) {
  std::int64_t r0 = m, r1 = ((u % m) + m) % m, s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  return ((s0 % m) + m) % m;
}

/// x^k (1-x)^m evaluated directly.
inline Rational pow_product(std::size_t k, std::size_t m, const Rational& x) {
  return pow(x, k) * pow(Rational(1) - x, m);
}

/// Small random rationals and polynomials for property tests.
class Generator {
 public:
  explicit Generator(std::uint32_t seed) : rng_(seed) {}

  Rational rational(long num_bound = 20, long den_bound = 9) {
    std::uniform_int_distribution<long> num(-num_bound, num_bound), den(1, den_bound);
    return Rational(Integer(num(rng_)), Integer(den(rng_)));
  }

  /// Rational whose denominator avoids the prime p.
  Rational p_integral(std::uint64_t p) {
    while (true) {
      Rational r = rational(60, 12);
      if (mpz_divisible_ui_p(r.den().get_mpz_t(), static_cast<unsigned long>(p)) == 0) return r;
    }
  }

  Poly poly(std::size_t max_degree = 5) {
    std::uniform_int_distribution<std::size_t> deg(0, max_degree);
    std::vector<Rational> c(deg(rng_) + 1);
    for (auto& x : c) x = rational();
    return Poly(std::move(c));
  }

  std::size_t natural(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }

 private:
  std::mt19937 rng_;
};

}  // namespace eulerbern::oracle
