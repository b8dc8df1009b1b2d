#pragma once

#include <cstddef>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "eulerbern/errors.hpp"
#include "eulerbern/euler.hpp"
#include "eulerbern/padic.hpp"
#include "eulerbern/poly.hpp"
#include "eulerbern/rational.hpp"

namespace eulerbern {

/// Value of the fermionic invariant integral I_{-1}(f) of a polynomial.
struct IntegralResult {
  Rational value;

  friend bool operator==(const IntegralResult&, const IntegralResult&) = default;
};

/// I_{-1}(f) = sum_j coeff_j(f) E_j, using the moments I_{-1}(x^n) = E_n.
inline IntegralResult integrate(const Poly& f, EulerCache& cache = EulerCache::shared()) {
  Rational acc;
  const auto& coeffs = f.coeffs();
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j].is_zero()) continue;
    acc += coeffs[j] * cache.number(j);
  }
  return {acc};
}

/// I_{-1}(f(x + n)), computed on the shifted polynomial and checked against
/// (-1)^n I_{-1}(f) + 2 sum_{l=0}^{n-1} (-1)^{n-1-l} f(l).
inline IntegralResult integrate_shifted(const Poly& f, std::size_t n,
                                        EulerCache& cache = EulerCache::shared()) {
  const IntegralResult direct = integrate(f.shifted(Rational(static_cast<long>(n))), cache);
  Rational via_shift = integrate(f, cache).value * Rational(alternating_sign(static_cast<long long>(n)));
  for (std::size_t l = 0; l < n; ++l) {
    const int sign = alternating_sign(static_cast<long long>(n - 1 - l));
    via_shift += Rational(2 * sign) * f.eval(Rational(static_cast<long>(l)));
  }
  if (direct.value != via_shift) {
    throw IdentityViolation("shifted integral mismatch: direct " + direct.value.to_string() +
                            " vs shift rule " + via_shift.to_string());
  }
  return direct;
}

/// I_{-1}((1 - x)^n) by expansion, checked against 2 + E_n. Requires n >= 1.
inline IntegralResult integrate_reflected(std::size_t n, EulerCache& cache = EulerCache::shared()) {
  if (n == 0) throw std::invalid_argument("integrate_reflected requires n >= 1");
  const IntegralResult value = integrate(expand_pow_product(0, n), cache);
  const Rational expected = Rational(2) + cache.number(n);
  if (value.value != expected) {
    throw IdentityViolation("integral of (1-x)^" + std::to_string(n) + " is " +
                            value.value.to_string() + ", expected " + expected.to_string());
  }
  return value;
}

namespace detail {

/// f scaled to integer coefficients: f = poly / denominator.
struct IntegerPoly {
  std::vector<Integer> coeffs;
  Integer denominator = 1;

  explicit IntegerPoly(const Poly& f) {
    for (const auto& c : f.coeffs()) {
      mpz_lcm(denominator.get_mpz_t(), denominator.get_mpz_t(), c.den().get_mpz_t());
    }
    coeffs.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) coeffs.push_back(c.num() * (denominator / c.den()));
  }

  void eval(Integer& out, const Integer& x) const {
    out = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
      out *= x;
      out += *it;
    }
  }
};

inline std::uint64_t term_count(std::uint64_t p, std::size_t N) {
  constexpr std::uint64_t kMaxTerms = std::uint64_t{1} << 40;
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < N; ++i) {
    if (count > kMaxTerms / p) throw std::invalid_argument("p^N too large for a partial sum");
    count *= p;
  }
  return count;
}

/// Accumulates sum (-1)^x g(x) over x in [begin, end) into acc; g integral.
inline void accumulate_alternating(Integer& acc, const IntegerPoly& g, std::uint64_t begin,
                                   std::uint64_t end) {
  Integer x, value;
  for (std::uint64_t i = begin; i < end; ++i) {
    x = static_cast<unsigned long>(i);
    g.eval(value, x);
    if (i % 2 == 0) {
      acc += value;
    } else {
      acc -= value;
    }
  }
}

}  // namespace detail

/// S_N = sum_{x=0}^{p^N - 1} (-1)^x f(x), exact. At q = 1 the normalizer
/// (1+q)/(1+q^{p^N}) is 1 because p^N is odd.
inline Rational partial_sum(const Poly& f, std::uint64_t p, std::size_t N) {
  require_odd_prime(p);
  const detail::IntegerPoly g(f);
  Integer acc;
  detail::accumulate_alternating(acc, g, 0, detail::term_count(p, N));
  return Rational(acc, g.denominator);
}

struct PartialSumRow {
  std::size_t N = 0;
  Rational sum;
  Valuation gap;  // vp(S_N - I_{-1}(f), p)

  friend bool operator==(const PartialSumRow&, const PartialSumRow&) = default;
};

/// Partial sums S_1..S_{N_max} and their p-adic distance to the symbolic integral.
struct PartialSumTrace {
  std::uint64_t p = 3;
  Rational limit;
  std::vector<PartialSumRow> rows;

  /// Columns N, S_N, valuation_gap.
  std::string to_csv() const {
    std::ostringstream out;
    out << "N,S_N,valuation_gap\n";
    for (const auto& row : rows) out << row.N << ',' << row.sum << ',' << row.gap << '\n';
    return out.str();
  }
};

inline PartialSumTrace convergence_trace(const Poly& f, std::uint64_t p, std::size_t N_max,
                                         EulerCache& cache = EulerCache::shared()) {
  require_odd_prime(p);
  PartialSumTrace trace{p, integrate(f, cache).value, {}};
  const detail::IntegerPoly g(f);
  Integer acc;
  std::uint64_t done = 1;
  detail::accumulate_alternating(acc, g, 0, 1);
  for (std::size_t N = 1; N <= N_max; ++N) {
    const std::uint64_t end = detail::term_count(p, N);
    // The range [0, p^{N-1}) is already summed.
    detail::accumulate_alternating(acc, g, done, end);
    done = end;
    Rational sum(acc, g.denominator);
    const Valuation gap = vp(sum - trace.limit, p);
    trace.rows.push_back({N, std::move(sum), gap});
  }
  return trace;
}

/// The q-deformed sum ((1+q)/(1+q^{p^N})) sum_{x=0}^{p^N-1} f(x)(-q)^x in Z/p^M.
/// Requires vp(q - 1) >= 1 and p-integral coefficients.
inline PadicApprox q_partial_sum(const Poly& f, std::uint64_t p, const Rational& q, std::size_t N,
                                 unsigned long precision) {
  require_odd_prime(p);
  if (vp(q - Rational(1), p) < Valuation(1)) {
    throw std::invalid_argument("q = " + q.to_string() + " violates |1 - q|_p < 1");
  }
  std::vector<Integer> coeffs;
  for (const auto& c : f.coeffs()) coeffs.push_back(reduce_mod(c, p, precision).residue());
  const Integer modulus = prime_power(p, precision);
  const Integer q_res = reduce_mod(q, p, precision).residue();
  const Integer minus_q = modulus - q_res;
  const std::uint64_t terms = detail::term_count(p, N);

  Integer acc, weight = 1, x, value;
  for (std::uint64_t i = 0; i < terms; ++i) {
    x = static_cast<unsigned long>(i);
    value = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
      value = (value * x + *it) % modulus;
    }
    acc = (acc + value * weight) % modulus;
    weight = (weight * minus_q) % modulus;
  }

  Integer q_pow;
  const Integer exponent = Integer(static_cast<unsigned long>(terms));
  mpz_powm(q_pow.get_mpz_t(), q_res.get_mpz_t(), exponent.get_mpz_t(), modulus.get_mpz_t());
  // 1 + q^{p^N} = 2 mod p, a unit for odd p.
  const Integer normalizer = (Integer(1) + q_res) * unit_inverse(Integer(1) + q_pow, p, precision);
  return {p, precision, Integer(acc * normalizer)};
}

}  // namespace eulerbern
