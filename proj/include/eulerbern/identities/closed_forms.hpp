#pragma once

// Closed-form values of fermionic integrals of Bernstein products, written in
// terms of Euler numbers and binomial coefficients only. None of these expand
// a polynomial; the expansion route lives in oracle_integral.
//
// Notation shared by the multi-factor forms:
//   K = k * sum m_i         (power of x in the integrand)
//   D = sum n_i m_i         (total degree)
//   A = sum_{i>=1} i m_i    (power of x for the full-degree product of B_{i,n}^{m_i})

#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "eulerbern/binomial.hpp"
#include "eulerbern/euler.hpp"
#include "eulerbern/rational.hpp"

namespace eulerbern::closed_form {

/// Corrected forms follow the re-derived Euler indices; as-printed forms keep
/// the indices exactly as originally published, typos included.
enum class Variant { corrected, as_printed };

/// sum_{j=0}^{upper} C(upper, j) * sign(j) * E_{index(j)}.
/// Empty (zero) when upper < 0; nullopt when some index is negative.
template <class Sign, class Index>
std::optional<Rational> binomial_euler_sum(long upper, Sign sign, Index index, EulerCache& cache) {
  Rational acc;
  for (long j = 0; j <= upper; ++j) {
    const long idx = index(j);
    if (idx < 0) return std::nullopt;
    const Rational e = cache.number(static_cast<std::size_t>(idx));
    if (e.is_zero()) continue;
    Rational term(binom(static_cast<std::uint64_t>(upper), static_cast<std::uint64_t>(j)));
    if (sign(j) < 0) term = -term;
    acc += term * e;
  }
  return acc;
}

namespace detail {

inline long as_long(std::size_t v) { return static_cast<long>(v); }

inline Rational two_plus_euler(long n, EulerCache& cache) {
  return Rational(2) + cache.number(static_cast<std::size_t>(n));
}

inline Rational value_or_throw(const std::optional<Rational>& v) {
  if (!v) throw std::logic_error("closed form referenced a negative Euler index");
  return *v;
}

inline Integer binomial_product(std::span<const std::size_t> ns, std::size_t k) {
  Integer out = 1;
  for (auto n : ns) out *= binom(n, k);
  return out;
}

inline Integer binomial_power_product(std::span<const std::size_t> ns,
                                      std::span<const std::size_t> ms, std::size_t k) {
  Integer out = 1;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    Integer b;
    mpz_pow_ui(b.get_mpz_t(), binom(ns[i], k).get_mpz_t(), ms[i]);
    out *= b;
  }
  return out;
}

inline std::size_t sum(std::span<const std::size_t> xs) {
  return std::accumulate(xs.begin(), xs.end(), std::size_t{0});
}

inline std::size_t dot(std::span<const std::size_t> a, std::span<const std::size_t> b) {
  std::size_t out = 0;
  for (std::size_t i = 0; i < a.size(); ++i) out += a[i] * b[i];
  return out;
}

inline int minus_one_pow(long e) { return alternating_sign(e); }

}  // namespace detail

// ---- single factor ----------------------------------------------------------

/// C(n,k) sum_{j=0}^{n-k} C(n-k,j) (-1)^j E_{k+j}; valid for all k, n.
inline Rational prop2(std::size_t k, std::size_t n, EulerCache& cache = EulerCache::shared()) {
  using namespace detail;
  const long kk = as_long(k);
  if (k > n) return Rational();
  return Rational(binom(n, k)) *
         value_or_throw(binomial_euler_sum(
             as_long(n - k), [](long j) { return minus_one_pow(j); },
             [kk](long j) { return kk + j; }, cache));
}

/// Reflected form; requires n > k.
inline Rational thm3(std::size_t k, std::size_t n, EulerCache& cache = EulerCache::shared()) {
  using namespace detail;
  if (n <= k) throw std::invalid_argument("reflected single-factor form requires n > k");
  if (k == 0) return two_plus_euler(as_long(n), cache);
  const long kk = as_long(k), nn = as_long(n);
  return Rational(binom(n, k)) *
         value_or_throw(binomial_euler_sum(
             kk, [kk](long j) { return minus_one_pow(kk - j); }, [nn](long j) { return nn - j; },
             cache));
}

inline Rational cor4_lhs(std::size_t k, std::size_t n, EulerCache& cache = EulerCache::shared()) {
  using namespace detail;
  const long kk = as_long(k);
  return value_or_throw(binomial_euler_sum(
      as_long(n) - kk, [](long j) { return minus_one_pow(j); }, [kk](long j) { return kk + j; },
      cache));
}

inline Rational cor4_rhs(std::size_t k, std::size_t n, EulerCache& cache = EulerCache::shared()) {
  using namespace detail;
  if (n <= k) throw std::invalid_argument("requires n > k");
  if (k == 0) return two_plus_euler(as_long(n), cache);
  const long kk = as_long(k), nn = as_long(n);
  return value_or_throw(binomial_euler_sum(
      kk, [kk](long j) { return minus_one_pow(kk - j); }, [nn](long j) { return nn - j; }, cache));
}

// ---- two factors B_{k,n} B_{k,m} ---------------------------------------------

/// Requires m + n > 2k. The sign is kept as (-1)^{j+2k}.
inline Rational thm5(std::size_t k, std::size_t n, std::size_t m,
                     EulerCache& cache = EulerCache::shared()) {
  using namespace detail;
  if (n + m <= 2 * k) throw std::invalid_argument("requires m + n > 2k");
  const long kk = as_long(k), total = as_long(n + m);
  if (k == 0) return two_plus_euler(total, cache);
  return Rational(binom(n, k) * binom(m, k)) *
         value_or_throw(binomial_euler_sum(
             2 * kk, [kk](long j) { return minus_one_pow(j + 2 * kk); },
             [total](long j) { return total - j; }, cache));
}

inline Rational prop6(std::size_t k, std::size_t n, std::size_t m,
                      EulerCache& cache = EulerCache::shared()) {
  using namespace detail;
  const long kk = as_long(k);
  return Rational(binom(n, k) * binom(m, k)) *
         value_or_throw(binomial_euler_sum(
             as_long(n + m) - 2 * kk, [](long j) { return minus_one_pow(j); },
             [kk](long j) { return j + 2 * kk; }, cache));
}

inline Rational cor7_lhs(std::size_t k, std::size_t n, std::size_t m,
                         EulerCache& cache = EulerCache::shared()) {
  using namespace detail;
  const long kk = as_long(k);
  return value_or_throw(binomial_euler_sum(
      as_long(n + m) - 2 * kk, [](long j) { return minus_one_pow(j); },
      [kk](long j) { return j + 2 * kk; }, cache));
}

inline Rational cor7_rhs(std::size_t k, std::size_t n, std::size_t m,
                         EulerCache& cache = EulerCache::shared()) {
  using namespace detail;
  if (n + m <= 2 * k) throw std::invalid_argument("requires m + n > 2k");
  const long kk = as_long(k), total = as_long(n + m);
  if (k == 0) return two_plus_euler(total, cache);
  return value_or_throw(binomial_euler_sum(
      2 * kk, [kk](long j) { return minus_one_pow(j + 2 * kk); },
      [total](long j) { return total - j; }, cache));
}

// ---- three factors B_{k,n} B_{k,m} B_{k,s} -----------------------------------

/// Requires n + m + s > 3k. The sign is kept as (-1)^{3k-j}.
inline Rational thm8(std::size_t k, std::size_t n, std::size_t m, std::size_t s,
                     EulerCache& cache = EulerCache::shared()) {
  using namespace detail;
  if (n + m + s <= 3 * k) throw std::invalid_argument("requires n + m + s > 3k");
  const long kk = as_long(k), total = as_long(n + m + s);
  if (k == 0) return two_plus_euler(total, cache);
  return Rational(binom(n, k) * binom(m, k) * binom(s, k)) *
         value_or_throw(binomial_euler_sum(
             3 * kk, [kk](long j) { return minus_one_pow(3 * kk - j); },
             [total](long j) { return total - j; }, cache));
}

/// Forward expansion of the three-factor integral; valid for all parameters.
inline Rational thm8_forward(std::size_t k, std::size_t n, std::size_t m, std::size_t s,
                             EulerCache& cache = EulerCache::shared()) {
  using namespace detail;
  const long kk = as_long(k);
  return Rational(binom(n, k) * binom(m, k) * binom(s, k)) *
         value_or_throw(binomial_euler_sum(
             as_long(n + m + s) - 3 * kk, [](long j) { return minus_one_pow(j); },
             [kk](long j) { return j + 3 * kk; }, cache));
}

inline Rational cor9_lhs(std::size_t k, std::size_t n, std::size_t m, std::size_t s,
                         EulerCache& cache = EulerCache::shared()) {
  using namespace detail;
  const long kk = as_long(k);
  return value_or_throw(binomial_euler_sum(
      as_long(n + m + s) - 3 * kk, [](long j) { return minus_one_pow(j); },
      [kk](long j) { return j + 3 * kk; }, cache));
}

inline Rational cor9_rhs(std::size_t k, std::size_t n, std::size_t m, std::size_t s,
                         EulerCache& cache = EulerCache::shared()) {
  using namespace detail;
  if (n + m + s <= 3 * k) throw std::invalid_argument("requires n + m + s > 3k");
  const long kk = as_long(k), total = as_long(n + m + s);
  if (k == 0) return two_plus_euler(total, cache);
  return value_or_throw(binomial_euler_sum(
      3 * kk, [kk](long j) { return minus_one_pow(3 * kk - j); },
      [total](long j) { return total - j; }, cache));
}

// ---- s factors B_{k,n_1} ... B_{k,n_s} ---------------------------------------

/// Requires sum n_i > s k.
inline Rational thm10(std::size_t k, std::span<const std::size_t> ns,
                      EulerCache& cache = EulerCache::shared()) {
  using namespace detail;
  const long sk = as_long(ns.size() * k), total = as_long(sum(ns));
  if (total <= sk) throw std::invalid_argument("requires n_1 + ... + n_s > s k");
  if (k == 0) return two_plus_euler(total, cache);
  return Rational(binomial_product(ns, k)) *
         value_or_throw(binomial_euler_sum(
             sk, [sk](long j) { return minus_one_pow(sk - j); },
             [total](long j) { return total - j; }, cache));
}

inline Rational thm10_forward(std::size_t k, std::span<const std::size_t> ns,
                              EulerCache& cache = EulerCache::shared()) {
  using namespace detail;
  const long sk = as_long(ns.size() * k), total = as_long(sum(ns));
  return Rational(binomial_product(ns, k)) *
         value_or_throw(binomial_euler_sum(
             total - sk, [](long j) { return minus_one_pow(j); }, [sk](long j) { return j + sk; },
             cache));
}

inline Rational cor11_lhs(std::size_t k, std::span<const std::size_t> ns,
                          EulerCache& cache = EulerCache::shared()) {
  using namespace detail;
  const long sk = as_long(ns.size() * k), total = as_long(sum(ns));
  return value_or_throw(binomial_euler_sum(
      total - sk, [](long j) { return minus_one_pow(j); }, [sk](long j) { return j + sk; }, cache));
}

inline Rational cor11_rhs(std::size_t k, std::span<const std::size_t> ns,
                          EulerCache& cache = EulerCache::shared()) {
  using namespace detail;
  const long sk = as_long(ns.size() * k), total = as_long(sum(ns));
  if (total <= sk) throw std::invalid_argument("requires n_1 + ... + n_s > s k");
  if (k == 0) return two_plus_euler(total, cache);
  return value_or_throw(binomial_euler_sum(
      sk, [sk](long j) { return minus_one_pow(sk - j); }, [total](long j) { return total - j; },
      cache));
}

// ---- products with multiplicities B_{k,n_i}^{m_i} ----------------------------

/// Requires D > K.
inline Rational thm12(std::size_t k, std::span<const std::size_t> ns,
                      std::span<const std::size_t> ms, EulerCache& cache = EulerCache::shared()) {
  using namespace detail;
  const long K = as_long(k * sum(ms)), D = as_long(dot(ns, ms));
  if (D <= K) throw std::invalid_argument("requires sum n_i m_i > k sum m_i");
  if (k == 0) return two_plus_euler(D, cache);
  return Rational(binomial_power_product(ns, ms, k)) *
         value_or_throw(binomial_euler_sum(
             K, [K](long j) { return minus_one_pow(K - j); }, [D](long j) { return D - j; },
             cache));
}

/// Forward expansion: index K + j (corrected) or K - j (as printed, which may
/// reach negative indices and is then undefined).
inline std::optional<Rational> thm12_forward(std::size_t k, std::span<const std::size_t> ns,
                                             std::span<const std::size_t> ms, Variant variant,
                                             EulerCache& cache = EulerCache::shared()) {
  using namespace detail;
  const long K = as_long(k * sum(ms)), D = as_long(dot(ns, ms));
  const bool printed = variant == Variant::as_printed;
  auto sum_value = binomial_euler_sum(
      D - K, [](long j) { return minus_one_pow(j); },
      [K, printed](long j) { return printed ? K - j : K + j; }, cache);
  if (!sum_value) return std::nullopt;
  return Rational(binomial_power_product(ns, ms, k)) * *sum_value;
}

inline std::optional<Rational> cor13_lhs(std::size_t k, std::span<const std::size_t> ns,
                                         std::span<const std::size_t> ms, Variant variant,
                                         EulerCache& cache = EulerCache::shared()) {
  using namespace detail;
  const long K = as_long(k * sum(ms)), D = as_long(dot(ns, ms));
  const bool printed = variant == Variant::as_printed;
  return binomial_euler_sum(
      D - K, [](long j) { return minus_one_pow(j); },
      [K, printed](long j) { return printed ? K - j : K + j; }, cache);
}

inline Rational cor13_rhs(std::size_t k, std::span<const std::size_t> ns,
                          std::span<const std::size_t> ms, EulerCache& cache = EulerCache::shared()) {
  using namespace detail;
  const long K = as_long(k * sum(ms)), D = as_long(dot(ns, ms));
  if (D <= K) throw std::invalid_argument("requires sum n_i m_i > k sum m_i");
  if (k == 0) return two_plus_euler(D, cache);
  return value_or_throw(binomial_euler_sum(
      K, [K](long j) { return minus_one_pow(K - j); }, [D](long j) { return D - j; }, cache));
}

// ---- full-degree products prod_{i=0}^{n} B_{i,n}^{m_i} ------------------------

namespace detail {
struct FullDegree {
  long n_total;  // n * sum m_i
  long a;        // sum i m_i
  Integer binomials;

  FullDegree(std::size_t n, std::span<const std::size_t> ms) : binomials(1) {
    if (ms.size() != n + 1) throw std::invalid_argument("need multiplicities m_0..m_n");
    std::size_t total = 0, weighted = 0;
    for (std::size_t i = 0; i <= n; ++i) {
      total += ms[i];
      weighted += i * ms[i];
      Integer b;
      mpz_pow_ui(b.get_mpz_t(), binom(n, i).get_mpz_t(), ms[i]);
      binomials *= b;
    }
    n_total = as_long(n * total);
    a = as_long(weighted);
  }
};
}  // namespace detail

/// Reflected form (part I); requires n sum m_i > sum i m_i. Corrected index is
/// n sum m_i - j; the as-printed index n sum m_i - sum i m_i does not depend on j.
inline Rational thm14_reflected(std::size_t n, std::span<const std::size_t> ms, Variant variant,
                                EulerCache& cache = EulerCache::shared()) {
  using namespace detail;
  const FullDegree fd(n, ms);
  if (fd.n_total <= fd.a) throw std::invalid_argument("requires n sum m_i > sum i m_i");
  if (fd.a == 0) return two_plus_euler(fd.n_total, cache);
  const long A = fd.a, NT = fd.n_total;
  const bool printed = variant == Variant::as_printed;
  return Rational(fd.binomials) *
         value_or_throw(binomial_euler_sum(
             A, [A](long j) { return minus_one_pow(A - j); },
             [NT, A, printed](long j) { return printed ? NT - A : NT - j; }, cache));
}

/// Forward form (part II); valid for all multiplicities.
inline Rational thm14_forward(std::size_t n, std::span<const std::size_t> ms,
                              EulerCache& cache = EulerCache::shared()) {
  using namespace detail;
  const FullDegree fd(n, ms);
  const long A = fd.a;
  return Rational(fd.binomials) *
         value_or_throw(binomial_euler_sum(
             fd.n_total - A, [](long j) { return minus_one_pow(j); },
             [A](long j) { return A + j; }, cache));
}

/// prod_{i>=1} C(n,i)^{m_i} / C(n M, A) times the single-factor integral of B_{A, n M}.
inline Rational thm14_bernstein_reduction(std::size_t n, std::span<const std::size_t> ms,
                                          EulerCache& cache = EulerCache::shared()) {
  using namespace detail;
  const FullDegree fd(n, ms);
  const auto a = static_cast<std::size_t>(fd.a);
  const auto nt = static_cast<std::size_t>(fd.n_total);
  return Rational(fd.binomials, binom(nt, a)) * prop2(a, nt, cache);
}

inline Rational cor15_lhs(std::size_t n, std::span<const std::size_t> ms,
                          EulerCache& cache = EulerCache::shared()) {
  using namespace detail;
  const FullDegree fd(n, ms);
  const long A = fd.a;
  return value_or_throw(binomial_euler_sum(
      fd.n_total - A, [](long j) { return minus_one_pow(j); }, [A](long j) { return A + j; },
      cache));
}

inline Rational cor15_rhs(std::size_t n, std::span<const std::size_t> ms, Variant variant,
                          EulerCache& cache = EulerCache::shared()) {
  using namespace detail;
  const FullDegree fd(n, ms);
  if (fd.n_total <= fd.a) throw std::invalid_argument("requires n sum m_i > sum i m_i");
  if (fd.a == 0) return two_plus_euler(fd.n_total, cache);
  const long A = fd.a, NT = fd.n_total;
  const bool printed = variant == Variant::as_printed;
  return value_or_throw(binomial_euler_sum(
      A, [A](long j) { return minus_one_pow(A - j); },
      [NT, A, printed](long j) { return printed ? NT - A : NT - j; }, cache));
}

}  // namespace eulerbern::closed_form
