#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <future>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "eulerbern/euler.hpp"
#include "eulerbern/identities/closed_forms.hpp"
#include "eulerbern/identities/product_spec.hpp"
#include "eulerbern/identities/report.hpp"

namespace eulerbern {

/// Optional overrides for sweep bounds; unset fields take per-suite defaults.
struct Ranges {
  std::optional<std::size_t> n_max;
  std::optional<std::size_t> k_max;
  std::optional<std::size_t> s_max;
  std::optional<std::size_t> m_max;
};

/// Default bounds per family. The Euler index reached stays at or below ~64.
struct SuiteDefaults {
  static constexpr std::size_t single_n = 20;
  static constexpr std::size_t double_n = 20;
  static constexpr std::size_t triple_n = 12;
  static constexpr std::size_t sfold_s = 4;
  static constexpr std::size_t sfold_n = 8;
  static constexpr std::size_t sfold_k = 3;
  static constexpr std::size_t power_s = 4;
  static constexpr std::size_t power_n = 8;
  static constexpr std::size_t power_m = 2;
  static constexpr std::size_t power_k = 3;
  static constexpr std::size_t full_n = 5;
  static constexpr std::size_t full_m = 2;
  static constexpr std::size_t euler_n = 60;
};

enum class VariantSelection { corrected, as_printed, both };

inline VariantSelection parse_variant_selection(const std::string& text) {
  if (text == "corrected") return VariantSelection::corrected;
  if (text == "as-printed") return VariantSelection::as_printed;
  if (text == "both") return VariantSelection::both;
  throw std::invalid_argument("unknown variant selection '" + text + "'");
}

inline std::vector<Variant> variants_of(VariantSelection sel) {
  switch (sel) {
    case VariantSelection::corrected: return {Variant::corrected};
    case VariantSelection::as_printed: return {Variant::as_printed};
    case VariantSelection::both: return {Variant::corrected, Variant::as_printed};
  }
  return {};
}

/// Checks whose as-printed form carries an index typo. Every other check has
/// identical corrected and as-printed forms.
inline const std::set<std::string>& known_typo_checks() {
  static const std::set<std::string> checks{"T12-forward", "C13", "T14-I", "C15"};
  return checks;
}

using Reports = std::vector<IdentityReport>;

namespace detail {

using Ints = std::vector<std::int64_t>;

inline std::int64_t i64(std::size_t v) { return static_cast<std::int64_t>(v); }

inline Ints to_ints(const std::vector<std::size_t>& xs) { return {xs.begin(), xs.end()}; }

/// Emits one report per requested variant. The callbacks receive the variant
/// so that forms with an as-printed typo can switch index rules.
struct Emitter {
  Reports& out;
  std::string suite;
  std::vector<Variant> variants;

  template <class Lhs, class Rhs>
  void emit(const std::string& check, const std::vector<Param>& params, std::size_t degree,
            Lhs lhs, Rhs rhs) {
    for (Variant v : variants) {
      out.push_back(make_report(suite, check, params, degree, v, lhs(v), rhs(v)));
    }
  }
};

template <class T>
auto always(T value) {
  return [value = std::move(value)](Variant) -> std::optional<Rational> { return value; };
}

/// All nondecreasing sequences of length len with entries in [0, bound].
inline void nondecreasing(std::size_t len, std::size_t bound,
                          const std::function<void(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> cur(len, 0);
  while (true) {
    visit(cur);
    std::size_t i = len;
    while (i > 0 && cur[i - 1] == bound) --i;
    if (i == 0) return;
    const std::size_t next = cur[i - 1] + 1;
    for (std::size_t j = i - 1; j < len; ++j) cur[j] = next;
  }
}

/// All sequences of length len with entries in [0, bound], lexicographic.
inline void all_tuples(std::size_t len, std::size_t bound,
                       const std::function<void(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> cur(len, 0);
  while (true) {
    visit(cur);
    std::size_t i = len;
    while (i > 0 && cur[i - 1] == bound) --i;
    if (i == 0) return;
    ++cur[i - 1];
    for (std::size_t j = i; j < len; ++j) cur[j] = 0;
  }
}

inline ProductSpec same_k_product(std::size_t k, const std::vector<std::size_t>& ns) {
  ProductSpec spec;
  for (auto n : ns) spec.factors.push_back({k, n, 1});
  return spec;
}

}  // namespace detail

// ---- single factor ----------------------------------------------------------

/// Reflection of the moment rule: integral of (1-x)^n is 2 + E_n for n >= 1.
inline Reports suite_T1(const Ranges& r, VariantSelection sel, EulerCache& cache = EulerCache::shared()) {
  using namespace detail;
  Reports out;
  Emitter em{out, "T1", variants_of(sel)};
  const auto n_max = r.n_max.value_or(SuiteDefaults::single_n);
  for (std::size_t n = 1; n <= n_max; ++n) {
    const Rational lhs = integrate(expand_pow_product(0, n), cache).value;
    em.emit("T1", {Param::scalar("n", i64(n))}, n, always(lhs),
            always(Rational(2) + cache.number(n)));
  }
  return out;
}

inline Reports suite_P2(const Ranges& r, VariantSelection sel, EulerCache& cache = EulerCache::shared()) {
  using namespace detail;
  Reports out;
  Emitter em{out, "P2", variants_of(sel)};
  const auto n_max = r.n_max.value_or(SuiteDefaults::single_n);
  const auto k_max = r.k_max.value_or(n_max);
  for (std::size_t k = 0; k <= k_max; ++k) {
    for (std::size_t n = k; n <= n_max; ++n) {
      em.emit("P2", {Param::scalar("k", i64(k)), Param::scalar("n", i64(n))}, n,
              always(oracle_integral({{{k, n, 1}}}, cache)), always(closed_form::prop2(k, n, cache)));
    }
  }
  return out;
}

inline Reports suite_T3(const Ranges& r, VariantSelection sel, EulerCache& cache = EulerCache::shared()) {
  using namespace detail;
  Reports out;
  Emitter em{out, "T3", variants_of(sel)};
  const auto n_max = r.n_max.value_or(SuiteDefaults::single_n);
  const auto k_max = r.k_max.value_or(n_max);
  for (std::size_t k = 0; k <= k_max; ++k) {
    for (std::size_t n = k + 1; n <= n_max; ++n) {
      em.emit("T3", {Param::scalar("k", i64(k)), Param::scalar("n", i64(n))}, n,
              always(oracle_integral({{{k, n, 1}}}, cache)), always(closed_form::thm3(k, n, cache)));
    }
  }
  return out;
}

inline Reports suite_C4(const Ranges& r, VariantSelection sel, EulerCache& cache = EulerCache::shared()) {
  using namespace detail;
  Reports out;
  Emitter em{out, "C4", variants_of(sel)};
  const auto n_max = r.n_max.value_or(SuiteDefaults::single_n);
  const auto k_max = r.k_max.value_or(n_max);
  for (std::size_t k = 0; k <= k_max; ++k) {
    for (std::size_t n = k + 1; n <= n_max; ++n) {
      em.emit("C4", {Param::scalar("k", i64(k)), Param::scalar("n", i64(n))}, n,
              always(closed_form::cor4_lhs(k, n, cache)), always(closed_form::cor4_rhs(k, n, cache)));
    }
  }
  return out;
}

// ---- two factors ------------------------------------------------------------

namespace detail {
template <class Body>
void two_factor_grid(const Ranges& r, bool constrained, Body body) {
  const auto n_max = r.n_max.value_or(SuiteDefaults::double_n);
  const auto k_max = r.k_max.value_or(n_max);
  for (std::size_t k = 0; k <= k_max; ++k) {
    for (std::size_t n = 0; n <= n_max; ++n) {
      for (std::size_t m = 0; m <= n_max; ++m) {
        if (constrained && n + m <= 2 * k) continue;
        body(k, n, m, std::vector<Param>{Param::scalar("k", i64(k)), Param::scalar("n", i64(n)),
                                         Param::scalar("m", i64(m))});
      }
    }
  }
}
}  // namespace detail

inline Reports suite_T5(const Ranges& r, VariantSelection sel, EulerCache& cache = EulerCache::shared()) {
  using namespace detail;
  Reports out;
  Emitter em{out, "T5", variants_of(sel)};
  two_factor_grid(r, true, [&](std::size_t k, std::size_t n, std::size_t m, const std::vector<Param>& ps) {
    em.emit("T5", ps, n + m, always(oracle_integral(same_k_product(k, {n, m}), cache)),
            always(closed_form::thm5(k, n, m, cache)));
  });
  return out;
}

inline Reports suite_P6(const Ranges& r, VariantSelection sel, EulerCache& cache = EulerCache::shared()) {
  using namespace detail;
  Reports out;
  Emitter em{out, "P6", variants_of(sel)};
  two_factor_grid(r, false, [&](std::size_t k, std::size_t n, std::size_t m, const std::vector<Param>& ps) {
    em.emit("P6", ps, n + m, always(oracle_integral(same_k_product(k, {n, m}), cache)),
            always(closed_form::prop6(k, n, m, cache)));
  });
  return out;
}

inline Reports suite_C7(const Ranges& r, VariantSelection sel, EulerCache& cache = EulerCache::shared()) {
  using namespace detail;
  Reports out;
  Emitter em{out, "C7", variants_of(sel)};
  two_factor_grid(r, true, [&](std::size_t k, std::size_t n, std::size_t m, const std::vector<Param>& ps) {
    em.emit("C7", ps, n + m, always(closed_form::cor7_lhs(k, n, m, cache)),
            always(closed_form::cor7_rhs(k, n, m, cache)));
  });
  return out;
}

// ---- three factors ----------------------------------------------------------

namespace detail {
template <class Body>
void three_factor_grid(const Ranges& r, Body body) {
  const auto n_max = r.n_max.value_or(SuiteDefaults::triple_n);
  const auto k_max = r.k_max.value_or(n_max);
  for (std::size_t k = 0; k <= k_max; ++k) {
    for (std::size_t n = 0; n <= n_max; ++n) {
      for (std::size_t m = 0; m <= n_max; ++m) {
        for (std::size_t s = 0; s <= n_max; ++s) {
          if (n + m + s <= 3 * k) continue;
          body(k, n, m, s,
               std::vector<Param>{Param::scalar("k", i64(k)), Param::scalar("n", i64(n)),
                                  Param::scalar("m", i64(m)), Param::scalar("s", i64(s))});
        }
      }
    }
  }
}
}  // namespace detail

inline Reports suite_T8(const Ranges& r, VariantSelection sel, EulerCache& cache = EulerCache::shared()) {
  using namespace detail;
  Reports out;
  Emitter em{out, "T8", variants_of(sel)};
  three_factor_grid(r, [&](std::size_t k, std::size_t n, std::size_t m, std::size_t s,
                           const std::vector<Param>& ps) {
    em.emit("T8", ps, n + m + s, always(oracle_integral(same_k_product(k, {n, m, s}), cache)),
            always(closed_form::thm8(k, n, m, s, cache)));
  });
  return out;
}

/// The forward three-factor expansion against the oracle, plus the corollary
/// equating it with the reflected form.
inline Reports suite_C9(const Ranges& r, VariantSelection sel, EulerCache& cache = EulerCache::shared()) {
  using namespace detail;
  Reports out;
  Emitter em{out, "C9", variants_of(sel)};
  three_factor_grid(r, [&](std::size_t k, std::size_t n, std::size_t m, std::size_t s,
                           const std::vector<Param>& ps) {
    em.emit("T8-forward", ps, n + m + s, always(oracle_integral(same_k_product(k, {n, m, s}), cache)),
            always(closed_form::thm8_forward(k, n, m, s, cache)));
    em.emit("C9", ps, n + m + s, always(closed_form::cor9_lhs(k, n, m, s, cache)),
            always(closed_form::cor9_rhs(k, n, m, s, cache)));
  });
  return out;
}

// ---- s factors --------------------------------------------------------------

namespace detail {
/// k, then every ordered tuple of factor degrees (n_1, ..., n_s).
template <class Body>
void s_factor_grid(const Ranges& r, Body body) {
  const auto s_max = r.s_max.value_or(SuiteDefaults::sfold_s);
  const auto n_max = r.n_max.value_or(SuiteDefaults::sfold_n);
  const auto k_max = r.k_max.value_or(SuiteDefaults::sfold_k);
  for (std::size_t k = 0; k <= k_max; ++k) {
    for (std::size_t s = 1; s <= s_max; ++s) {
      all_tuples(s, n_max, [&](const std::vector<std::size_t>& ns) {
        std::size_t total = 0;
        for (auto n : ns) total += n;
        if (total <= s * k) return;
        body(k, ns, total,
             std::vector<Param>{Param::scalar("k", i64(k)), Param::list("n", to_ints(ns))});
      });
    }
  }
}
}  // namespace detail

inline Reports suite_T10(const Ranges& r, VariantSelection sel, EulerCache& cache = EulerCache::shared()) {
  using namespace detail;
  Reports out;
  Emitter em{out, "T10", variants_of(sel)};
  s_factor_grid(r, [&](std::size_t k, const std::vector<std::size_t>& ns, std::size_t total,
                       const std::vector<Param>& ps) {
    em.emit("T10", ps, total, always(oracle_integral(same_k_product(k, ns), cache)),
            always(closed_form::thm10(k, ns, cache)));
  });
  return out;
}

inline Reports suite_C11(const Ranges& r, VariantSelection sel, EulerCache& cache = EulerCache::shared()) {
  using namespace detail;
  Reports out;
  Emitter em{out, "C11", variants_of(sel)};
  s_factor_grid(r, [&](std::size_t k, const std::vector<std::size_t>& ns, std::size_t total,
                       const std::vector<Param>& ps) {
    em.emit("T10-forward", ps, total, always(oracle_integral(same_k_product(k, ns), cache)),
            always(closed_form::thm10_forward(k, ns, cache)));
    em.emit("C11", ps, total, always(closed_form::cor11_lhs(k, ns, cache)),
            always(closed_form::cor11_rhs(k, ns, cache)));
  });
  return out;
}

// ---- products with multiplicities -------------------------------------------

namespace detail {
/// k, then factor pairs (n_i, m_i) with 1 <= m_i <= m_max, as nondecreasing
/// sequences of the code n_i * m_max + (m_i - 1). A factor with m_i = 0 is the
/// constant 1 and would only repeat a shorter tuple.
/// When constrained, only tuples with sum n_i m_i > k sum m_i are visited.
template <class Body>
void power_grid(const Ranges& r, bool constrained, Body body) {
  const auto s_max = r.s_max.value_or(SuiteDefaults::power_s);
  const auto n_max = r.n_max.value_or(SuiteDefaults::power_n);
  const auto m_max = r.m_max.value_or(SuiteDefaults::power_m);
  const auto k_max = r.k_max.value_or(SuiteDefaults::power_k);
  if (m_max == 0) return;
  const std::size_t pair_count = (n_max + 1) * m_max;
  for (std::size_t k = 0; k <= k_max; ++k) {
    for (std::size_t s = 1; s <= s_max; ++s) {
      nondecreasing(s, pair_count - 1, [&](const std::vector<std::size_t>& codes) {
        std::vector<std::size_t> ns, ms;
        std::size_t degree = 0, power = 0;
        for (auto c : codes) {
          ns.push_back(c / m_max);
          ms.push_back(c % m_max + 1);
          degree += ns.back() * ms.back();
          power += k * ms.back();
        }
        if (constrained && degree <= power) return;
        body(k, ns, ms, degree,
             std::vector<Param>{Param::scalar("k", i64(k)), Param::list("n", to_ints(ns)),
                                Param::list("m", to_ints(ms))});
      });
    }
  }
}

inline ProductSpec power_product(std::size_t k, const std::vector<std::size_t>& ns,
                                 const std::vector<std::size_t>& ms) {
  ProductSpec spec;
  for (std::size_t i = 0; i < ns.size(); ++i) spec.factors.push_back({k, ns[i], ms[i]});
  return spec;
}
}  // namespace detail

inline Reports suite_T12(const Ranges& r, VariantSelection sel, EulerCache& cache = EulerCache::shared()) {
  using namespace detail;
  Reports out;
  Emitter em{out, "T12", variants_of(sel)};
  power_grid(r, true, [&](std::size_t k, const std::vector<std::size_t>& ns,
                          const std::vector<std::size_t>& ms, std::size_t degree,
                          const std::vector<Param>& ps) {
    em.emit("T12", ps, degree, always(oracle_integral(power_product(k, ns, ms), cache)),
            always(closed_form::thm12(k, ns, ms, cache)));
  });
  return out;
}

/// Forward expansion of the multiplicity product (unconstrained) and its
/// corollary. Both carry the K - j index typo in the as-printed variant.
inline Reports suite_C13(const Ranges& r, VariantSelection sel, EulerCache& cache = EulerCache::shared()) {
  using namespace detail;
  Reports out;
  Emitter em{out, "C13", variants_of(sel)};
  power_grid(r, false, [&](std::size_t k, const std::vector<std::size_t>& ns,
                           const std::vector<std::size_t>& ms, std::size_t degree,
                           const std::vector<Param>& ps) {
    em.emit("T12-forward", ps, degree, always(oracle_integral(power_product(k, ns, ms), cache)),
            [&](Variant v) { return closed_form::thm12_forward(k, ns, ms, v, cache); });
    std::size_t power = 0;
    for (auto m : ms) power += k * m;
    if (degree <= power) return;
    em.emit("C13", ps, degree, [&](Variant v) { return closed_form::cor13_lhs(k, ns, ms, v, cache); },
            always(closed_form::cor13_rhs(k, ns, ms, cache)));
  });
  return out;
}

// ---- full-degree products ---------------------------------------------------

namespace detail {
/// n, then multiplicities m_0..m_n in lexicographic order.
template <class Body>
void full_degree_grid(const Ranges& r, Body body) {
  const auto n_max = r.n_max.value_or(SuiteDefaults::full_n);
  const auto m_max = r.m_max.value_or(SuiteDefaults::full_m);
  for (std::size_t n = 0; n <= n_max; ++n) {
    all_tuples(n + 1, m_max, [&](const std::vector<std::size_t>& ms) {
      std::size_t total = 0, weighted = 0;
      for (std::size_t i = 0; i <= n; ++i) {
        total += ms[i];
        weighted += i * ms[i];
      }
      body(n, ms, n * total, weighted,
           std::vector<Param>{Param::scalar("n", i64(n)), Param::list("m", to_ints(ms))});
    });
  }
}

inline ProductSpec full_degree_product(std::size_t n, const std::vector<std::size_t>& ms) {
  ProductSpec spec;
  for (std::size_t i = 0; i <= n; ++i) spec.factors.push_back({i, n, ms[i]});
  return spec;
}
}  // namespace detail

inline Reports suite_T14(const Ranges& r, VariantSelection sel, EulerCache& cache = EulerCache::shared()) {
  using namespace detail;
  Reports out;
  Emitter em{out, "T14", variants_of(sel)};
  full_degree_grid(r, [&](std::size_t n, const std::vector<std::size_t>& ms, std::size_t degree,
                          std::size_t weighted, const std::vector<Param>& ps) {
    const Rational oracle = oracle_integral(full_degree_product(n, ms), cache);
    if (degree > weighted) {
      em.emit("T14-I", ps, degree, always(oracle),
              [&](Variant v) { return closed_form::thm14_reflected(n, ms, v, cache); });
    }
    em.emit("T14-II", ps, degree, always(oracle), always(closed_form::thm14_forward(n, ms, cache)));
    em.emit("T14-reduction", ps, degree, always(oracle),
            always(closed_form::thm14_bernstein_reduction(n, ms, cache)));
  });
  return out;
}

inline Reports suite_C15(const Ranges& r, VariantSelection sel, EulerCache& cache = EulerCache::shared()) {
  using namespace detail;
  Reports out;
  Emitter em{out, "C15", variants_of(sel)};
  full_degree_grid(r, [&](std::size_t n, const std::vector<std::size_t>& ms, std::size_t degree,
                          std::size_t weighted, const std::vector<Param>& ps) {
    if (degree <= weighted) return;
    em.emit("C15", ps, degree, always(closed_form::cor15_lhs(n, ms, cache)),
            [&](Variant v) { return closed_form::cor15_rhs(n, ms, v, cache); });
  });
  return out;
}

// ---- Euler baseline ---------------------------------------------------------

/// Recurrence, E_n(0) = E_n, E_n(2) = 2 + E_n, reflection and vanishing of
/// even-index numbers. The reflection check reports the l1 distance between
/// the coefficient vectors of E_n(1-x) and (-1)^n E_n(x) against 0.
inline Reports suite_EULER(const Ranges& r, VariantSelection sel, EulerCache& cache = EulerCache::shared()) {
  using namespace detail;
  Reports out;
  Emitter em{out, "EULER", variants_of(sel)};
  const auto n_max = r.n_max.value_or(SuiteDefaults::euler_n);
  for (std::size_t n = 0; n <= n_max; ++n) {
    const std::vector<Param> ps{Param::scalar("n", i64(n))};
    Rational generating;
    for (std::size_t l = 0; l <= n; ++l) generating += Rational(binom(n, l)) * cache.number(l);
    generating += cache.number(n);
    em.emit("E-recurrence", ps, n, always(generating), always(Rational(n == 0 ? 2 : 0)));

    const Poly e = euler_poly(n, cache);
    em.emit("E-at-zero", ps, n, always(e.eval(0)), always(cache.number(n)));
    if (n > 0) em.emit("E-at-two", ps, n, always(e.eval(2)), always(Rational(2) + cache.number(n)));

    const Poly diff = e.reflected() - e * Rational(alternating_sign(static_cast<long long>(n)));
    Rational l1;
    for (const auto& c : diff.coeffs()) l1 += abs(c);
    em.emit("E-reflection", ps, n, always(l1), always(Rational(0)));

    if (n >= 2 && n % 2 == 0) em.emit("E-even-zero", ps, n, always(cache.number(n)), always(Rational(0)));
  }
  return out;
}

// ---- registry ---------------------------------------------------------------

using SuiteFn = Reports (*)(const Ranges&, VariantSelection, EulerCache&);

struct SuiteEntry {
  const char* id;
  SuiteFn run;
};

/// Canonical order; reports are always emitted in this order.
inline const std::vector<SuiteEntry>& suite_registry() {
  static const std::vector<SuiteEntry> entries{
      {"T1", suite_T1},   {"P2", suite_P2},   {"T3", suite_T3},   {"C4", suite_C4},
      {"T5", suite_T5},   {"P6", suite_P6},   {"C7", suite_C7},   {"T8", suite_T8},
      {"C9", suite_C9},   {"T10", suite_T10}, {"C11", suite_C11}, {"T12", suite_T12},
      {"C13", suite_C13}, {"T14", suite_T14}, {"C15", suite_C15}, {"EULER", suite_EULER},
  };
  return entries;
}

/// Expands "ALL", validates ids and returns them in canonical order without duplicates.
inline std::vector<std::string> resolve_suites(const std::vector<std::string>& ids) {
  std::set<std::string> wanted;
  for (const auto& id : ids) {
    if (id == "ALL") {
      for (const auto& e : suite_registry()) wanted.insert(e.id);
      continue;
    }
    const auto& reg = suite_registry();
    if (std::none_of(reg.begin(), reg.end(), [&](const SuiteEntry& e) { return id == e.id; })) {
      throw std::invalid_argument("unknown suite '" + id + "'");
    }
    wanted.insert(id);
  }
  std::vector<std::string> out;
  for (const auto& e : suite_registry()) {
    if (wanted.count(e.id)) out.emplace_back(e.id);
  }
  return out;
}

inline SuiteFn find_suite(const std::string& id) {
  for (const auto& e : suite_registry()) {
    if (id == e.id) return e.run;
  }
  throw std::invalid_argument("unknown suite '" + id + "'");
}

/// Runs the named suites, concurrently when threads > 1, and returns the
/// reports in canonical suite order.
inline Reports run_suites(const std::vector<std::string>& ids, const Ranges& ranges,
                          VariantSelection sel, EulerCache& cache = EulerCache::shared(),
                          unsigned threads = 1) {
  const auto suites = resolve_suites(ids);
  std::vector<Reports> parts(suites.size());
  if (threads <= 1) {
    for (std::size_t i = 0; i < suites.size(); ++i) parts[i] = find_suite(suites[i])(ranges, sel, cache);
  } else {
    std::vector<std::future<Reports>> futures;
    for (const auto& id : suites) {
      futures.push_back(std::async(std::launch::async, [&, fn = find_suite(id)] { return fn(ranges, sel, cache); }));
    }
    for (std::size_t i = 0; i < futures.size(); ++i) parts[i] = futures[i].get();
  }
  Reports out;
  for (auto& p : parts) out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
  return out;
}

/// Suite that emits a given check.
inline std::string suite_of_check(const std::string& check) {
  static const std::vector<std::pair<std::string, std::string>> owners{
      {"T1", "T1"},   {"P2", "P2"},   {"T3", "T3"},   {"C4", "C4"},
      {"T5", "T5"},   {"P6", "P6"},   {"C7", "C7"},   {"T8", "T8"},
      {"T8-forward", "C9"},   {"C9", "C9"},   {"T10", "T10"}, {"T10-forward", "C11"},
      {"C11", "C11"}, {"T12", "T12"}, {"T12-forward", "C13"}, {"C13", "C13"},
      {"T14-I", "T14"}, {"T14-II", "T14"}, {"T14-reduction", "T14"}, {"C15", "C15"},
      {"E-recurrence", "EULER"}, {"E-at-zero", "EULER"}, {"E-at-two", "EULER"},
      {"E-reflection", "EULER"}, {"E-even-zero", "EULER"},
  };
  for (const auto& [c, s] : owners) {
    if (c == check) return s;
  }
  throw std::invalid_argument("unknown check '" + check + "'");
}

namespace detail {
inline std::vector<std::vector<std::int64_t>> param_key(const IdentityReport& r) {
  std::vector<std::vector<std::int64_t>> key;
  for (const auto& p : r.params) key.push_back(p.values);
  return key;
}
}  // namespace detail

/// Smallest parameter tuple at which the given form of a check disagrees with
/// its other side, ordered by total degree first and then lexicographically.
/// Only tuples where both sides are defined count as counterexamples.
inline std::optional<IdentityReport> find_counterexample(const std::string& check, Variant variant,
                                                         const Ranges& ranges,
                                                         EulerCache& cache = EulerCache::shared()) {
  const Reports reports = find_suite(suite_of_check(check))(
      ranges, variant == Variant::corrected ? VariantSelection::corrected : VariantSelection::as_printed,
      cache);
  std::optional<IdentityReport> best;
  for (const auto& r : reports) {
    if (r.check != check || r.equal || !r.lhs || !r.rhs) continue;
    if (!best || std::make_pair(r.degree, detail::param_key(r)) <
                     std::make_pair(best->degree, detail::param_key(*best))) {
      best = r;
    }
  }
  return best;
}

/// Per-(suite, check, variant) tallies in order of first appearance.
/// counterexample is the smallest failing tuple with both sides defined (same
/// order as find_counterexample), or else the first undefined one.
struct CheckSummary {
  std::string suite;
  std::string check;
  Variant variant = Variant::corrected;
  std::size_t total = 0;
  std::size_t failed = 0;
  std::size_t undefined = 0;
  std::optional<IdentityReport> counterexample;
};

inline std::vector<CheckSummary> summarize(const Reports& reports) {
  std::vector<CheckSummary> out;
  for (const auto& r : reports) {
    auto it = std::find_if(out.begin(), out.end(), [&](const CheckSummary& s) {
      return s.suite == r.suite && s.check == r.check && s.variant == r.variant;
    });
    if (it == out.end()) {
      out.push_back({r.suite, r.check, r.variant, 0, 0, 0, std::nullopt});
      it = std::prev(out.end());
    }
    ++it->total;
    if (r.equal) continue;
    ++it->failed;
    const bool defined = r.lhs && r.rhs;
    if (!defined) ++it->undefined;
    auto& best = it->counterexample;
    const bool best_defined = best && best->lhs && best->rhs;
    if (!best || (defined && !best_defined) ||
        (defined && std::make_pair(r.degree, detail::param_key(r)) <
                        std::make_pair(best->degree, detail::param_key(*best)))) {
      best = r;
    }
  }
  return out;
}

}  // namespace eulerbern
