#include <gtest/gtest.h>

#include <set>
#include <vector>

#include "eulerbern/identities/closed_forms.hpp"
#include "eulerbern/identities/product_spec.hpp"
#include "eulerbern/identities/report.hpp"
#include "eulerbern/identities/suites.hpp"
#include "oracles.hpp"

namespace eulerbern {
namespace {

using closed_form::Variant;
using Sizes = std::vector<std::size_t>;

ProductSpec same_k(std::size_t k, const Sizes& ns, const Sizes& ms = {}) {
  ProductSpec spec;
  for (std::size_t i = 0; i < ns.size(); ++i) spec.factors.push_back({k, ns[i], ms.empty() ? 1 : ms[i]});
  return spec;
}

ProductSpec full_degree(std::size_t n, const Sizes& ms) {
  ProductSpec spec;
  for (std::size_t i = 0; i <= n; ++i) spec.factors.push_back({i, n, ms[i]});
  return spec;
}

// Same expansion, paired with Euler numbers from the series route.
Rational series_integral(const ProductSpec& spec) {
  const Poly f = spec.expand();
  const auto e = oracle::euler_numbers_by_series(static_cast<std::size_t>(std::max(0L, f.degree())));
  Rational acc;
  for (long j = 0; j <= f.degree(); ++j) acc += f.coeff(static_cast<std::size_t>(j)) * e[static_cast<std::size_t>(j)];
  return acc;
}

TEST(ProductOracle, Examples) {
  EXPECT_EQ(oracle_integral({{{1, 2, 1}}}), Rational(-1));
  EXPECT_EQ(oracle_integral({}), Rational(1));
  EXPECT_EQ(oracle_integral({{{0, 2, 1}}}), Rational(2));
  EXPECT_EQ(oracle_integral({{{3, 2, 1}}}), Rational(0));
  EXPECT_EQ(ProductSpec({{{1, 2, 3}, {0, 4, 2}}}).total_degree(), 14U);
}

TEST(ProductOracle, MatchesSeriesRoute) {
  oracle::Generator gen(606);
  for (int trial = 0; trial < 60; ++trial) {
    ProductSpec spec;
    for (std::size_t i = 0, count = gen.natural(0, 3); i < count; ++i) {
      const std::size_t n = gen.natural(0, 7);
      spec.factors.push_back({gen.natural(0, n), n, gen.natural(0, 2)});
    }
    ASSERT_EQ(oracle_integral(spec), series_integral(spec));
  }
}

TEST(ClosedForms, SingleFactorExamples) {
  EXPECT_EQ(closed_form::prop2(1, 2), Rational(-1));
  EXPECT_EQ(closed_form::thm3(1, 2), Rational(-1));
  EXPECT_EQ(closed_form::prop2(5, 3), Rational(0));
  EXPECT_EQ(closed_form::thm3(0, 3), Rational(2) + euler_number(3));
  EXPECT_THROW(closed_form::thm3(2, 2), std::invalid_argument);
  EXPECT_THROW(closed_form::cor4_rhs(3, 2), std::invalid_argument);
}

TEST(ClosedForms, SingleFactorMatchesOracle) {
  for (std::size_t n = 0; n <= 25; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      const Rational truth = oracle_integral(same_k(k, {n}));
      ASSERT_EQ(closed_form::prop2(k, n), truth) << k << ' ' << n;
      ASSERT_EQ(closed_form::cor4_lhs(k, n) * Rational(binom(n, k)), truth);
      if (n > k) {
        ASSERT_EQ(closed_form::thm3(k, n), truth) << k << ' ' << n;
        ASSERT_EQ(closed_form::cor4_lhs(k, n), closed_form::cor4_rhs(k, n));
      }
    }
  }
}

TEST(ClosedForms, TwoFactorsMatchOracle) {
  for (std::size_t n = 0; n <= 10; ++n) {
    for (std::size_t m = 0; m <= 10; ++m) {
      for (std::size_t k = 0; k <= std::min(n, m); ++k) {
        const Rational truth = oracle_integral(same_k(k, {n, m}));
        ASSERT_EQ(closed_form::prop6(k, n, m), truth);
        if (n + m > 2 * k) {
          ASSERT_EQ(closed_form::thm5(k, n, m), truth) << k << ' ' << n << ' ' << m;
          ASSERT_EQ(closed_form::cor7_lhs(k, n, m), closed_form::cor7_rhs(k, n, m));
        }
      }
    }
  }
  EXPECT_THROW(closed_form::thm5(2, 2, 2), std::invalid_argument);
}

TEST(ClosedForms, EvenPowerSignIsPlainAlternation) {
  // (-1)^{j+2k} == (-1)^j, so the two-factor reflected sum is sum C(2k,j)(-1)^j E_{n+m-j}.
  for (std::size_t k = 1; k <= 5; ++k) {
    for (std::size_t n = k; n <= 10; ++n) {
      const std::size_t m = n + 1;
      Rational acc;
      for (std::size_t j = 0; j <= 2 * k; ++j) {
        acc += Rational(alternating_sign(static_cast<long long>(j)) * binom(2 * k, j)) * euler_number(n + m - j);
      }
      ASSERT_EQ(closed_form::cor7_rhs(k, n, m), acc);
    }
  }
}

TEST(ClosedForms, ThreeFactorsMatchOracle) {
  for (std::size_t n = 0; n <= 6; ++n) {
    for (std::size_t m = 0; m <= 6; ++m) {
      for (std::size_t s = 0; s <= 6; ++s) {
        for (std::size_t k = 0; k <= std::min({n, m, s}); ++k) {
          const Rational truth = oracle_integral(same_k(k, {n, m, s}));
          ASSERT_EQ(closed_form::thm8_forward(k, n, m, s), truth);
          if (n + m + s > 3 * k) {
            ASSERT_EQ(closed_form::thm8(k, n, m, s), truth) << k << n << m << s;
          }
        }
      }
    }
  }
}

TEST(ClosedForms, ManyFactorsReduceToFewer) {
  for (std::size_t k = 0; k <= 3; ++k) {
    for (std::size_t n = k; n <= 8; ++n) {
      for (std::size_t m = k; m <= 8; ++m) {
        const Sizes ns{n, m};
        if (n + m > 2 * k) {
          ASSERT_EQ(closed_form::thm10(k, ns), closed_form::thm5(k, n, m));
        }
        ASSERT_EQ(closed_form::thm10_forward(k, ns), closed_form::prop6(k, n, m));
        const Sizes ones{1, 1};
        if (n + m > 2 * k) {
          ASSERT_EQ(closed_form::thm12(k, ns, ones), closed_form::thm10(k, ns));
        }
      }
    }
  }
}

TEST(ClosedForms, MultiplicitiesMatchOracle) {
  oracle::Generator gen(1212);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t s = gen.natural(1, 3), k = gen.natural(0, 3);
    Sizes ns, ms;
    for (std::size_t i = 0; i < s; ++i) {
      ns.push_back(gen.natural(k, 7));
      ms.push_back(gen.natural(1, 3));
    }
    const Rational truth = oracle_integral(same_k(k, ns, ms));
    ASSERT_EQ(closed_form::thm12_forward(k, ns, ms, Variant::corrected), truth);
    std::size_t total = 0, weight = 0;
    for (std::size_t i = 0; i < s; ++i) total += ns[i] * ms[i], weight += k * ms[i];
    if (total > weight) {
      ASSERT_EQ(closed_form::thm12(k, ns, ms), truth);
      ASSERT_EQ(closed_form::cor13_lhs(k, ns, ms, Variant::corrected), closed_form::cor13_rhs(k, ns, ms));
    }
  }
}

TEST(ClosedForms, ZeroMultiplicityDropsFactor) {
  for (std::size_t k = 0; k <= 2; ++k) {
    for (std::size_t n = k + 1; n <= 6; ++n) {
      const Sizes ns{n, 5}, ms{2, 0}, ns1{n}, ms1{2};
      ASSERT_EQ(closed_form::thm12(k, ns, ms), closed_form::thm12(k, ns1, ms1));
      ASSERT_EQ(closed_form::thm12(k, ns, ms), oracle_integral(same_k(k, ns, ms)));
      ASSERT_EQ(closed_form::thm12_forward(k, ns, ms, Variant::corrected), closed_form::thm12(k, ns1, ms1));
    }
  }
}

TEST(ClosedForms, FullDegreeMatchesOracle) {
  for (std::size_t n = 0; n <= 4; ++n) {
    Sizes ms(n + 1, 0);
    while (true) {
      const Rational truth = oracle_integral(full_degree(n, ms));
      ASSERT_EQ(closed_form::thm14_forward(n, ms), truth);
      ASSERT_EQ(closed_form::thm14_bernstein_reduction(n, ms), truth);
      std::size_t total = 0, weighted = 0;
      for (std::size_t i = 0; i <= n; ++i) total += ms[i], weighted += i * ms[i];
      if (n * total > weighted) {
        ASSERT_EQ(closed_form::thm14_reflected(n, ms, Variant::corrected), truth);
        ASSERT_EQ(closed_form::cor15_lhs(n, ms), closed_form::cor15_rhs(n, ms, Variant::corrected));
      }
      std::size_t i = 0;
      while (i <= n && ms[i] == 2) ms[i++] = 0;
      if (i > n) break;
      ++ms[i];
    }
  }
  EXPECT_THROW(closed_form::thm14_forward(2, Sizes{1, 1}), std::invalid_argument);
}

TEST(ClosedForms, SingleFullDegreeFactorIsSingleBernstein) {
  for (std::size_t n = 1; n <= 10; ++n) {
    for (std::size_t i = 0; i < n; ++i) {
      Sizes ms(n + 1, 0);
      ms[i] = 1;
      ASSERT_EQ(closed_form::thm14_reflected(n, ms, Variant::corrected), closed_form::thm3(i, n));
    }
  }
}

TEST(ClosedForms, AsPrintedFormsDisagree) {
  const Sizes ns{2}, ms{1};
  EXPECT_EQ(closed_form::thm12_forward(1, ns, ms, Variant::as_printed), Rational(-3));
  EXPECT_EQ(closed_form::thm12_forward(1, ns, ms, Variant::corrected), Rational(-1));
  // K - j runs negative once D - K > K.
  const Sizes wide{5};
  EXPECT_FALSE(closed_form::thm12_forward(1, wide, ms, Variant::as_printed).has_value());
  const Sizes full{1, 1};
  EXPECT_EQ(closed_form::thm14_reflected(1, full, Variant::as_printed), Rational(0));
  EXPECT_EQ(closed_form::thm14_reflected(1, full, Variant::corrected), Rational(-1, 2));
}

TEST(Suites, CorrectedFormsHaveNoCounterexample) {
  for (const char* check : {"T12-forward", "C13", "T14-I", "C15", "T8", "T10"}) {
    EXPECT_FALSE(find_counterexample(check, Variant::corrected, {}).has_value()) << check;
  }
}

TEST(Suites, AsPrintedCounterexamples) {
  const auto t12 = find_counterexample("T12-forward", Variant::as_printed, {});
  ASSERT_TRUE(t12);
  EXPECT_EQ(t12->params_string(), "k=1 n=[2] m=[1]");
  EXPECT_EQ(t12->lhs, Rational(-1));
  EXPECT_EQ(t12->rhs, Rational(-3));

  const auto c13 = find_counterexample("C13", Variant::as_printed, {});
  ASSERT_TRUE(c13);
  EXPECT_EQ(c13->params_string(), "k=1 n=[2] m=[1]");

  for (const char* check : {"T14-I", "C15"}) {
    const auto r = find_counterexample(check, Variant::as_printed, {});
    ASSERT_TRUE(r) << check;
    EXPECT_EQ(r->params_string(), "n=1 m=[1,1]") << check;
    EXPECT_EQ(r->lhs, Rational(Integer(-1), Integer(2)));
    EXPECT_EQ(r->rhs, Rational(0));
  }
}

TEST(Suites, AsPrintedFailuresAreExactlyTheKnownTypos) {
  Ranges small;
  small.n_max = 6;
  const auto reports = run_suites({"ALL"}, small, VariantSelection::as_printed);
  std::set<std::string> failing;
  for (const auto& r : reports) {
    if (!r.equal) failing.insert(r.check);
  }
  EXPECT_EQ(failing, known_typo_checks());
}

TEST(Suites, ResolveOrdersAndValidates) {
  EXPECT_EQ(resolve_suites({"C4", "T1", "C4"}), (std::vector<std::string>{"T1", "C4"}));
  EXPECT_EQ(resolve_suites({"ALL"}).size(), 16U);
  EXPECT_THROW(resolve_suites({"T99"}), std::invalid_argument);
  EXPECT_THROW(suite_of_check("nope"), std::invalid_argument);
}

TEST(Suites, ThreadedRunMatchesSequential) {
  Ranges small;
  small.n_max = 5;
  const auto a = run_suites({"ALL"}, small, VariantSelection::both, EulerCache::shared(), 1);
  const auto b = run_suites({"ALL"}, small, VariantSelection::both, EulerCache::shared(), 4);
  EXPECT_EQ(a, b);
}

TEST(Suites, SummaryCountsFailures) {
  Ranges small;
  small.n_max = 4;
  const auto summaries = summarize(suite_C15(small, VariantSelection::both));
  ASSERT_EQ(summaries.size(), 2U);
  EXPECT_EQ(summaries[0].variant, Variant::corrected);
  EXPECT_EQ(summaries[0].failed, 0U);
  EXPECT_GT(summaries[1].failed, 0U);
  ASSERT_TRUE(summaries[1].counterexample);
  EXPECT_EQ(summaries[1].counterexample->params_string(), "n=1 m=[1,1]");
}

TEST(Report, JsonRoundTrip) {
  Ranges small;
  small.n_max = 4;
  for (const char* id : {"C13", "T14", "EULER", "T3"}) {
    for (const auto& r : find_suite(id)(small, VariantSelection::both, EulerCache::shared())) {
      const json j = to_json(r);
      ASSERT_EQ(report_from_json(j), r) << j.dump();
      ASSERT_EQ(report_from_json(json::parse(j.dump())), r);
    }
  }
}

TEST(Report, JsonShape) {
  const auto r = make_report("C13", "C13", {Param::scalar("k", 1), Param::list("n", {5}), Param::list("m", {1})},
                             5, Variant::as_printed, std::nullopt, Rational(3));
  EXPECT_FALSE(r.equal);
  EXPECT_EQ(to_json(r).dump(),
            R"({"suite":"C13","check":"C13","params":{"k":1,"n":[5],"m":[1]},"degree":5,)"
            R"("lhs":null,"rhs":"3","equal":false,"variant":"as-printed"})");
}

}  // namespace
}  // namespace eulerbern
