#include <gtest/gtest.h>

#include <thread>
#include <vector>

#include "eulerbern/euler.hpp"
#include "oracles.hpp"

namespace eulerbern {
namespace {

Rational q(long num, long den) { return Rational(Integer(num), Integer(den)); }

TEST(EulerNumber, SmallValues) {
  EXPECT_EQ(euler_number(0), Rational(1));
  EXPECT_EQ(euler_number(1), q(-1, 2));
  EXPECT_EQ(euler_number(2), Rational(0));
  EXPECT_EQ(euler_number(3), q(1, 4));
  // E_n = -2 (2^{n+1} - 1) B_{n+1} / (n+1) with B_8 = -1/30, B_10 = 5/66.
  EXPECT_EQ(euler_number(7), q(17, 8));
  EXPECT_EQ(euler_number(9), q(-31, 2));
}

TEST(EulerNumber, AgreesWithSeriesOracleUpTo200) {
  EulerCache cache;
  const auto expected = oracle::euler_numbers_by_series(200);
  for (std::size_t n = 0; n <= 200; ++n) ASSERT_EQ(cache.number(n), expected[n]) << n;
}

TEST(EulerNumber, EvenIndicesVanish) {
  for (std::size_t n = 2; n <= 100; n += 2) ASSERT_TRUE(euler_number(n).is_zero()) << n;
}

TEST(EulerNumber, DenominatorIsPowerOfTwo) {
  for (std::size_t n = 0; n <= 200; ++n) {
    const Integer den = euler_number(n).den();
    ASSERT_EQ(mpz_popcount(den.get_mpz_t()), 1UL) << n;
  }
}

TEST(EulerCache, GeneratingFunctionInvariant) {
  EulerCache cache;
  cache.reserve(80);
  EXPECT_GE(cache.size(), 81U);
  for (std::size_t n = 1; n <= 80; ++n) {
    Rational acc = cache.number(n);
    for (std::size_t l = 0; l <= n; ++l) acc += Rational(binom(n, l)) * cache.number(l);
    ASSERT_TRUE(acc.is_zero()) << n;
  }
}

TEST(EulerCache, ConcurrentReadersSeeIdenticalValues) {
  EulerCache cache;
  const auto expected = oracle::euler_numbers_by_series(120);
  std::vector<std::thread> workers;
  std::vector<int> mismatches(4, 0);
  for (int t = 0; t < 4; ++t) {
    workers.emplace_back([&, t] {
      for (std::size_t n = (t % 2 ? 120 : 0); n <= 120; n = (t % 2 ? n - 1 : n + 1)) {
        if (cache.number(n) != expected[n]) ++mismatches[t];
        if (t % 2 && n == 0) break;
      }
    });
  }
  for (auto& w : workers) w.join();
  for (int m : mismatches) EXPECT_EQ(m, 0);
}

TEST(EulerPoly, Examples) {
  EXPECT_EQ(euler_poly(0), Poly({1}));
  EXPECT_EQ(euler_poly(1), Poly({q(-1, 2), 1}));
  for (std::size_t n = 0; n <= 30; ++n) {
    const Poly e = euler_poly(n);
    ASSERT_EQ(e.degree(), static_cast<long>(n));
    ASSERT_EQ(e.leading(), Rational(1));
    ASSERT_EQ(e.eval(0), euler_number(n));
  }
}

TEST(EulerPoly, GeneratingFunctionShift) {
  // e^{xt} * 2/(e^t+1): E_n(x+1) + E_n(x) = 2 x^n.
  for (std::size_t n = 0; n <= 25; ++n) {
    const Poly e = euler_poly(n);
    ASSERT_EQ(e.shifted(1) + e, Poly::monomial(n, 2)) << n;
  }
}

TEST(EulerPoly, ReflectionUpTo60) {
  for (std::size_t n = 0; n <= 60; ++n) ASSERT_TRUE(euler_reflect_check(n)) << n;
}

TEST(EulerAtTwo, Examples) {
  EXPECT_EQ(euler_at_two(1), q(3, 2));
  EXPECT_EQ(euler_at_two(3), q(9, 4));
  EXPECT_THROW(euler_at_two(0), std::invalid_argument);
  for (std::size_t n = 1; n <= 40; ++n) EXPECT_NO_THROW(euler_at_two(n));
}

}  // namespace
}  // namespace eulerbern
