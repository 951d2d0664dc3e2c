#include "csl/exact_core.hpp"

#include <gtest/gtest.h>

#include <random>
#include <thread>
#include <vector>

using namespace csl;

TEST(ExactCore, CatalanTimesNPlusOneIsCentralBinomial) {
  for (std::size_t n = 0; n <= 200; ++n)
    ASSERT_EQ(catalan(n) * (n + 1), binomial(2 * n, static_cast<std::int64_t>(n))) << "n=" << n;
  EXPECT_EQ(catalan(0), 1);
  EXPECT_EQ(catalan(3), 5);
  EXPECT_EQ(catalan(10), 16796);
}

TEST(ExactCore, BinomialOutsideRangeIsZero) {
  EXPECT_EQ(binomial(5, -1), 0);
  EXPECT_EQ(binomial(5, 6), 0);
  EXPECT_EQ(binomial(5, 2), 10);
}

TEST(ExactCore, FibonacciAndLucasValues) {
  EXPECT_EQ(fibonacci(10), 55);
  EXPECT_EQ(fibonacci(0), 0);
  EXPECT_EQ(fibonacci(-3), 2);
  EXPECT_EQ(fibonacci(-4), -3);
  EXPECT_EQ(lucas(0), 2);
  EXPECT_EQ(lucas(6), 18);
  EXPECT_EQ(lucas(-2), 3);
  EXPECT_EQ(lucas(-3), -4);
}

TEST(ExactCore, LucasFromNeighbouringFibonacci) {
  for (std::int64_t n = -50; n <= 50; ++n) ASSERT_EQ(lucas(n), fibonacci(n - 1) + fibonacci(n + 1)) << "n=" << n;
}

TEST(ExactCore, StirlingSecondKindValues) {
  EXPECT_EQ(stirling2(3, 3), 1);
  EXPECT_EQ(stirling2(4, 1), 1);
  EXPECT_EQ(stirling2(4, 2), 7);
  EXPECT_EQ(stirling2(0, 0), 1);
  EXPECT_EQ(stirling2(5, 0), 0);
  EXPECT_EQ(stirling2(3, 4), 0);
}

TEST(ExactCore, StirlingTriangleMatchesExplicitSum) {
  for (std::size_t n = 0; n <= 30; ++n)
    for (std::size_t k = 0; k <= n; ++k) {
      // S(n,k) = (1/k!) sum_i (-1)^i C(k,i) (k-i)^n
      BigInt acc = 0;
      for (std::size_t i = 0; i <= k; ++i) {
        BigInt t = binomial(k, static_cast<std::int64_t>(i)) *
                   boost::multiprecision::pow(BigInt(k - i), static_cast<unsigned>(n));
        acc += (i % 2 == 0) ? t : BigInt(-t);
      }
      ASSERT_EQ(acc / factorial(k), stirling2(n, k)) << n << "," << k;
    }
}

TEST(ExactCore, MellinLemmaHoldsOnGrid) {
  EXPECT_TRUE(mellin_lemma_check(0, 5));
  EXPECT_TRUE(mellin_lemma_check(1, 4));
  EXPECT_TRUE(mellin_lemma_check(6, 9));
  for (std::size_t m = 0; m <= 10; ++m)
    for (std::size_t n = 0; n <= 20; ++n) ASSERT_TRUE(mellin_lemma_check(m, n)) << m << "," << n;
}

TEST(ExactCore, RationalArithmeticIsExact) {
  std::mt19937_64 rng(20240917);
  std::uniform_int_distribution<long long> num(-1000000, 1000000), den(1, 1000000);
  for (int i = 0; i < 500; ++i) {
    const BigRational a = make_rational(num(rng), den(rng));
    const BigRational c = make_rational(num(rng), den(rng));
    ASSERT_EQ((a + c) - c, a);
    ASSERT_EQ((a * c) / (c == 0 ? BigRational(1) : c), c == 0 ? BigRational(0) : a);
  }
  EXPECT_EQ(to_string(make_rational(6, -4)), "-3/2");
}

TEST(ExactCore, ConcurrentTableAccessAgrees) {
  std::vector<std::thread> pool;
  std::vector<BigInt> got(8);
  for (int t = 0; t < 8; ++t) pool.emplace_back([&, t] { got[t] = catalan(300 + t) - catalan(300 + t); });
  for (auto& th : pool) th.join();
  for (const auto& g : got) EXPECT_EQ(g, 0);
}
