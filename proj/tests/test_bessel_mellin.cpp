#include "csl/analytic_eval.hpp"
#include "csl/bessel_mellin.hpp"
#include "csl/series_oracle.hpp"
#include "oracle/oracle_values.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace csl;

TEST(BesselK, MatchesMpmathTable) {
  for (const auto& p : csl_oracle::kBesselK)
    EXPECT_NEAR(bessel_k(p.v, p.x), p.value, 1e-12 * p.value) << p.v << " " << p.x;
  EXPECT_NEAR(bessel_k(0, 2.0), 0.11389387, 1e-8);
  EXPECT_NEAR(bessel_k(1, 2.0), 0.13986588, 1e-8);
}

TEST(BesselK, EvenInOrder) {
  for (int v = 0; v <= 8; ++v)
    for (double x : {0.05, 0.7, 3.0, 40.0}) EXPECT_EQ(bessel_k(-v, x), bessel_k(v, x));
}

TEST(BesselK, RecurrenceOnValidatedBox) {
  for (int v = 1; v <= 5; ++v)
    for (double x : {0.5, 1.0, 2.0, 5.0, 10.0}) {
      const double lhs = bessel_k(v + 1, x);
      EXPECT_LE(std::abs(lhs - bessel_k(v - 1, x) - 2.0 * v / x * bessel_k(v, x)), 1e-7 * lhs) << v << " " << x;
    }
}

TEST(BesselK, DomainAndBox) {
  EXPECT_THROW(bessel_k(0, 0.0), DomainError);
  EXPECT_THROW(bessel_k(0, -1.0), DomainError);
  EXPECT_TRUE(bessel_k_validated(8, 0.05));
  EXPECT_FALSE(bessel_k_validated(9, 1.0));
  EXPECT_FALSE(bessel_k_validated(0, 60.0));
}

TEST(MellinKernel, Values) {
  EXPECT_NEAR(mellin_kernel_F(0, 1.0), 2 * bessel_k(1, 2.0), 1e-15);
  EXPECT_NEAR(mellin_kernel_F(0, 1.0), 0.27973, 1e-5);
  EXPECT_NEAR(mellin_kernel_F(1, 1.0), csl_oracle::kMellinKernelM1AtOne, 1e-12);
  EXPECT_THROW(mellin_kernel_F(0, 0.0), DomainError);
}

TEST(MellinKernel, FirstOrderChangesSign) {
  // sqrt(x) K0(2 sqrt x) - K1(2 sqrt x): negative near 0, positive for large x.
  double lo = 1e-3, hi = 20.0;
  ASSERT_LT(mellin_kernel_F(1, lo), 0);
  ASSERT_GT(mellin_kernel_F(1, hi), 0);
  for (int i = 0; i < 60; ++i) {
    const double mid = 0.5 * (lo + hi);
    (mellin_kernel_F(1, mid) < 0 ? lo : hi) = mid;
  }
  const double r = std::sqrt(lo);
  EXPECT_NEAR(r * bessel_k(0, 2 * r), bessel_k(1, 2 * r), 1e-10);
}

TEST(GMellin, AgreesWithClosedForm) {
  for (std::size_t m = 0; m <= 2; ++m)
    for (double z : {0.1, 0.25, 0.5, 0.75}) {
      const double c = g_closed(m, z);
      EXPECT_NEAR(g_mellin(m, z).value, c, 1e-5 * std::abs(c)) << m << " " << z;
    }
  EXPECT_NEAR(g_mellin(0, 0.5).value, 1 + std::numbers::pi / 2, 1e-5 * 2.6);
}

TEST(GMellin, TinyArgument) {
  const double s = sum_g(0, 1e-4, 1e-15).value;
  EXPECT_NEAR(g_mellin(0, 1e-4).value, s, 1e-9);
}

TEST(GMellin, DomainRefused) {
  EXPECT_THROW(g_mellin(0, 0.0), DomainError);
  EXPECT_THROW(g_mellin(0, 0.95), DomainError);
  EXPECT_THROW(g_mellin(0, -0.2), DomainError);
}

TEST(GMellin, CoarseCutoffIsReported) {
  ImproperIntegralConfig cfg;
  cfg.upper_cutoff = 3.0;
  // Truncating at U = 3 loses a visible part of the integral; the
  // order-halving estimate cannot see it, so compare against the closed form.
  EXPECT_GT(std::abs(g_mellin(0, 0.5, cfg).value - g_closed(0, 0.5)), 1e-4);
}
