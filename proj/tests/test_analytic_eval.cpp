#include "csl/analytic_eval.hpp"
#include "csl/golden.hpp"
#include "csl/series_oracle.hpp"
#include "oracle/oracle_values.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace csl;
using std::numbers::pi;

TEST(Kernel, Values) {
  EXPECT_DOUBLE_EQ(kernel_a(0.0), 1.0);
  EXPECT_NEAR(kernel_a(1.0), pi / 4, 1e-15);
  EXPECT_NEAR(kernel_a(-0.5), std::atanh(std::sqrt(0.5)) / std::sqrt(0.5), 1e-15);
  EXPECT_NEAR(kernel_a(-0.5), 1.246450480, 1e-9);
  EXPECT_THROW(kernel_a(-1.0), DomainError);
}

TEST(Kernel, ContinuousThroughZero) {
  EXPECT_LT(std::abs(kernel_a(1e-8) - kernel_a(-1e-8)), 1e-7);
  for (double t : {9.9e-5, 1.01e-4, -9.9e-5, -1.01e-4}) {
    const double s = std::sqrt(std::abs(t));
    const double direct = t > 0 ? std::atan(s) / s : std::atanh(s) / s;
    EXPECT_NEAR(kernel_a(t), direct, 1e-15);
  }
}

TEST(Kernel, DerivativeIdentity) {
  // d/dz A(z/(1-z)) = 1/(2z) - A/(2z(1-z))
  for (int k = 0; k < 20; ++k) {
    const double z = 0.05 + 0.85 * k / 19.0, h = 1e-6;
    auto a = [](double x) { return kernel_a(x / (1 - x)); };
    const double fd = (a(z + h) - a(z - h)) / (2 * h);
    const double stated = 1 / (2 * z) - a(z) / (2 * z * (1 - z));
    EXPECT_NEAR(fd, stated, 1e-6 * std::abs(stated) + 1e-9) << "z=" << z;
  }
}

TEST(GClosed, PrintedValues) {
  const auto& g = GoldenConstants::get();
  EXPECT_NEAR(g_closed(0, 0.5), 1 + pi / 2, 1e-14);
  EXPECT_NEAR(g_closed(1, -0.25), 2.0 / 25 * (1 - 16 / std::sqrt(5.0) * std::log(g.alpha)), 1e-14);
  EXPECT_NEAR(g_closed(2, 0.25), 2.0 / 3 + 8 * std::sqrt(3.0) * pi / 81, 1e-14);
  EXPECT_NEAR(g_closed(1, -0.5), std::sqrt(3.0) / 9 * std::log(2 - std::sqrt(3.0)), 1e-14);
  EXPECT_NEAR(g_closed(1, -0.75), -2.0 / 49 * (1 - 16 / std::sqrt(21.0) * std::log((5 - std::sqrt(21.0)) / 2)), 1e-14);
  EXPECT_DOUBLE_EQ(g_closed(0, 0.0), 1.0);
  EXPECT_DOUBLE_EQ(g_closed(3, 0.0), 0.0);
}

TEST(GClosed, MatchesOracleTable) {
  for (const auto& p : csl_oracle::kG)
    EXPECT_NEAR(g_closed(p.m, p.z), p.value, 4e-15 * std::max(1.0, std::abs(p.value))) << p.m << " " << p.z;
}

TEST(GClosed, DomainChecked) {
  EXPECT_THROW(g_closed(0, 1.0), DomainError);
  EXPECT_THROW(g_closed(0, -1.5), DomainError);
  EXPECT_THROW(g_closed(2, std::nan("")), DomainError);
}

TEST(GTrig, PrintedValues) {
  EXPECT_NEAR(g_trig(0, pi / 4), 1 + pi / 2, 1e-14);
  EXPECT_NEAR(g_trig(0, pi / 6), 2.0 / 3 + 4 * std::sqrt(3.0) * pi / 27, 1e-14);
  EXPECT_NEAR(g_trig(0, pi / 3), 2 + 8 * pi * std::sqrt(3.0) / 9, 1e-13);
  EXPECT_NEAR(g_trig(1, pi / 3), 10 + 32 * pi / (3 * std::sqrt(3.0)), 1e-12);
  EXPECT_DOUBLE_EQ(g_trig(0, 0.0), 1.0);
  EXPECT_THROW(g_trig(0, pi / 2), DomainError);
}

TEST(GTrig, AgreesWithClosedForm) {
  for (int variant = 0; variant <= 1; ++variant)
    for (int k = 0; k < 50; ++k) {
      const double z = 0.9 * (k + 0.5) / 50;
      const double c = g_closed(static_cast<std::size_t>(variant), z);
      EXPECT_NEAR(g_trig(variant, std::asin(std::sqrt(z))), c, 1e-12 * std::abs(c)) << variant << " " << z;
    }
}

TEST(FClosed, Values) {
  EXPECT_NEAR(f_closed(2), 5 + 1.5 * pi, 1e-13);
  EXPECT_NEAR(f_closed(3), 22 + 8 * std::sqrt(3.0) * pi, 1e-12);
  EXPECT_DOUBLE_EQ(f_closed(0), 1.0);
  for (const auto& p : csl_oracle::kF)
    if (p.x >= 0) EXPECT_NEAR(f_closed(p.x), p.value, 1e-14 * std::abs(p.value)) << p.x;
  EXPECT_THROW(f_closed(-1), DomainError);
  EXPECT_THROW(f_closed(4), DomainError);
}

TEST(Sprugnoli, Values) {
  EXPECT_NEAR(sprugnoli_closed(0.5), pi / 4, 1e-15);
  EXPECT_DOUBLE_EQ(sprugnoli_closed(0.0), 0.0);
  EXPECT_NEAR(sprugnoli_closed(0.25), pi / (6 * std::sqrt(3.0)), 1e-15);
}

TEST(Transformed, AgreesWithClosedForm) {
  EXPECT_DOUBLE_EQ(g_transformed(0, 0.0, 10), 1.0);
  EXPECT_NEAR(g_transformed(0, 0.25, 200), g_closed(0, 0.25), 1e-10);
  EXPECT_NEAR(g_transformed(1, 1.0 / 3, 400), g_closed(1, 1.0 / 3), 1e-8);
  EXPECT_THROW(g_transformed(0, 0.6, 100), DomainError);
}

TEST(Integrated, Values) {
  EXPECT_NEAR(integrated_closed(0.5), pi * pi / 8 - pi / 2 + 1, 1e-14);
  EXPECT_DOUBLE_EQ(integrated_closed(0.0), 0.5);
  for (const auto& p : csl_oracle::kIntegrated) EXPECT_NEAR(integrated_closed(p.x), p.value, 1e-14) << p.x;
  // Both sides of the small-z switch.
  for (double z : {-1.01e-3, -0.99e-3, 0.99e-3, 1.01e-3})
    EXPECT_NEAR(integrated_closed(z), sum_integrated(z, 1e-15).value, 1e-12) << z;
}

TEST(SpecialValues, ExactFormsAtSpecialPoints) {
  const double s3 = std::sqrt(3.0);
  struct Row {
    std::size_t m;
    SpecialPoint p;
    double expected;
  };
  const Row rows[] = {
      {0, SpecialPoint::Quarter, 2.0 / 3 + 4 * pi * s3 / 27}, {0, SpecialPoint::Half, 1 + pi / 2},
      {0, SpecialPoint::ThreeQuarters, 2 + 8 * pi * s3 / 9},  {1, SpecialPoint::Quarter, 2.0 / 3},
      {1, SpecialPoint::Half, 2 + pi / 2},                    {1, SpecialPoint::ThreeQuarters, 10 + 32 * pi / (3 * s3)},
      {2, SpecialPoint::Quarter, 2.0 / 3 + 8 * s3 * pi / 81}, {2, SpecialPoint::Half, 6 + 2 * pi},
      {2, SpecialPoint::ThreeQuarters, 82 + 272 * s3 * pi / 9},
  };
  for (const auto& r : rows) {
    const ClosedValue v = g_special_value(r.m, r.p);
    EXPECT_NEAR(v.value(), r.expected, 1e-12 * std::max(1.0, r.expected));
    EXPECT_NEAR(v.value(), g_closed(r.m, to_double(special_point_value(r.p))), 1e-12 * std::max(1.0, r.expected));
  }
  // g_1(1/4) = 2/3 exactly: the constant's coefficient vanishes.
  EXPECT_EQ(g_special_value(1, SpecialPoint::Quarter), ClosedValue::rational(make_rational(2, 3)));
  ClosedValue six_two_pi = ClosedValue::rational(6);
  six_two_pi.add(2, NamedConstant::pi());
  EXPECT_EQ(g_special_value(2, SpecialPoint::Half), six_two_pi);
}

TEST(SpecialValues, CorollaryShapeAtHalf) {
  for (std::size_t m = 0; m <= 10; ++m)
    for (const auto& t : g_special_value(m, SpecialPoint::Half).terms())
      EXPECT_TRUE(t.constant.key() == "1" || t.constant.key() == "pi") << m << " " << t.constant.key();
}

TEST(ClosedValueBasics, MergesAndCancels) {
  ClosedValue a;
  a.add(make_rational(1, 2), NamedConstant::pi());
  a.add(make_rational(1, 2), NamedConstant::pi());
  a.add(3, NamedConstant::one());
  EXPECT_EQ(a.terms().size(), 2u);
  EXPECT_EQ(a.coefficient("pi"), 1);
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_NEAR(a.value(), 3 + pi, 1e-15);
  const auto& g = GoldenConstants::get();
  EXPECT_NEAR(g.omega * g.omega, g.sqrt5 * g.alpha, 1e-14);
  EXPECT_NEAR(g.omega * g.omega, 2 + g.alpha, 1e-14);
  EXPECT_NEAR(g.alpha * g.beta, -1, 1e-15);
  EXPECT_NEAR(g.alpha + g.beta, 1, 1e-15);
}
