#include "csl/fibonacci_closed.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace csl;
using std::numbers::pi;

namespace {
const double kAlpha = (1 + std::sqrt(5.0)) / 2;
const double kOmega = std::sqrt(2 + kAlpha);
}  // namespace

TEST(GoldenRational, FieldIdentities) {
  const auto a = GoldenRational::alpha(), b = GoldenRational::beta();
  EXPECT_EQ(a * b, GoldenRational(-1));
  EXPECT_EQ(a + b, GoldenRational(1));
  EXPECT_EQ(GoldenRational::sqrt5() * GoldenRational::sqrt5(), GoldenRational(5));
  EXPECT_EQ(GoldenRational::sqrt5() * GoldenRational::inv_sqrt5(), GoldenRational(1));
  EXPECT_EQ(a * a, a + GoldenRational(1));
}

TEST(Theorem1, PrintedExamples) {
  EXPECT_NEAR(thm1_rhs(FibKind::F, 0).value(), 0.4 + 4 * (7 * kAlpha - 6) * pi * kOmega / 125, 1e-14);
  EXPECT_NEAR(thm1_rhs(FibKind::F, 0).value(), 1.41849, 1e-5);
  EXPECT_NEAR(thm1_rhs(FibKind::L, 1).value(), 2 + 8 * std::sqrt(5.0) * pi * kOmega / 25, 1e-13);
  EXPECT_NEAR(thm1_examples()[3].value.value(), 1 + 8 * std::sqrt(5.0) * pi * kOmega / 25, 1e-13);
  EXPECT_NEAR(thm1_examples()[5].value.value(), -1 + 8 * (3 - kAlpha) * pi * kOmega / 25, 1e-13);
}

TEST(Theorem1, ExampleTableIsTheoremMinusFirstTerm) {
  const int shifts[] = {0, 0, 1, 1, -2, -2};
  const auto ex = thm1_examples();
  for (std::size_t i = 0; i < ex.size(); ++i) {
    const FibKind k = i % 2 == 0 ? FibKind::F : FibKind::L;
    const BigInt x0 = k == FibKind::F ? fibonacci(shifts[i]) : lucas(shifts[i]);
    EXPECT_EQ(thm1_rhs(k, shifts[i]) - ClosedValue::rational(BigRational(x0)), ex[i].value) << ex[i].label;
  }
}

TEST(Theorem1, LinearInShift) {
  for (FibKind k : {FibKind::F, FibKind::L})
    for (int s = -6; s <= 6; ++s) {
      EXPECT_TRUE((thm1_rhs(k, s + 2) - thm1_rhs(k, s + 1) - thm1_rhs(k, s)).is_zero());
      EXPECT_TRUE((thm2_rhs(k, s + 2) - thm2_rhs(k, s + 1) - thm2_rhs(k, s)).is_zero());
    }
}

TEST(Theorem1, MatchesSeries) {
  for (FibKind k : {FibKind::F, FibKind::L})
    for (int s = -5; s <= 5; ++s)
      EXPECT_NEAR(sum_weighted(thm1_series(k, s), 1e-11).value, thm1_rhs(k, s).value(), 1e-10) << s;
}

TEST(Theorem2, PrintedSubstitutions) {
  EXPECT_NEAR(thm2_rhs(FibKind::F, 0).value(), 2 + 8 * kAlpha * pi * kOmega / 25, 1e-13);
  EXPECT_NEAR(thm2_rhs(FibKind::F, 0).value(), 5.0940, 1e-4);
  EXPECT_NEAR(thm2_rhs(FibKind::L, 0).value(), 2 + 16.0 / 5 + 8 * std::sqrt(5.0) * pi * kOmega / 125 * (6 + kAlpha),
              1e-13);
}

TEST(Theorem2, MatchesSeries) {
  for (FibKind k : {FibKind::F, FibKind::L})
    for (int s = -5; s <= 5; ++s)
      EXPECT_NEAR(sum_weighted(thm2_series(k, s), 1e-11).value, thm2_rhs(k, s).value(), 1e-10) << s;
}

TEST(Theorem3, MatchesSeries) {
  for (FibKind k : {FibKind::F, FibKind::L})
    for (int r : {0, 2, 4})
      for (int s = -3; s <= 3; ++s)
        EXPECT_NEAR(sum_weighted(thm3_series(k, r, s), 1e-9).value, thm3_rhs(k, r, s).value(), 1e-8)
            << r << " " << s;
}

TEST(Theorem3, OddStepRejected) {
  EXPECT_THROW(thm3_rhs(FibKind::F, 3, 0), DomainError);
  EXPECT_THROW(thm3_instances(1), DomainError);
}

TEST(Theorem3, ArctanBetaZeroFoldsIntoPi) {
  for (int s = -3; s <= 3; ++s)
    for (const auto& t : thm3_rhs(FibKind::L, 0, s).terms()) EXPECT_EQ(t.constant.key().find("atan"), std::string::npos);
}

TEST(Instances, LucasShiftAtRZeroIsFourPlusPi) {
  const auto inst = thm3_instances(0);
  ClosedValue expected = ClosedValue::rational(4);
  expected.add(1, NamedConstant::pi());
  EXPECT_EQ(inst[1].value, expected);
  // Equal to twice the n-weighted 2^n sum, 2(2 + pi/2).
  EXPECT_NEAR(inst[1].value.value(), 2 * (2 + pi / 2), 1e-14);
}

TEST(Instances, MatchGeneralTheoremAndSeries) {
  for (int r : {0, 2, 4}) {
    const auto inst = thm3_instances(r);
    EXPECT_EQ(inst[0].value, thm3_rhs(FibKind::F, r, -2 * r) * 2);
    EXPECT_EQ(inst[1].value, thm3_rhs(FibKind::L, r, -2 * r));
    EXPECT_EQ(inst[2].value, thm3_rhs(FibKind::F, r, -3 * r));
    EXPECT_EQ(inst[3].value, thm3_rhs(FibKind::L, r, -3 * r));
    for (const auto& i : inst) {
      const double lhs = to_double(i.lhs_scale) * sum_weighted(i.lhs, 1e-10).value;
      EXPECT_NEAR(lhs, i.value.value(), 1e-9 * std::max(1.0, std::abs(lhs))) << i.label;
    }
  }
  // r = 2, first instance by hand: F_4 + (L_2 + 2 F_2 sqrt5) pi L_2^2/(4 sqrt5) - L_2^3/sqrt5 arctan(beta^2)
  const double s5 = std::sqrt(5.0), b2 = (3 - s5) / 2;
  EXPECT_NEAR(thm3_instances(2)[0].value.value(), 3 + (3 + 2 * s5) * pi * 9 / (4 * s5) - 27 / s5 * std::atan(b2), 1e-12);
}

TEST(CatalanFibonacci, PrintedValues) {
  const auto v = catalan_fib_values();
  for (const auto& i : v) EXPECT_NEAR(sum_weighted(i.lhs, 1e-13).value, i.value.value(), 1e-11) << i.label;
}
