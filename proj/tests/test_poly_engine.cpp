#include "csl/analytic_eval.hpp"
#include "csl/poly_engine.hpp"

#include <gtest/gtest.h>

using namespace csl;

namespace {

RationalPolynomial poly(std::initializer_list<std::pair<long long, long long>> cs) {
  std::vector<BigRational> v;
  for (auto [n, d] : cs) v.push_back(make_rational(n, d));
  return RationalPolynomial(v);
}

}  // namespace

TEST(PolyEngine, BaseCase) {
  const auto p = p_pair_recursive(0);
  EXPECT_EQ(p.p1, RationalPolynomial::constant(make_rational(1, 2)));
  EXPECT_EQ(p.p2, RationalPolynomial::constant(make_rational(1, 2)));
  EXPECT_EQ(p_pair_closed(0).p1, p.p1);
  EXPECT_EQ(p_pair_closed(0).p2, p.p2);
}

TEST(PolyEngine, PrintedLowOrders) {
  // (2z+1)/4, (4z-1)/4
  EXPECT_EQ(p_pair_recursive(1).p1, poly({{1, 4}, {1, 2}}));
  EXPECT_EQ(p_pair_recursive(1).p2, poly({{-1, 4}, {1, 1}}));
  // (4z^2+12z-1)/8, (16z^2-2z+1)/8
  EXPECT_EQ(p_pair_recursive(2).p1, poly({{-1, 8}, {3, 2}, {1, 2}}));
  EXPECT_EQ(p_pair_recursive(2).p2, poly({{1, 8}, {-1, 4}, {2, 1}}));
  EXPECT_EQ(p_pair_closed(1).p1, p_pair_recursive(1).p1);
  EXPECT_EQ(p_pair_closed(2).p2, p_pair_recursive(2).p2);
}

TEST(PolyEngine, ClosedMatchesRecursiveThroughTen) {
  for (std::size_t m = 0; m <= 10; ++m) {
    const auto a = p_pair_recursive(m), b = p_pair_closed(m);
    ASSERT_EQ(a.p1, b.p1) << "m=" << m;
    ASSERT_EQ(a.p2, b.p2) << "m=" << m;
  }
}

TEST(PolyEngine, DegreesAndLeadingCoefficients) {
  for (std::size_t m = 1; m <= 10; ++m) {
    const auto p = p_pair_recursive(m);
    EXPECT_EQ(p.p1.degree(), static_cast<int>(m));
    EXPECT_EQ(p.p2.degree(), static_cast<int>(m));
    EXPECT_EQ(p.p1.leading(), make_rational(1, 2)) << "m=" << m;
    BigRational two_pow = 1;
    for (std::size_t i = 1; i < m; ++i) two_pow *= 2;
    EXPECT_EQ(p.p2.leading(), two_pow) << "m=" << m;
  }
}

TEST(PolyEngine, KernelLowOrders) {
  EXPECT_EQ(q_kernel(0).q, RationalPolynomial::constant(make_rational(1, 2)));
  EXPECT_EQ(q_kernel(1).q, poly({{0, 1}, {1, 1}}));
  EXPECT_EQ(q_kernel(2).q, poly({{0, 1}, {1, 1}, {2, 1}}));
  EXPECT_EQ(q_kernel(3).q, poly({{0, 1}, {1, 1}, {7, 1}, {4, 1}}));
}

TEST(PolyEngine, KernelStructure) {
  for (std::size_t m = 1; m <= 10; ++m) {
    const auto q = q_kernel(m).q;
    EXPECT_EQ(q.degree(), static_cast<int>(m));
    EXPECT_EQ(q.coefficient(0), 0);
    BigRational two_pow = 1;
    for (std::size_t i = 1; i < m; ++i) two_pow *= 2;
    EXPECT_EQ(q.leading(), two_pow) << "m=" << m;
    EXPECT_EQ(q, q_kernel_closed(m).q) << "m=" << m;
  }
}

TEST(PolyEngine, EvaluationAndDerivative) {
  EXPECT_EQ(poly_eval(p_pair_recursive(1).p1, 0), make_rational(1, 4));
  EXPECT_EQ(poly_eval(p_pair_recursive(2).p2, make_rational(1, 2)), make_rational(1, 2));
  EXPECT_EQ(poly_eval(RationalPolynomial(), make_rational(7, 3)), 0);
  EXPECT_DOUBLE_EQ(poly_eval_f(RationalPolynomial(), 0.3), 0.0);
  EXPECT_TRUE(poly_derivative(RationalPolynomial::constant(make_rational(1, 2))).is_zero());
  EXPECT_EQ(poly_derivative(p_pair_recursive(1).p1), RationalPolynomial::constant(make_rational(1, 2)));
  EXPECT_EQ(poly_derivative(p_pair_recursive(2).p1), poly({{3, 2}, {1, 1}}));
}

TEST(PolyEngine, FloatAssemblyMatchesExactAssembly) {
  // Compare g_closed against the P-parts assembled in exact rationals (A in double).
  for (std::size_t m = 0; m <= 6; ++m)
    for (int k = -9; k <= 10; ++k) {
      const BigRational z = make_rational(2 * k - 1, 22);
      const auto p = p_pair_recursive(m);
      BigRational w = 1 - z, s1 = 1;
      for (std::size_t i = 0; i <= m; ++i) s1 *= w;
      const double part1 = to_double(p.p1(z) / s1);
      const double part2 = to_double(p.p2(z) / (s1 * w));
      const double zd = to_double(z);
      const double exact = part1 + part2 * kernel_a(zd / (1 - zd));
      const double got = g_closed(m, zd);
      ASSERT_NEAR(got, exact, 1e-13 * (std::abs(part1) + std::abs(part2) * 2)) << "m=" << m << " z=" << zd;
    }
}
