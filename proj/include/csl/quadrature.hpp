#pragma once

// Gauss-Legendre rules and the finite-interval integral representations.

#include "csl/analytic_eval.hpp"
#include "csl/errors.hpp"
#include "csl/exact_core.hpp"
#include "csl/poly_engine.hpp"

#include <cmath>
#include <cstddef>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

namespace csl {

struct QuadratureRule {
  std::vector<double> nodes;    // ascending, symmetric about 0
  std::vector<double> weights;
  int order = 0;
};

struct IntegralResult {
  double value = 0.0;
  double estimated_error = 0.0;
  std::size_t nodes_used = 0;
};

inline constexpr int kMinQuadOrder = 2;
inline constexpr int kMaxQuadOrder = 512;

namespace detail {

inline QuadratureRule build_gauss_legendre(int n) {
  QuadratureRule rule;
  rule.order = n;
  rule.nodes.assign(n, 0.0);
  rule.weights.assign(n, 0.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // One more derivative at the converged node.
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

}  // namespace detail

/// Cached n-point rule on [-1, 1], 2 <= n <= 512.
inline const QuadratureRule& gauss_legendre(int order) {
  if (order < kMinQuadOrder || order > kMaxQuadOrder)
    throw DomainError("gauss_legendre: order must lie in [2, 512], got " + std::to_string(order));
  static std::mutex mu;
  static std::map<int, std::unique_ptr<QuadratureRule>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[order];
  if (!slot) slot = std::make_unique<QuadratureRule>(detail::build_gauss_legendre(order));
  return *slot;
}

/// Apply a rule on [a, b]. abs_sum (optional) receives sum |w f| for rounding bounds.
template <class F>
double apply_rule(const QuadratureRule& rule, F&& f, double a, double b, double* abs_sum = nullptr) {
  const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
  double acc = 0.0, mag = 0.0;
  for (int i = 0; i < rule.order; ++i) {
    const double v = rule.weights[i] * f(mid + half * rule.nodes[i]);
    acc += v;
    mag += std::abs(v);
  }
  if (abs_sum) *abs_sum = mag * std::abs(half);
  return acc * half;
}

/// Order doubling from `order` until successive values agree to ~1e-14
/// relative or the cap is hit. Throws NotConverged if the final estimate
/// exceeds fail_tol * max(1, |I|).
template <class F>
IntegralResult integrate_doubling(F&& f, double a, double b, int order, double fail_tol = 1e-9,
                                  const char* what = "integrate") {
  if (order < kMinQuadOrder || order > kMaxQuadOrder)
    throw DomainError(std::string(what) + ": order must lie in [2, 512], got " + std::to_string(order));
  IntegralResult res;
  double mag = 0.0;
  int n = order;
  double prev = apply_rule(gauss_legendre(n), f, a, b, &mag);
  res.nodes_used = static_cast<std::size_t>(n);
  for (;;) {
    const int next = std::min(2 * n, kMaxQuadOrder);
    const double cur = apply_rule(gauss_legendre(next), f, a, b, &mag);
    res.nodes_used += static_cast<std::size_t>(next);
    const double rounding = 8.0 * std::numeric_limits<double>::epsilon() * mag;
    res.value = cur;
    res.estimated_error = std::max(std::abs(cur - prev), rounding);
    const double scale = std::max(1.0, std::abs(cur));
    if (res.estimated_error <= 1e-14 * scale || next == kMaxQuadOrder) break;
    prev = cur;
    n = next;
  }
  if (!(res.estimated_error <= fail_tol * std::max(1.0, std::abs(res.value))))
    throw NotConverged(std::string(what) + ": error estimate " + detail::fmt_double(res.estimated_error, 3) +
                       " exceeds budget at order 512");
  return res;
}

/// int_{-1}^{1} (1 - x^2)^n dx two ways: the closed ratio and the binomial sum.
inline std::pair<BigRational, BigRational> lemma_int_exact(std::size_t n) {
  if (n > 50) throw DomainError("lemma_int_exact: n must be at most 50");
  BigInt pow2 = 1;
  pow2 <<= static_cast<unsigned>(2 * n + 1);
  BigRational closed(pow2, BigInt(2 * n + 1) * binomial(2 * n, static_cast<std::int64_t>(n)));
  BigRational sum = 0;
  for (std::size_t k = 0; k <= n; ++k) {
    BigRational term(binomial(n, static_cast<std::int64_t>(k)), BigInt(2 * k + 1));
    sum += (k % 2 == 0) ? term : BigRational(-term);
  }
  return {closed, 2 * sum};
}

/// g_m(z) = int_{-1}^{1} Q_m(u) / (1 - u)^{m+2} dx with u = z(1 - x^2).
inline IntegralResult g_integral(std::size_t m, double z, int order = 64) {
  detail::require_unit_disc(z, "g_integral");
  const std::vector<double> q = q_kernel(m).q.to_doubles();
  const double power = static_cast<double>(m + 2);
  auto integrand = [&](double x) {
    const double u = z * (1.0 - x) * (1.0 + x);
    return poly_eval_f(q, u) / std::pow(1.0 - u, power);
  };
  return integrate_doubling(integrand, -1.0, 1.0, order, 1e-9, "g_integral");
}

/// f(z) = 1 + 2z int_0^1 (1 - x) / (1 - z x (1 - x))^3 dx for -4 < z < 4.
inline IntegralResult f_integral(double z, int order = 64) {
  if (!(z > -4.0 && z < 4.0))
    throw DomainError("f_integral: requires -4 < z < 4, got z = " + detail::fmt_double(z, 12));
  auto integrand = [&](double x) {
    const double d = 1.0 - z * x * (1.0 - x);
    return (1.0 - x) / (d * d * d);
  };
  IntegralResult r = integrate_doubling(integrand, 0.0, 1.0, order, 1e-9, "f_integral");
  r.value = 1.0 + 2.0 * z * r.value;
  r.estimated_error *= 2.0 * std::abs(z);
  return r;
}

}  // namespace csl
