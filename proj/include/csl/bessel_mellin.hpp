#pragma once

// K_v from its cosh integral and the Bessel-kernel representation of g_m.
// Both improper integrals are truncated and done with composite
// Gauss-Legendre panels; the outer one uses x = u^2.

#include "csl/analytic_eval.hpp"
#include "csl/errors.hpp"
#include "csl/exact_core.hpp"
#include "csl/quadrature.hpp"

#include <cmath>
#include <cstddef>
#include <cstdlib>
#include <string>
#include <vector>

namespace csl {

struct ImproperIntegralConfig {
  double upper_cutoff = 0.0;  // outer u-range; 0 picks one from the decay rate
  double inner_cutoff = 0.0;  // cosh-integral t-range; 0 picks one per (v, x)
  int order = 20;
  int segments = 64;        // outer uniform panels
  int inner_segments = 16;

  void validate() const {
    if (upper_cutoff < 0 || inner_cutoff < 0)
      throw std::invalid_argument("ImproperIntegralConfig: cutoffs must be non-negative");
    if (order < 4 || order > kMaxQuadOrder || segments < 1 || inner_segments < 1)
      throw std::invalid_argument("ImproperIntegralConfig: need 4 <= order <= 512 and positive segment counts");
  }
};

namespace detail {

// log of cosh(v t) exp(-x (cosh t - 1)) up to the log(1 + e^{-2vt})/2 factor.
inline double cosh_log_integrand(int v, double x, double t) {
  const double s = std::sinh(0.5 * t);
  return std::abs(v) * t - 2.0 * x * s * s;
}

// e^x K_v(x): scaled so large x stays representable.
inline double bessel_k_scaled(int v, double x, const ImproperIntegralConfig& cfg) {
  const int av = std::abs(v);
  const double t_peak = av == 0 ? 0.0 : std::asinh(av / x);
  const double phi_peak = cosh_log_integrand(av, x, t_peak);
  double upper = cfg.inner_cutoff;
  if (upper <= 0) {
    double step = 1.0 / std::sqrt(std::sqrt(double(av) * av + x * x) + 1.0);
    upper = t_peak + step;
    while (cosh_log_integrand(av, x, upper) > phi_peak - 50.0) {
      step *= 1.5;
      upper = t_peak + step;
    }
  }
  const QuadratureRule& rule = gauss_legendre(cfg.order);
  auto f = [&](double t) {
    return std::exp(cosh_log_integrand(av, x, t) - phi_peak) * 0.5 * (1.0 + std::exp(-2.0 * av * t));
  };
  const double width = upper / cfg.inner_segments;
  double acc = 0.0;
  for (int k = 0; k < cfg.inner_segments; ++k) acc += apply_rule(rule, f, k * width, (k + 1) * width);
  return acc * std::exp(phi_peak);
}

// e^{-2u} sinh(2u sz) / sz, without overflow for large u.
inline double damped_sinh_ratio(double u, double sz) {
  const double y = 2.0 * u * sz;
  if (y < 1e-3) return std::exp(-2.0 * u) * 2.0 * u * (1.0 + y * y / 6.0);
  if (y < 20.0) return std::exp(-2.0 * u) * std::sinh(y) / sz;
  return (std::exp(-2.0 * u * (1.0 - sz)) - std::exp(-2.0 * u * (1.0 + sz))) / (2.0 * sz);
}

inline double signed_stirling(std::size_t m, std::size_t j) {
  const double s = stirling2(m + 1, m + 1 - j).convert_to<double>();
  return j % 2 == 0 ? s : -s;
}

}  // namespace detail

/// True inside the (v, x) box where bessel_k is validated.
inline bool bessel_k_validated(int v, double x) { return x >= 0.05 && x <= 50.0 && std::abs(v) <= 8; }

/// K_v(x) = int_0^inf cosh(v t) e^{-x cosh t} dt, x > 0.
inline double bessel_k(int v, double x, const ImproperIntegralConfig& cfg = {}) {
  if (!(x > 0)) throw DomainError("bessel_k: requires x > 0, got x = " + detail::fmt_double(x, 12));
  cfg.validate();
  return detail::bessel_k_scaled(v, x, cfg) * std::exp(-x);
}

/// 2 sum_j (-1)^j S(m+1, m+1-j) x^{(m+1-j)/2} K_{j+1-m}(2 sqrt x).
inline double mellin_kernel_F(std::size_t m, double x, const ImproperIntegralConfig& cfg = {}) {
  if (!(x > 0)) throw DomainError("mellin_kernel_F: requires x > 0, got x = " + detail::fmt_double(x, 12));
  cfg.validate();
  const double r = std::sqrt(x);
  double acc = 0.0;
  for (std::size_t j = 0; j <= m; ++j) {
    const int v = static_cast<int>(j) + 1 - static_cast<int>(m);
    acc += detail::signed_stirling(m, j) * std::pow(r, static_cast<double>(m + 1 - j)) * bessel_k(v, 2.0 * r, cfg);
  }
  return 2.0 * acc;
}

namespace detail {

// Outer integrand at u: sum_j c_j 2 u^{m-j+1} K_{j+1-m}(2u) sinh(2u sqrt z)/sqrt z.
inline double mellin_outer(std::size_t m, double sz, double u, const ImproperIntegralConfig& cfg) {
  const double damp = damped_sinh_ratio(u, sz);
  double acc = 0.0;
  for (std::size_t j = 0; j <= m; ++j) {
    const int v = static_cast<int>(j) + 1 - static_cast<int>(m);
    acc += signed_stirling(m, j) * 2.0 * std::pow(u, static_cast<double>(m - j + 1)) * bessel_k_scaled(v, 2.0 * u, cfg);
  }
  return acc * damp;
}

inline double mellin_auto_cutoff(std::size_t m, double sz) {
  const double rate = 2.0 * (1.0 - sz);
  double u = 40.0 / rate;
  for (int i = 0; i < 50; ++i) u = (40.0 + (m + 3.0) * std::log(u)) / rate;
  return u;
}

// Panels: geometric towards 0 on [0, 1], uniform on [1, U].
inline double mellin_panels(std::size_t m, double sz, double upper, int order, const ImproperIntegralConfig& cfg,
                            double* mag) {
  const QuadratureRule& rule = gauss_legendre(order);
  auto f = [&](double u) { return mellin_outer(m, sz, u, cfg); };
  double acc = 0.0, total_mag = 0.0, part_mag = 0.0;
  double lo = std::ldexp(1.0, -24);
  const double head = std::min(1.0, upper);
  while (lo < head) {
    const double hi = std::min(2.0 * lo, head);
    acc += apply_rule(rule, f, lo, hi, &part_mag);
    total_mag += part_mag;
    lo = hi;
  }
  if (upper > 1.0) {
    const double width = (upper - 1.0) / cfg.segments;
    for (int k = 0; k < cfg.segments; ++k) {
      acc += apply_rule(rule, f, 1.0 + k * width, 1.0 + (k + 1) * width, &part_mag);
      total_mag += part_mag;
    }
  }
  if (mag) *mag = total_mag;
  return acc;
}

}  // namespace detail

/// g_m(z) through the Bessel representation, 0 < z <= 0.9.
inline IntegralResult g_mellin(std::size_t m, double z, const ImproperIntegralConfig& cfg = {}) {
  if (!(z > 0.0 && z <= 0.9))
    throw DomainError("g_mellin: requires 0 < z <= 0.9 (the representation is only usable inside (0, 1)), got z = " +
                      detail::fmt_double(z, 12));
  cfg.validate();
  const double sz = std::sqrt(z);
  const double upper = cfg.upper_cutoff > 0 ? cfg.upper_cutoff : detail::mellin_auto_cutoff(m, sz);
  double mag = 0.0;
  const double fine = detail::mellin_panels(m, sz, upper, cfg.order, cfg, &mag);
  const double coarse = detail::mellin_panels(m, sz, upper, cfg.order / 2, cfg, nullptr);
  IntegralResult r;
  r.value = fine;
  r.estimated_error = std::max(std::abs(fine - coarse), 1e-15 * mag);
  r.nodes_used = 0;
  if (!(r.estimated_error <= 1e-6 * std::max(std::abs(fine), 1e-300)))
    throw NotConverged("g_mellin: error estimate " + detail::fmt_double(r.estimated_error, 3) +
                       " exceeds the 1e-6 relative budget");
  return r;
}

}  // namespace csl
