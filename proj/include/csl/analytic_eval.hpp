#pragma once

// Closed-form evaluation in double precision. Everything funnels through the
// kernel A(t) = arctan(sqrt t)/sqrt t, continued to -1 < t < 0 by
// artanh(sqrt(-t))/sqrt(-t); negative series arguments land on that branch.

#include "csl/closed_value.hpp"
#include "csl/errors.hpp"
#include "csl/poly_engine.hpp"

#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace csl {

struct EvalConfig {
  double target_abs_tol = 1e-10;
  double target_rel_tol = 1e-12;
  std::size_t max_terms = 200000;
  int quadrature_nodes = 64;

  void validate() const {
    if (!(target_abs_tol > 0) || !(target_rel_tol > 0) || quadrature_nodes <= 0)
      throw std::invalid_argument("EvalConfig: tolerances and quadrature_nodes must be positive");
    if (max_terms < 16) throw std::invalid_argument("EvalConfig: max_terms must be at least 16");
  }
};

namespace detail {

struct PairDoubles {
  std::vector<double> p1;
  std::vector<double> p2;
};

inline PairDoubles pair_doubles(std::size_t m) {
  static OrderCache<PairDoubles, PairDoubles (*)(const std::vector<PairDoubles>&)> cache(
      [](const std::vector<PairDoubles>& lower) {
        PolyPair p = p_pair_recursive(lower.size());
        return PairDoubles{p.p1.to_doubles(), p.p2.to_doubles()};
      });
  return cache.at(m);
}

inline void require_unit_disc(double z, const char* what) {
  if (!(std::abs(z) < 1.0))
    throw DomainError(std::string(what) + ": requires |z| < 1, got z = " + fmt_double(z, 12));
}

}  // namespace detail

/// A(t) for t > -1; A(0) = 1.
inline double kernel_a(double t) {
  if (!(t > -1.0)) throw DomainError("kernel_a: requires t > -1, got t = " + detail::fmt_double(t, 12));
  if (std::abs(t) < 1e-4) {
    // 1 - t/3 + t^2/5 - t^3/7 + t^4/9
    double acc = 0.0;
    for (int k = 4; k >= 0; --k) acc = acc * (-t) + 1.0 / (2 * k + 1);
    return acc;
  }
  if (t > 0) {
    const double s = std::sqrt(t);
    return std::atan(s) / s;
  }
  const double s = std::sqrt(-t);
  return std::atanh(s) / s;
}

/// g_m(z) = P1/(1-z)^{m+1} + P2/(1-z)^{m+2} A(z/(1-z)) for |z| < 1.
inline double g_closed(std::size_t m, double z) {
  detail::require_unit_disc(z, "g_closed");
  const auto p = detail::pair_doubles(m);
  const double w = 1.0 - z;
  const double wm1 = std::pow(w, static_cast<double>(m + 1));
  return poly_eval_f(p.p1, z) / wm1 + poly_eval_f(p.p2, z) / (wm1 * w) * kernel_a(z / w);
}

namespace detail {

// y / sin(y), with the removable point at 0.
inline double y_over_sin(double y) {
  if (std::abs(y) < 1e-4) {
    const double y2 = y * y;
    return 1.0 + y2 / 6.0 + 7.0 * y2 * y2 / 360.0;
  }
  return y / std::sin(y);
}

}  // namespace detail

/// Trigonometric forms; variant 0 or 1 gives g_variant(sin^2 x) for |x| < pi/2.
inline double g_trig(int variant, double x) {
  if (variant != 0 && variant != 1) throw std::invalid_argument("g_trig: variant must be 0 or 1");
  if (!(std::abs(x) < std::numbers::pi / 2))
    throw DomainError("g_trig: requires |z| < pi/2, got z = " + detail::fmt_double(x, 12));
  const double c = std::cos(x);
  const double c2 = c * c;
  const double ratio = detail::y_over_sin(2 * x);
  const double cos2x = std::cos(2 * x);
  if (variant == 0) return (1.0 + ratio) / (2.0 * c2);
  return (2.0 - cos2x + (1.0 - 2.0 * cos2x) * ratio) / (4.0 * c2 * c2);
}

/// f(z) = sum z^n / C_n for 0 <= z < 4.
inline double f_closed(double z) {
  if (!(z >= 0.0 && z < 4.0))
    throw DomainError("f_closed: requires 0 <= z < 4, got z = " + detail::fmt_double(z, 12));
  const double w = 4.0 - z;
  const double r = std::sqrt(z);
  return 2.0 * (z + 8.0) / (w * w) + 24.0 * r * std::asin(r / 2.0) / (w * w * std::sqrt(w));
}

/// sqrt(t) arctan(sqrt t), t = z/(1-z), written as t A(t) so z < 0 is covered.
inline double sprugnoli_closed(double z) {
  detail::require_unit_disc(z, "sprugnoli_closed");
  const double t = z / (1.0 - z);
  return t * kernel_a(t);
}

/// Partial sums of the series in powers of z/(1-z); variant 0 or 1.
inline double g_transformed(int variant, double z, std::size_t terms) {
  if (variant != 0 && variant != 1) throw std::invalid_argument("g_transformed: variant must be 0 or 1");
  if (terms < 1) throw std::invalid_argument("g_transformed: terms must be >= 1");
  const double t = z / (1.0 - z);
  if (!(std::abs(t) < 1.0))
    throw DomainError("g_transformed: requires |z/(1-z)| < 1 (z < 1/2), got z = " + detail::fmt_double(z, 12));
  double sum = 0.0;
  double tn = 1.0;
  for (std::size_t n = 0; n < terms; ++n) {
    const double nn = static_cast<double>(n);
    double c = (nn + 1.0) / (2.0 * nn + 1.0);
    if (variant == 1) c *= 2.0 * z + nn;
    sum += (n % 2 == 0 ? c : -c) * tn;
    tn *= t;
  }
  const double w = 1.0 - z;
  return variant == 0 ? sum / (w * w) : sum / (w * w * w);
}

/// sum 4^n z^n / ((2n+1)(n+1)(n+2) C_n) via 1/(2z) + arctan^2(sqrt t)/(2z^2) - arctan(sqrt t)/(z sqrt t).
inline double integrated_closed(double z) {
  detail::require_unit_disc(z, "integrated_closed");
  if (std::abs(z) < 1e-3) {
    // The three terms cancel to O(1) near 0; sum the series instead.
    double term = 0.5;
    double sum = 0.0;
    for (int n = 0; n < 40 && term != 0.0; ++n) {
      sum += term;
      const double k = n;
      term *= z * 2.0 * (k + 1.0) * (k + 2.0) / ((2.0 * k + 3.0) * (k + 3.0));
    }
    return sum;
  }
  const double t = z / (1.0 - z);
  const double a = kernel_a(t);
  // arctan(sqrt t) = sqrt(t) A(t), so arctan^2 = t A^2 and arctan/sqrt t = A.
  return 1.0 / (2.0 * z) + t * a * a / (2.0 * z * z) - a / z;
}

enum class SpecialPoint { Quarter, Half, ThreeQuarters };

inline BigRational special_point_value(SpecialPoint p) {
  switch (p) {
    case SpecialPoint::Quarter: return make_rational(1, 4);
    case SpecialPoint::Half: return make_rational(1, 2);
    case SpecialPoint::ThreeQuarters: break;
  }
  return make_rational(3, 4);
}

/// Exact a + b*K form of g_m at z in {1/4, 1/2, 3/4}: K = pi at 1/2, sqrt3*pi otherwise.
///
/// At these points A(z/(1-z)) is sqrt3*pi/6, pi/4 and sqrt3*pi/9, so the
/// closed form collapses to rational multiples of one constant.
inline ClosedValue g_special_value(std::size_t m, SpecialPoint p) {
  const PolyPair pair = p_pair_recursive(m);
  const BigRational z = special_point_value(p);
  const BigRational inv_w = 1 / (1 - z);
  BigRational scale1 = 1;
  for (std::size_t i = 0; i <= m; ++i) scale1 *= inv_w;
  const BigRational scale2 = scale1 * inv_w;

  ClosedValue v;
  v.add(pair.p1(z) * scale1, NamedConstant::one());
  switch (p) {
    case SpecialPoint::Quarter:
      v.add(pair.p2(z) * scale2 * make_rational(1, 6), NamedConstant::sqrt3_pi());
      break;
    case SpecialPoint::Half:
      v.add(pair.p2(z) * scale2 * make_rational(1, 4), NamedConstant::pi());
      break;
    case SpecialPoint::ThreeQuarters:
      v.add(pair.p2(z) * scale2 * make_rational(1, 9), NamedConstant::sqrt3_pi());
      break;
  }
  return v;
}

}  // namespace csl
