#pragma once

// Direct truncated summation with certified geometric tail bounds. This is the
// reference every closed form, quadrature and Bessel integral is checked
// against, so it shares no code with those paths beyond the sequence tables.
//
// Terms are generated by their exact coefficient ratio and accumulated in
// 113-bit binary floating point; alternating sums at |z| near 1 cancel many
// orders of magnitude and double accumulation would not reach 1e-10.

#include "csl/errors.hpp"
#include "csl/exact_core.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>

namespace csl {

using Accum = boost::multiprecision::cpp_bin_float_quad;

struct SeriesResult {
  double value = 0.0;
  /// Certified bound on |true sum - partial sum| from truncation.
  double tail_bound = std::numeric_limits<double>::infinity();
  std::size_t terms_used = 0;
  bool converged = false;
  /// Bound on the error from accumulation and the final rounding to double.
  double rounding_bound = 0.0;
};

/// Per-term coefficient family.
enum class SeriesFamily {
  G,  ///< 4^n / ((2n+1) C_n)
  F,  ///< 1 / C_n
};

enum class WeightKind {
  Plain,       ///< weight 1
  Power,       ///< n^m
  Fib,         ///< n^m F_{rn+s}, summed through the Binet split
  Luc,         ///< n^m L_{rn+s}
  Integrated,  ///< 1/((n+1)(n+2)), G family only
  Sprugnoli,   ///< z^{n+1}/(n+1), G family only
};

/// Extra per-term factor on Fibonacci/Lucas-weighted G series.
enum class FibScaling {
  Unit,        ///< sum n^m X_{rn+s} / ((2n+1) C_n)
  LucasPower,  ///< sum 4^n n^m X_{rn+s} / ((2n+1) L_r^n C_n), r even
};

struct WeightSpec {
  WeightKind kind = WeightKind::Power;
  SeriesFamily family = SeriesFamily::G;
  unsigned m = 0;
  double z = 0.0;
  int r = 2;
  int s = 0;
  FibScaling scaling = FibScaling::Unit;
  /// First summation index; 0 or 1.
  unsigned start = 0;
};

namespace detail {

enum class TermShape { G, F, GIntegrated, GSprugnoli };

// c_{n+1}/c_n for the coefficient family.
inline Accum coefficient_ratio(TermShape shape, std::size_t n) {
  const Accum k(n);
  switch (shape) {
    case TermShape::G: return 2 * (k + 2) / (2 * k + 3);
    case TermShape::F: return (k + 2) / (2 * (2 * k + 1));
    case TermShape::GIntegrated: return 2 * (k + 1) * (k + 2) / ((2 * k + 3) * (k + 3));
    case TermShape::GSprugnoli: break;
  }
  return 2 * (k + 1) / (2 * k + 3);
}

inline Accum first_coefficient(TermShape shape) {
  return shape == TermShape::GIntegrated ? Accum(0.5) : Accum(1);
}

// sup_{k >= n} of the coefficient ratio: the G and F ratios decrease towards
// their limits, the integrated and Sprugnoli ratios increase towards 1.
inline double coefficient_ratio_sup(TermShape shape, std::size_t n) {
  const double k = static_cast<double>(n);
  switch (shape) {
    case TermShape::G: return 2 * (k + 2) / (2 * k + 3);
    case TermShape::F: return (k + 2) / (2 * (2 * k + 1));
    case TermShape::GIntegrated:
    case TermShape::GSprugnoli: break;
  }
  return 1.0;
}

inline double radius(TermShape shape) { return shape == TermShape::F ? 4.0 : 1.0; }

struct RawSum {
  Accum value = 0;
  double tail = std::numeric_limits<double>::infinity();
  double abs_sum = 0.0;
  std::size_t terms = 0;
  bool converged = false;
};

/// sum_{n >= start} n^m c_n x^n. With fixed_last set, sums n = start..fixed_last
/// and still reports the tail bound at that point.
inline RawSum sum_power_series(TermShape shape, unsigned m, const Accum& x, unsigned start, double tol,
                               std::size_t max_terms, std::size_t fixed_last = 0, bool fixed = false) {
  const double ax = std::abs(x.convert_to<double>());
  if (!(ax < radius(shape)))
    throw DomainError("series argument " + fmt_double(x.convert_to<double>(), 12) + " outside radius " +
                      fmt_double(radius(shape), 3));
  RawSum out;
  Accum cx = first_coefficient(shape);
  const std::size_t last = fixed ? fixed_last : max_terms - 1;
  for (std::size_t n = 0; n <= last; ++n) {
    Accum t = cx;
    if (m > 0) t *= boost::multiprecision::pow(Accum(n), m);
    if (n >= start) {
      out.value += t;
      out.abs_sum += std::abs(t.convert_to<double>());
    }
    out.terms = n + 1;
    if (n >= 1 || m == 0) {
      const double k = static_cast<double>(n);
      const double power = (m == 0 || n == 0) ? 1.0 : std::pow((k + 1.0) / k, m);
      // Slight inflation covers rounding in the double-evaluated ratio bound.
      const double rho = ax * coefficient_ratio_sup(shape, n) * power * (1.0 + 1e-12);
      if (rho < 1.0) {
        out.tail = std::abs(t.convert_to<double>()) * rho / (1.0 - rho);
        if (!fixed && out.tail <= tol) {
          out.converged = true;
          break;
        }
      }
    }
    cx *= x * coefficient_ratio(shape, n);
  }
  if (fixed) out.converged = out.tail <= tol;
  return out;
}

inline double rounding_bound(double value, const RawSum& s, unsigned m) {
  const double eps_accum = std::ldexp(1.0, -112);
  const double half_ulp = std::abs(value) * std::numeric_limits<double>::epsilon() / 2;
  return half_ulp + (4.0 * m + 8.0) * static_cast<double>(s.terms) * eps_accum * s.abs_sum;
}

inline SeriesResult finish(const RawSum& s, unsigned m) {
  SeriesResult r;
  r.value = s.value.convert_to<double>();
  r.tail_bound = s.tail;
  r.terms_used = s.terms;
  r.converged = s.converged;
  r.rounding_bound = rounding_bound(r.value, s, m);
  return r;
}

inline TermShape shape_of(const WeightSpec& w) {
  switch (w.kind) {
    case WeightKind::Integrated:
      if (w.family != SeriesFamily::G) throw std::invalid_argument("integrated weight requires the G family");
      return TermShape::GIntegrated;
    case WeightKind::Sprugnoli:
      if (w.family != SeriesFamily::G) throw std::invalid_argument("Sprugnoli weight requires the G family");
      return TermShape::GSprugnoli;
    default:
      return w.family == SeriesFamily::G ? TermShape::G : TermShape::F;
  }
}

inline Accum golden_alpha() { return (1 + boost::multiprecision::sqrt(Accum(5))) / 2; }
inline Accum golden_beta() { return (1 - boost::multiprecision::sqrt(Accum(5))) / 2; }

struct BinetPlan {
  Accum x_plus, x_minus;        // sub-series arguments
  Accum coef_plus, coef_minus;  // value = coef_plus*S(x_plus) + coef_minus*S(x_minus)
};

inline BinetPlan binet_plan(const WeightSpec& w) {
  if (w.scaling == FibScaling::LucasPower) {
    if (w.family != SeriesFamily::G) throw std::invalid_argument("LucasPower scaling requires the G family");
    if (w.r % 2 != 0) throw DomainError("LucasPower scaling requires an even r, got r = " + std::to_string(w.r));
  }
  const Accum a = golden_alpha();
  const Accum b = golden_beta();
  const Accum ar = boost::multiprecision::pow(a, w.r);
  const Accum br = boost::multiprecision::pow(b, w.r);
  Accum mu = 1;
  if (w.scaling == FibScaling::LucasPower) mu = 4 / (ar + br);
  if (w.family == SeriesFamily::G) mu /= 4;
  BinetPlan p;
  p.x_plus = ar * mu;
  p.x_minus = br * mu;
  const Accum as = boost::multiprecision::pow(a, w.s);
  const Accum bs = boost::multiprecision::pow(b, w.s);
  if (w.kind == WeightKind::Fib) {
    const Accum root5 = boost::multiprecision::sqrt(Accum(5));
    p.coef_plus = as / root5;
    p.coef_minus = -bs / root5;
  } else {
    p.coef_plus = as;
    p.coef_minus = bs;
  }
  return p;
}

inline SeriesResult run_weighted(const WeightSpec& w, double tol, std::size_t max_terms, bool fixed,
                                 std::size_t fixed_last) {
  if (!fixed && !(tol > 0)) throw std::invalid_argument("series tolerance must be positive");
  if (max_terms < 1) throw std::invalid_argument("max_terms must be positive");
  const TermShape shape = shape_of(w);
  const unsigned m = w.kind == WeightKind::Plain ? 0u : w.m;

  if (w.kind != WeightKind::Fib && w.kind != WeightKind::Luc) {
    if (!std::isfinite(w.z)) throw DomainError("series argument must be finite");
    RawSum s = sum_power_series(shape, m, Accum(w.z), w.start, tol, max_terms, fixed_last, fixed);
    if (w.kind == WeightKind::Sprugnoli) {
      // The series carries z^{n+1}; scale value and bounds by |z|.
      s.value *= Accum(w.z);
      s.tail *= std::abs(w.z);
      s.abs_sum *= std::abs(w.z);
    }
    return finish(s, m);
  }

  const BinetPlan p = binet_plan(w);
  const double cp = std::abs(p.coef_plus.convert_to<double>());
  const double cm = std::abs(p.coef_minus.convert_to<double>());
  const double tol_plus = cp > 0 ? tol / (2 * cp) : tol;
  const double tol_minus = cm > 0 ? tol / (2 * cm) : tol;
  RawSum sp = sum_power_series(shape, m, p.x_plus, w.start, tol_plus, max_terms, fixed_last, fixed);
  RawSum sm = sum_power_series(shape, m, p.x_minus, w.start, tol_minus, max_terms, fixed_last, fixed);
  RawSum out;
  out.value = p.coef_plus * sp.value + p.coef_minus * sm.value;
  out.tail = cp * sp.tail + cm * sm.tail;
  out.abs_sum = cp * sp.abs_sum + cm * sm.abs_sum;
  out.terms = std::max(sp.terms, sm.terms);
  out.converged = fixed ? out.tail <= tol : (sp.converged && sm.converged);
  return finish(out, m);
}

}  // namespace detail

inline constexpr std::size_t kDefaultMaxTerms = 200000;

/// Sum of the weighted series to absolute truncation tolerance tol.
/// Stops early with converged = false when max_terms is exhausted.
inline SeriesResult sum_weighted(const WeightSpec& w, double tol, std::size_t max_terms = kDefaultMaxTerms) {
  return detail::run_weighted(w, tol, max_terms, false, 0);
}

/// Partial sum over n = start..last (inclusive), same weights as sum_weighted.
inline SeriesResult partial_weighted(const WeightSpec& w, std::size_t last) {
  return detail::run_weighted(w, 0.0, last + 1, true, last);
}

/// g_m(z) = sum 4^n n^m z^n / ((2n+1) C_n), |z| < 1.
inline SeriesResult sum_g(unsigned m, double z, double tol, std::size_t max_terms = kDefaultMaxTerms) {
  WeightSpec w;
  w.kind = WeightKind::Power;
  w.m = m;
  w.z = z;
  return sum_weighted(w, tol, max_terms);
}

/// f(z) = sum z^n / C_n, |z| < 4.
inline SeriesResult sum_f(double z, double tol, std::size_t max_terms = kDefaultMaxTerms) {
  WeightSpec w;
  w.kind = WeightKind::Plain;
  w.family = SeriesFamily::F;
  w.z = z;
  return sum_weighted(w, tol, max_terms);
}

/// sum 4^n z^n / ((2n+1)(n+1)(n+2) C_n), |z| < 1.
inline SeriesResult sum_integrated(double z, double tol, std::size_t max_terms = kDefaultMaxTerms) {
  WeightSpec w;
  w.kind = WeightKind::Integrated;
  w.z = z;
  return sum_weighted(w, tol, max_terms);
}

/// sum 4^n z^{n+1} / ((2n+1) binom(2n,n)), |z| < 1.
inline SeriesResult sum_sprugnoli(double z, double tol, std::size_t max_terms = kDefaultMaxTerms) {
  WeightSpec w;
  w.kind = WeightKind::Sprugnoli;
  w.z = z;
  return sum_weighted(w, tol, max_terms);
}

// ---- exact partial sums ---------------------------------------------------

namespace detail {

inline BigRational exact_from_double(double x) {
  if (!std::isfinite(x)) throw DomainError("exact partial sums need a finite argument");
  int e = 0;
  const double mant = std::frexp(x, &e);
  const auto scaled = static_cast<long long>(std::ldexp(mant, 53));
  BigRational q{BigInt(scaled)};
  const int shift = e - 53;
  if (shift >= 0)
    q *= BigRational(BigInt(1) << shift);
  else
    q /= BigRational(BigInt(1) << (-shift));
  return q;
}

// 4^n/((2n+1) C_n), 1/C_n, and the integrated coefficient at index n.
inline BigRational exact_coefficient(TermShape shape, std::size_t n) {
  const BigInt c = catalan(n);
  switch (shape) {
    case TermShape::G:
      return BigRational(BigInt(1) << (2 * n), BigInt(2 * n + 1) * c);
    case TermShape::F:
      return BigRational(BigInt(1), c);
    case TermShape::GIntegrated:
      return BigRational(BigInt(1) << (2 * n), BigInt(2 * n + 1) * BigInt(n + 1) * BigInt(n + 2) * c);
    case TermShape::GSprugnoli: break;
  }
  return BigRational(BigInt(1) << (2 * n), BigInt(2 * n + 1) * BigInt(n + 1) * c);
}

inline BigRational exact_power(std::size_t n, unsigned m) {
  return BigRational(boost::multiprecision::pow(BigInt(n), m));
}

}  // namespace detail

/// Exact sum_{n=0}^{last} 4^n n^m z^n / ((2n+1) C_n).
inline BigRational exact_partial_g(unsigned m, const BigRational& z, std::size_t last) {
  BigRational acc = 0, zn = 1;
  for (std::size_t n = 0; n <= last; ++n) {
    acc += detail::exact_power(n, m) * detail::exact_coefficient(detail::TermShape::G, n) * zn;
    zn *= z;
  }
  return acc;
}

/// Exact sum_{n=0}^{last} z^n / C_n.
inline BigRational exact_partial_f(const BigRational& z, std::size_t last) {
  BigRational acc = 0, zn = 1;
  for (std::size_t n = 0; n <= last; ++n) {
    acc += detail::exact_coefficient(detail::TermShape::F, n) * zn;
    zn *= z;
  }
  return acc;
}

/// Exact sum_{n=0}^{last} 4^n z^n / ((2n+1)(n+1)(n+2) C_n).
inline BigRational exact_partial_integrated(const BigRational& z, std::size_t last) {
  BigRational acc = 0, zn = 1;
  for (std::size_t n = 0; n <= last; ++n) {
    acc += detail::exact_coefficient(detail::TermShape::GIntegrated, n) * zn;
    zn *= z;
  }
  return acc;
}

/// Exact partial sum over n = start..last of any WeightSpec; z is taken as the
/// exact binary rational of the stored double.
inline BigRational exact_partial(const WeightSpec& w, std::size_t last) {
  const detail::TermShape shape = detail::shape_of(w);
  const unsigned m = w.kind == WeightKind::Plain ? 0u : w.m;
  BigRational acc = 0;
  if (w.kind == WeightKind::Fib || w.kind == WeightKind::Luc) {
    // exact_coefficient already carries 4^n for the G family.
    BigRational mu = 1;
    if (w.scaling == FibScaling::LucasPower) {
      if (w.family != SeriesFamily::G) throw std::invalid_argument("LucasPower scaling requires the G family");
      if (w.r % 2 != 0) throw DomainError("LucasPower scaling requires an even r");
      mu = BigRational(BigInt(1), lucas(w.r));
    } else if (w.family == SeriesFamily::G) {
      mu = make_rational(1, 4);
    }
    BigRational mun = 1;
    for (std::size_t n = 0; n <= last; ++n) {
      if (n >= w.start) {
        const std::int64_t idx = static_cast<std::int64_t>(w.r) * static_cast<std::int64_t>(n) + w.s;
        const BigInt x = w.kind == WeightKind::Fib ? fibonacci(idx) : lucas(idx);
        acc += detail::exact_power(n, m) * BigRational(x) * mun * detail::exact_coefficient(shape, n);
      }
      mun *= mu;
    }
    return acc;
  }
  const BigRational z = detail::exact_from_double(w.z);
  BigRational zn = 1;
  for (std::size_t n = 0; n <= last; ++n) {
    if (n >= w.start) acc += detail::exact_power(n, m) * detail::exact_coefficient(shape, n) * zn;
    zn *= z;
  }
  if (w.kind == WeightKind::Sprugnoli) acc *= z;
  return acc;
}

}  // namespace csl
