#pragma once

// Closed right-hand sides of the Fibonacci/Lucas-weighted series. Every
// coefficient is exact (Fibonacci/Lucas integers times elements of Q(alpha));
// only the named constants pi*omega, pi and arctan(beta^r) are transcendental.

#include "csl/closed_value.hpp"
#include "csl/errors.hpp"
#include "csl/exact_core.hpp"
#include "csl/golden.hpp"
#include "csl/series_oracle.hpp"

#include <string>
#include <vector>

namespace csl {

enum class FibKind { F, L };

inline const char* to_string(FibKind k) { return k == FibKind::F ? "F" : "L"; }

/// A closed value together with the series it claims to sum:
/// value == lhs_scale * sum_weighted(lhs).
struct SeriesIdentity {
  std::string label;
  ClosedValue value;
  WeightSpec lhs;
  BigRational lhs_scale = 1;
};

namespace detail {

inline BigRational fib_q(std::int64_t n) { return BigRational(fibonacci(n)); }
inline BigRational luc_q(std::int64_t n) { return BigRational(lucas(n)); }
inline BigRational seq_q(FibKind k, std::int64_t n) { return k == FibKind::F ? fib_q(n) : luc_q(n); }

inline void require_even(int r, const char* what) {
  if (r % 2 != 0) throw DomainError(std::string(what) + ": r must be even, got r = " + std::to_string(r));
}

// c * arctan(beta^r); arctan(beta^0) = pi/4 is folded into the pi term.
inline void add_arctan_beta(ClosedValue& v, const GoldenRational& c, int r) {
  if (r == 0)
    v.add(c * GoldenRational(make_rational(1, 4)), NamedConstant::pi());
  else
    v.add(c, NamedConstant::arctan_beta_pow(r));
}

inline WeightSpec fib_series(FibKind k, unsigned m, int r, int s, FibScaling scaling, unsigned start) {
  WeightSpec w;
  w.kind = k == FibKind::F ? WeightKind::Fib : WeightKind::Luc;
  w.family = SeriesFamily::G;
  w.m = m;
  w.r = r;
  w.s = s;
  w.scaling = scaling;
  w.start = start;
  return w;
}

}  // namespace detail

/// sum_{n>=0} X_{2n+s} / ((2n+1) C_n).
inline ClosedValue thm1_rhs(FibKind k, int s) {
  using detail::fib_q;
  const GoldenRational alpha = GoldenRational::alpha();
  ClosedValue v;
  if (k == FibKind::F) {
    // 5 sum = 2 L_{s+1} + (4 sqrt5 pi omega / 25)((2 + 2 alpha) F_s + (4 - alpha) F_{s-1})
    v.add(make_rational(2, 5) * detail::luc_q(s + 1), NamedConstant::one());
    GoldenRational c = GoldenRational(make_rational(4, 125)) * GoldenRational::sqrt5() *
                       ((GoldenRational(2) + GoldenRational(2) * alpha) * GoldenRational(fib_q(s)) +
                        (GoldenRational(4) - alpha) * GoldenRational(fib_q(s - 1)));
    v.add(c, NamedConstant::pi_omega());
  } else {
    v.add(2 * fib_q(s + 1), NamedConstant::one());
    GoldenRational c = GoldenRational(make_rational(4, 25)) * GoldenRational::sqrt5() *
                       (GoldenRational(2 * fib_q(s)) + alpha * GoldenRational(fib_q(s - 1)));
    v.add(c, NamedConstant::pi_omega());
  }
  return v;
}

inline WeightSpec thm1_series(FibKind k, int s) { return detail::fib_series(k, 0, 2, s, FibScaling::Unit, 0); }

/// sum_{n>=1} n X_{2n+s} / ((2n+1) C_n).
inline ClosedValue thm2_rhs(FibKind k, int s) {
  using detail::fib_q;
  const GoldenRational alpha = GoldenRational::alpha();
  const GoldenRational scale = GoldenRational(make_rational(8, 125)) * GoldenRational::sqrt5();
  ClosedValue v;
  if (k == FibKind::F) {
    v.add(2 * fib_q(s + 1) + make_rational(8, 5) * fib_q(s), NamedConstant::one());
    GoldenRational c = scale * (GoldenRational::sqrt5() * alpha * GoldenRational(fib_q(s + 1)) +
                                GoldenRational(2 * fib_q(s)));
    v.add(c, NamedConstant::pi_omega());
  } else {
    v.add(2 * detail::luc_q(s + 1) + make_rational(8, 5) * detail::luc_q(s), NamedConstant::one());
    GoldenRational c = scale * ((GoldenRational(6) + alpha) * GoldenRational(fib_q(s + 1)) +
                                GoldenRational(2) * alpha * alpha * GoldenRational(fib_q(s)));
    v.add(c, NamedConstant::pi_omega());
  }
  return v;
}

inline WeightSpec thm2_series(FibKind k, int s) { return detail::fib_series(k, 1, 2, s, FibScaling::Unit, 1); }

/// sum_{n>=1} 4^n n X_{rn+s} / ((2n+1) L_r^n C_n) for even r.
inline ClosedValue thm3_rhs(FibKind k, int r, int s) {
  detail::require_even(r, "thm3_rhs");
  using detail::fib_q;
  using detail::luc_q;
  const BigRational lr = luc_q(r);
  const BigRational lr2 = lr * lr;
  const GoldenRational root5 = GoldenRational::sqrt5();
  const GoldenRational inv_root5 = GoldenRational::inv_sqrt5();

  const BigRational f2 = fib_q(2 * r + s), f3 = fib_q(3 * r + s);
  const BigRational l2 = luc_q(2 * r + s), l3 = luc_q(3 * r + s);
  // Shared pi bracket: 4 L_{3r+s} - L_r L_{2r+s} + (4 F_{3r+s} - L_r F_{2r+s}) sqrt5.
  const GoldenRational bracket = GoldenRational(4 * l3 - lr * l2) + GoldenRational(4 * f3 - lr * f2) * root5;

  ClosedValue v;
  if (k == FibKind::F) {
    v.add((f3 + lr / 2 * f2) * lr / 2, NamedConstant::one());
    detail::add_arctan_beta(v, GoldenRational((lr * l2 - 4 * l3) * lr2 / 4) * inv_root5, r);
    v.add(bracket * GoldenRational(lr2 / 16) * inv_root5, NamedConstant::pi());
  } else {
    v.add((l3 + lr / 2 * l2) * lr / 2, NamedConstant::one());
    detail::add_arctan_beta(v, GoldenRational((lr * f2 - 4 * f3) * lr2 / 4) * root5, r);
    v.add(bracket * GoldenRational(lr2 / 16), NamedConstant::pi());
  }
  return v;
}

inline WeightSpec thm3_series(FibKind k, int r, int s) {
  return detail::fib_series(k, 1, r, s, FibScaling::LucasPower, 1);
}

/// The four displayed instances with X_{(n-2)r} and X_{(n-3)r}, as printed.
inline std::vector<SeriesIdentity> thm3_instances(int r) {
  detail::require_even(r, "thm3_instances");
  using detail::fib_q;
  using detail::luc_q;
  const BigRational lr = luc_q(r), fr = fib_q(r), f2r = fib_q(2 * r);
  const BigRational lr2 = lr * lr, lr3 = lr2 * lr;
  const GoldenRational root5 = GoldenRational::sqrt5();
  const GoldenRational inv_root5 = GoldenRational::inv_sqrt5();
  const GoldenRational lr_plus = GoldenRational(lr) + GoldenRational(2 * fr) * root5;
  const BigRational sign_r = (r % 2 == 0) ? 1 : -1;
  const std::string rs = std::to_string(r);
  std::vector<SeriesIdentity> out;

  {
    // sum 2^{2n+1} n F_{(n-2)r} / ((2n+1) L_r^n C_n)
    ClosedValue v = ClosedValue::rational(f2r);
    v.add(lr_plus * GoldenRational(lr2 / 4) * inv_root5, NamedConstant::pi());
    detail::add_arctan_beta(v, GoldenRational(-lr3) * inv_root5, r);
    out.push_back({"F(n-2)r r=" + rs, v, thm3_series(FibKind::F, r, -2 * r), 2});
  }
  {
    ClosedValue v = ClosedValue::rational(lr2);
    v.add(lr_plus * GoldenRational(lr2 / 8), NamedConstant::pi());
    detail::add_arctan_beta(v, GoldenRational(-fr * lr2) * root5, r);
    out.push_back({"L(n-2)r r=" + rs, v, thm3_series(FibKind::L, r, -2 * r), 1});
  }
  {
    ClosedValue v = ClosedValue::rational(-lr2 * fr / 4);
    v.add((GoldenRational(8 - lr2) + GoldenRational(f2r) * root5) * GoldenRational(lr2 / 80) * root5,
          NamedConstant::pi());
    detail::add_arctan_beta(v, GoldenRational((lr2 - 8) * lr2 / 20) * root5, r);
    out.push_back({"F(n-3)r r=" + rs, v, thm3_series(FibKind::F, r, -3 * r), 1});
  }
  {
    ClosedValue v = ClosedValue::rational((2 + lr2 / 2) * lr / 2);
    v.add((GoldenRational(8 - sign_r * lr2) + GoldenRational(f2r) * root5) * GoldenRational(lr2 / 16),
          NamedConstant::pi());
    detail::add_arctan_beta(v, GoldenRational(-lr3 * fr / 4) * root5, r);
    out.push_back({"L(n-3)r r=" + rs, v, thm3_series(FibKind::L, r, -3 * r), 1});
  }
  return out;
}

/// The six printed n >= 1 example sums built from the first theorem.
inline std::vector<SeriesIdentity> thm1_examples() {
  const GoldenRational alpha = GoldenRational::alpha();
  const auto pw = NamedConstant::pi_omega();
  auto make = [&](const char* label, FibKind k, int s, BigRational rational, GoldenRational pi_omega_coeff) {
    ClosedValue v = ClosedValue::rational(rational);
    v.add(pi_omega_coeff, pw);
    return SeriesIdentity{label, v, detail::fib_series(k, 0, 2, s, FibScaling::Unit, 1), 1};
  };
  std::vector<SeriesIdentity> out;
  out.push_back(make("F_{2n}", FibKind::F, 0, make_rational(2, 5),
                     GoldenRational(make_rational(4, 125)) * (GoldenRational(7) * alpha - GoldenRational(6))));
  out.push_back(make("L_{2n}", FibKind::L, 0, 0,
                     GoldenRational(make_rational(4, 25)) * (alpha + GoldenRational(2))));
  out.push_back(make("F_{2n+1}", FibKind::F, 1, make_rational(1, 5),
                     GoldenRational(make_rational(8, 125)) * (GoldenRational(3) * alpha + GoldenRational(1))));
  out.push_back(make("L_{2n+1}", FibKind::L, 1, 1, GoldenRational(make_rational(8, 25)) * GoldenRational::sqrt5()));
  out.push_back(make("F_{2n-2}", FibKind::F, -2, make_rational(3, 5),
                     GoldenRational(make_rational(8, 125)) * (GoldenRational(4) * alpha - GoldenRational(7))));
  out.push_back(make("L_{2n-2}", FibKind::L, -2, -1,
                     GoldenRational(make_rational(8, 25)) * (GoldenRational(3) - alpha)));
  return out;
}

/// sum F_{2n}/C_n (n >= 1) and sum L_{2n}/C_n (n >= 0), closed via f at alpha^2, beta^2.
inline std::vector<SeriesIdentity> catalan_fib_values() {
  const auto pw = NamedConstant::pi_omega();
  const GoldenRational root5 = GoldenRational::sqrt5();
  auto spec = [](FibKind k, unsigned start) {
    WeightSpec w = detail::fib_series(k, 0, 2, 0, FibScaling::Unit, start);
    w.family = SeriesFamily::F;
    return w;
  };
  std::vector<SeriesIdentity> out;
  {
    ClosedValue v = ClosedValue::rational(make_rational(22, 5));
    v.add(GoldenRational(make_rational(6, 125)) * (GoldenRational(5) + GoldenRational(9) * root5), pw);
    out.push_back({"F_{2n}/C_n", v, spec(FibKind::F, 1), 1});
  }
  {
    ClosedValue v = ClosedValue::rational(make_rational(62, 5));
    v.add(GoldenRational(make_rational(6, 125)) * (GoldenRational(15) + GoldenRational(19) * root5), pw);
    out.push_back({"L_{2n}/C_n", v, spec(FibKind::L, 0), 1});
  }
  return out;
}

}  // namespace csl
