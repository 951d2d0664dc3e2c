#pragma once

// The polynomial families behind the closed form and the finite-interval
// integral of g_m:
//
//   g_m(z) = P1_m(z)/(1-z)^{m+1} + P2_m(z)/(1-z)^{m+2} * A(z/(1-z))
//   g_m(z) = int_{-1}^{1} Q_m(u)/(1-u)^{m+2} dx,   u = z(1-x^2)
//
// Each family is built two ways (coupled recursion and explicit sum/product
// formulas) so the constructions can be checked against each other.

#include "csl/exact_core.hpp"
#include "csl/rational_polynomial.hpp"

#include <cstddef>
#include <mutex>
#include <vector>

namespace csl {

struct PolyPair {
  std::size_t m = 0;
  RationalPolynomial p1;
  RationalPolynomial p2;
};

/// Q_m written in the single variable u = a*z with a = 1 - x^2.
struct KernelPolynomial {
  std::size_t m = 0;
  RationalPolynomial q;
};

namespace detail {

inline const RationalPolynomial& poly_z() {
  static const RationalPolynomial z = RationalPolynomial::monomial(1, 1);
  return z;
}

// z(1 - z); the same polynomial serves as u(1 - u) for the Q family.
inline const RationalPolynomial& poly_z_one_minus_z() {
  static const RationalPolynomial p({BigRational(0), BigRational(1), BigRational(-1)});
  return p;
}

inline BigRational half() { return make_rational(1, 2); }

inline RationalPolynomial linear(const BigRational& c0, const BigRational& c1) {
  return RationalPolynomial({c0, c1});
}

template <class Value, class Step>
class OrderCache {
 public:
  explicit OrderCache(Step step) : step_(step) {}

  Value at(std::size_t m) {
    std::lock_guard<std::mutex> lock(mutex_);
    while (values_.size() <= m) values_.push_back(step_(values_));
    return values_[m];
  }

 private:
  Step step_;
  std::mutex mutex_;
  std::vector<Value> values_;
};

inline PolyPair next_pair_recursive(const std::vector<PolyPair>& lower) {
  const std::size_t m = lower.size();
  if (m == 0) return {0, RationalPolynomial::constant(half()), RationalPolynomial::constant(half())};
  const PolyPair& prev = lower.back();
  const auto& zz = poly_z_one_minus_z();
  const auto& z = poly_z();
  RationalPolynomial p1 = zz * prev.p1.derivative() + (z * prev.p1) * BigRational(m) + prev.p2 * half();
  RationalPolynomial p2 =
      zz * prev.p2.derivative() + (z * prev.p2) * BigRational(m + 1) - prev.p2 * half();
  return {m, std::move(p1), std::move(p2)};
}

inline PolyPair next_pair_closed(const std::vector<PolyPair>& lower) {
  const std::size_t m = lower.size();
  const auto& zz = poly_z_one_minus_z();

  RationalPolynomial p1 = RationalPolynomial::monomial(half() * BigRational(factorial(m)), m);
  for (std::size_t j = 0; j < m; ++j) {
    const PolyPair& q = lower[m - (j + 1)];
    RationalPolynomial inner = zz * q.p1.derivative() + q.p2 * half();
    BigRational c = BigRational(binomial(m, static_cast<std::int64_t>(j)) * factorial(j));
    p1 += RationalPolynomial::monomial(c, j) * inner;
  }

  // Empty product is one.
  RationalPolynomial prod = RationalPolynomial::constant(half());
  for (std::size_t j = 1; j <= m; ++j) prod = prod * linear(-half(), BigRational(j + 1));
  RationalPolynomial sum;
  for (std::size_t j = 1; j <= m; ++j) {
    RationalPolynomial term = lower[m - j].p2.derivative();
    for (std::size_t k = 2; k <= j; ++k) term = term * linear(-half(), BigRational(m + 3 - k));
    sum += term;
  }
  RationalPolynomial p2 = prod + zz * sum;
  return {m, std::move(p1), std::move(p2)};
}

inline KernelPolynomial next_kernel_recursive(const std::vector<KernelPolynomial>& lower) {
  const std::size_t m = lower.size();
  if (m == 0) return {0, RationalPolynomial::constant(half())};
  const RationalPolynomial& prev = lower.back().q;
  // With d/dz = a d/du:  Q_m(u) = (m+1) u Q_{m-1}(u) + u(1-u) Q'_{m-1}(u).
  RationalPolynomial q = (poly_z() * prev) * BigRational(m + 1) + poly_z_one_minus_z() * prev.derivative();
  return {m, std::move(q)};
}

inline KernelPolynomial next_kernel_closed(const std::vector<KernelPolynomial>& lower) {
  const std::size_t m = lower.size();
  if (m == 0) return {0, RationalPolynomial::constant(half())};
  // z d/dz acts as u d/du, so (1 - az) z d/dz Q becomes u(1-u) Q'(u).
  const auto& uu = poly_z_one_minus_z();
  RationalPolynomial q = RationalPolynomial::monomial(half() * BigRational(factorial(m + 1)), m);
  q += uu * lower[m - 1].q.derivative();
  for (std::size_t j = 1; j + 1 <= m; ++j) {
    BigRational c = BigRational(binomial(m + 1, static_cast<std::int64_t>(j)) * factorial(j));
    q += uu * (RationalPolynomial::monomial(c, j) * lower[m - (j + 1)].q.derivative());
  }
  return {m, std::move(q)};
}

using PairStep = PolyPair (*)(const std::vector<PolyPair>&);
using KernelStep = KernelPolynomial (*)(const std::vector<KernelPolynomial>&);

inline OrderCache<PolyPair, PairStep>& recursive_pairs() {
  static OrderCache<PolyPair, PairStep> cache(&next_pair_recursive);
  return cache;
}

inline OrderCache<PolyPair, PairStep>& closed_pairs() {
  static OrderCache<PolyPair, PairStep> cache(&next_pair_closed);
  return cache;
}

inline OrderCache<KernelPolynomial, KernelStep>& recursive_kernels() {
  static OrderCache<KernelPolynomial, KernelStep> cache(&next_kernel_recursive);
  return cache;
}

inline OrderCache<KernelPolynomial, KernelStep>& closed_kernels() {
  static OrderCache<KernelPolynomial, KernelStep> cache(&next_kernel_closed);
  return cache;
}

}  // namespace detail

/// P1_m, P2_m from the coupled recursion with P1_0 = P2_0 = 1/2.
inline PolyPair p_pair_recursive(std::size_t m) { return detail::recursive_pairs().at(m); }

/// P1_m, P2_m from the explicit sum/product formulas, lower orders first.
inline PolyPair p_pair_closed(std::size_t m) { return detail::closed_pairs().at(m); }

/// Q_m in u from Q_m = (m+1) u Q_{m-1} + u(1-u) Q'_{m-1}, Q_0 = 1/2.
inline KernelPolynomial q_kernel(std::size_t m) { return detail::recursive_kernels().at(m); }

/// Q_m from the explicit formula with leading term (m+1)!/2 u^m.
inline KernelPolynomial q_kernel_closed(std::size_t m) { return detail::closed_kernels().at(m); }

}  // namespace csl
