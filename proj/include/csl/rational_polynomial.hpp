#pragma once

#include "csl/exact_core.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace csl {

/// Dense univariate polynomial with exact rational coefficients.
///
/// coefficients()[i] multiplies x^i. The highest stored coefficient is never
/// zero; the zero polynomial stores nothing and has degree -1.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;

  explicit RationalPolynomial(std::vector<BigRational> coefficients)
      : coeffs_(std::move(coefficients)) {
    normalize();
  }

  static RationalPolynomial constant(const BigRational& c) { return RationalPolynomial({c}); }

  static RationalPolynomial monomial(const BigRational& c, std::size_t power) {
    std::vector<BigRational> v(power + 1);
    v[power] = c;
    return RationalPolynomial(std::move(v));
  }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigRational>& coefficients() const { return coeffs_; }

  BigRational coefficient(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : BigRational(0);
  }

  BigRational leading() const { return is_zero() ? BigRational(0) : coeffs_.back(); }

  RationalPolynomial derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<BigRational> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * BigRational(i);
    return RationalPolynomial(std::move(d));
  }

  /// Exact Horner evaluation.
  BigRational operator()(const BigRational& x) const {
    BigRational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  std::vector<double> to_doubles() const {
    std::vector<double> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(to_double(c));
    return out;
  }

  RationalPolynomial& operator+=(const RationalPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
  }

  RationalPolynomial& operator-=(const RationalPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
  }

  RationalPolynomial& operator*=(const BigRational& s) {
    for (auto& c : coeffs_) c *= s;
    normalize();
    return *this;
  }

  friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
  friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) { return a -= b; }
  friend RationalPolynomial operator*(RationalPolynomial a, const BigRational& s) { return a *= s; }
  friend RationalPolynomial operator*(const BigRational& s, RationalPolynomial a) { return a *= s; }

  friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigRational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return RationalPolynomial(std::move(out));
  }

  friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Human-readable form, lowest power first: "-1/8 + 3/2*z + 1/2*z^2".
  std::string to_string(char var = 'z') const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i] == 0) continue;
      std::string c = csl::to_string(coeffs_[i]);
      if (!s.empty()) {
        if (c.front() == '-') {
          s += " - ";
          c.erase(0, 1);
        } else {
          s += " + ";
        }
      }
      if (i == 0) {
        s += c;
      } else {
        if (c == "-1") s += "-";
        else if (c != "1") s += c + "*";
        s += var;
      }
      if (i >= 2) s += "^" + std::to_string(i);
    }
    return s;
  }

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<BigRational> coeffs_;
};

inline BigRational poly_eval(const RationalPolynomial& p, const BigRational& x) { return p(x); }

/// Horner in double over the rounded coefficients.
inline double poly_eval_f(const std::vector<double>& coeffs, double x) {
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

inline double poly_eval_f(const RationalPolynomial& p, double x) { return poly_eval_f(p.to_doubles(), x); }

inline RationalPolynomial poly_derivative(const RationalPolynomial& p) { return p.derivative(); }

}  // namespace csl
