#pragma once

#include "csl/exact_core.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <string>

namespace csl {

/// Element a + b*alpha of Q(sqrt 5), alpha the golden ratio, alpha^2 = alpha + 1.
class GoldenRational {
 public:
  GoldenRational() = default;
  GoldenRational(BigRational a) : a_(std::move(a)) {}  // NOLINT: implicit by design of the field embedding
  GoldenRational(BigRational a, BigRational b) : a_(std::move(a)), b_(std::move(b)) {}

  static GoldenRational alpha() { return {0, 1}; }
  static GoldenRational beta() { return {1, -1}; }
  static GoldenRational sqrt5() { return {-1, 2}; }
  static GoldenRational inv_sqrt5() { return {make_rational(-1, 5), make_rational(2, 5)}; }

  const BigRational& rational_part() const { return a_; }
  const BigRational& alpha_part() const { return b_; }

  GoldenRational& operator+=(const GoldenRational& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
  }
  GoldenRational& operator-=(const GoldenRational& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
  }

  friend GoldenRational operator+(GoldenRational x, const GoldenRational& y) { return x += y; }
  friend GoldenRational operator-(GoldenRational x, const GoldenRational& y) { return x -= y; }
  friend GoldenRational operator-(const GoldenRational& x) { return {-x.a_, -x.b_}; }

  friend GoldenRational operator*(const GoldenRational& x, const GoldenRational& y) {
    // (a + b alpha)(c + d alpha) = ac + bd + (ad + bc + bd) alpha
    BigRational bd = x.b_ * y.b_;
    return {x.a_ * y.a_ + bd, x.a_ * y.b_ + x.b_ * y.a_ + bd};
  }

  friend bool operator==(const GoldenRational& x, const GoldenRational& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

  HighPrec precise() const {
    const HighPrec alpha = (1 + boost::multiprecision::sqrt(HighPrec(5))) / 2;
    return HighPrec(a_) + HighPrec(b_) * alpha;
  }

  double value() const { return precise().convert_to<double>(); }

  std::string to_string() const {
    return "(" + csl::to_string(a_) + ") + (" + csl::to_string(b_) + ")*alpha";
  }

 private:
  BigRational a_ = 0;
  BigRational b_ = 0;
};

/// Double-precision golden constants; omega = sqrt(sqrt5 * alpha) = sqrt(2 + alpha).
struct GoldenConstants {
  double alpha;
  double beta;
  double omega;
  double sqrt5;

  static const GoldenConstants& get() {
    static const GoldenConstants c = [] {
      const HighPrec s5 = boost::multiprecision::sqrt(HighPrec(5));
      const HighPrec a = (1 + s5) / 2;
      const HighPrec b = (1 - s5) / 2;
      const HighPrec w = boost::multiprecision::sqrt(s5 * a);
      return GoldenConstants{a.convert_to<double>(), b.convert_to<double>(), w.convert_to<double>(),
                             s5.convert_to<double>()};
    }();
    return c;
  }
};

}  // namespace csl
