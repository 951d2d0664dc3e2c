#pragma once

// Exact linear combinations of named constants, e.g. 2/3 + 8/81*sqrt3*pi.
// Coefficients are exact rationals; constants carry a 50-digit value so the
// double returned by ClosedValue::value() is correctly rounded in practice.

#include "csl/exact_core.hpp"
#include "csl/golden.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace csl {

class NamedConstant {
 public:
  NamedConstant(std::string key, HighPrec value) : key_(std::move(key)), value_(std::move(value)) {}

  const std::string& key() const { return key_; }
  const HighPrec& precise() const { return value_; }
  double numeric() const { return value_.convert_to<double>(); }

  NamedConstant times(const NamedConstant& other) const {
    if (key_ == "1") return other;
    if (other.key_ == "1") return *this;
    return {key_ + "*" + other.key_, value_ * other.value_};
  }

  static HighPrec pi_hp() { return boost::math::constants::pi<HighPrec>(); }
  static HighPrec sqrt_hp(int v) { return boost::multiprecision::sqrt(HighPrec(v)); }
  static HighPrec alpha_hp() { return (1 + sqrt_hp(5)) / 2; }

  static NamedConstant one() { return {"1", HighPrec(1)}; }
  static NamedConstant pi() { return {"pi", pi_hp()}; }
  static NamedConstant pi_squared() { return {"pi^2", pi_hp() * pi_hp()}; }
  static NamedConstant sqrt3_pi() { return {"sqrt3*pi", sqrt_hp(3) * pi_hp()}; }
  static NamedConstant sqrt5() { return {"sqrt5", sqrt_hp(5)}; }
  static NamedConstant alpha() { return {"alpha", alpha_hp()}; }
  static NamedConstant omega() { return {"omega", boost::multiprecision::sqrt(sqrt_hp(5) * alpha_hp())}; }
  static NamedConstant pi_omega() { return pi().times(omega()); }
  static NamedConstant ln_alpha() { return {"ln(alpha)", boost::multiprecision::log(alpha_hp())}; }
  static NamedConstant sqrt5_ln_alpha() { return sqrt5().times(ln_alpha()); }
  static NamedConstant sqrt3_ln_2_minus_sqrt3() {
    return {"sqrt3*ln(2-sqrt3)", sqrt_hp(3) * boost::multiprecision::log(2 - sqrt_hp(3))};
  }

  /// arctan(beta^r), beta = (1 - sqrt5)/2; beta^r is formed as (-1)^r / alpha^r.
  static NamedConstant arctan_beta_pow(int r) {
    HighPrec br = 1 / boost::multiprecision::pow(alpha_hp(), r);
    if (r % 2 != 0) br = -br;
    return {"atan(beta^" + std::to_string(r) + ")", boost::multiprecision::atan(br)};
  }

  static NamedConstant ln_custom(const std::string& label, HighPrec value) {
    return {"ln(" + label + ")", std::move(value)};
  }

  static NamedConstant custom(std::string key, HighPrec value) { return {std::move(key), std::move(value)}; }

 private:
  std::string key_;
  HighPrec value_;
};

class ClosedValue {
 public:
  struct Term {
    BigRational coefficient;
    NamedConstant constant;
  };

  ClosedValue() = default;

  static ClosedValue rational(const BigRational& q) {
    ClosedValue v;
    v.add(q, NamedConstant::one());
    return v;
  }

  /// Adds c*k, merging with an existing term of the same key; zero terms vanish.
  ClosedValue& add(const BigRational& c, const NamedConstant& k) {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), k.key(),
                               [](const Term& t, const std::string& key) { return t.constant.key() < key; });
    if (it != terms_.end() && it->constant.key() == k.key()) {
      it->coefficient += c;
      if (it->coefficient == 0) terms_.erase(it);
    } else if (c != 0) {
      terms_.insert(it, Term{c, k});
    }
    refresh();
    return *this;
  }

  /// Adds (a + b alpha) * k as a*k + b*(alpha k).
  ClosedValue& add(const GoldenRational& c, const NamedConstant& k) {
    add(c.rational_part(), k);
    return add(c.alpha_part(), NamedConstant::alpha().times(k));
  }

  const std::vector<Term>& terms() const { return terms_; }

  BigRational coefficient(const std::string& key) const {
    for (const auto& t : terms_)
      if (t.constant.key() == key) return t.coefficient;
    return 0;
  }

  double value() const { return value_; }

  HighPrec precise_value() const {
    HighPrec acc = 0;
    for (const auto& t : terms_) acc += HighPrec(t.coefficient) * t.constant.precise();
    return acc;
  }

  ClosedValue& operator+=(const ClosedValue& o) {
    for (const auto& t : o.terms_) add(t.coefficient, t.constant);
    return *this;
  }
  ClosedValue& operator-=(const ClosedValue& o) {
    for (const auto& t : o.terms_) add(-t.coefficient, t.constant);
    return *this;
  }
  ClosedValue& operator*=(const BigRational& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& t : terms_) t.coefficient *= s;
    }
    refresh();
    return *this;
  }

  friend ClosedValue operator+(ClosedValue a, const ClosedValue& b) { return a += b; }
  friend ClosedValue operator-(ClosedValue a, const ClosedValue& b) { return a -= b; }
  friend ClosedValue operator*(ClosedValue a, const BigRational& s) { return a *= s; }
  friend ClosedValue operator*(const BigRational& s, ClosedValue a) { return a *= s; }

  /// Structural equality: same keys with identical coefficients.
  friend bool operator==(const ClosedValue& a, const ClosedValue& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (a.terms_[i].constant.key() != b.terms_[i].constant.key()) return false;
      if (a.terms_[i].coefficient != b.terms_[i].coefficient) return false;
    }
    return true;
  }

  bool is_zero() const { return terms_.empty(); }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& t : terms_) {
      std::string c = csl::to_string(t.coefficient);
      if (!s.empty()) {
        if (c.front() == '-') {
          s += " - ";
          c.erase(0, 1);
        } else {
          s += " + ";
        }
      }
      s += c;
      if (t.constant.key() != "1") s += "*" + t.constant.key();
    }
    return s;
  }

 private:
  void refresh() { value_ = precise_value().convert_to<double>(); }

  std::vector<Term> terms_;
  double value_ = 0.0;
};

}  // namespace csl
