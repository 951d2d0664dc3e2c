#pragma once

// Exact integers and rationals, plus the combinatorial sequences the rest of
// the library consumes. Tables are append-only and guarded by a mutex, so the
// free functions below are safe to call from several threads.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <mutex>
#include <string>
#include <vector>

namespace csl {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// 50 significant digits; used for named constants and series accumulation.
using HighPrec = boost::multiprecision::cpp_bin_float_50;

inline BigRational make_rational(long long num, long long den = 1) {
  if (den < 0) return BigRational(-BigInt(num), -BigInt(den));
  return BigRational(BigInt(num), BigInt(den));
}

/// "num/den", or "num" when the denominator is one.
inline std::string to_string(const BigRational& q) {
  const BigInt& d = boost::multiprecision::denominator(q);
  std::string s = boost::multiprecision::numerator(q).str();
  if (d != 1) s += "/" + d.str();
  return s;
}

inline double to_double(const BigRational& q) { return q.convert_to<double>(); }

enum class SequenceKind { Catalan, Factorial, Fibonacci, Lucas };

/// Memoized non-negative-index values of one integer sequence.
class SequenceTable {
 public:
  explicit SequenceTable(SequenceKind kind) : kind_(kind) {
    switch (kind_) {
      case SequenceKind::Catalan:
      case SequenceKind::Factorial:
        values_ = {BigInt(1)};
        break;
      case SequenceKind::Fibonacci:
        values_ = {BigInt(0), BigInt(1)};
        break;
      case SequenceKind::Lucas:
        values_ = {BigInt(2), BigInt(1)};
        break;
    }
  }

  SequenceTable(const SequenceTable&) = delete;
  SequenceTable& operator=(const SequenceTable&) = delete;

  SequenceKind kind() const { return kind_; }

  BigInt at(std::size_t n) {
    std::lock_guard<std::mutex> lock(mutex_);
    while (values_.size() <= n) extend();
    return values_[n];
  }

  std::size_t cached() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return values_.size();
  }

 private:
  void extend() {
    const std::size_t n = values_.size();
    switch (kind_) {
      case SequenceKind::Catalan:
        // (n+1) C_n = 2(2n-1) C_{n-1}
        values_.push_back(BigInt(2 * (2 * n - 1)) * values_[n - 1] / (n + 1));
        break;
      case SequenceKind::Factorial:
        values_.push_back(values_[n - 1] * n);
        break;
      case SequenceKind::Fibonacci:
      case SequenceKind::Lucas:
        values_.push_back(values_[n - 1] + values_[n - 2]);
        break;
    }
  }

  SequenceKind kind_;
  mutable std::mutex mutex_;
  std::vector<BigInt> values_;
};

namespace detail {

inline SequenceTable& table(SequenceKind kind) {
  static SequenceTable catalan(SequenceKind::Catalan);
  static SequenceTable factorial(SequenceKind::Factorial);
  static SequenceTable fibonacci(SequenceKind::Fibonacci);
  static SequenceTable lucas(SequenceKind::Lucas);
  switch (kind) {
    case SequenceKind::Catalan: return catalan;
    case SequenceKind::Factorial: return factorial;
    case SequenceKind::Fibonacci: return fibonacci;
    case SequenceKind::Lucas: break;
  }
  return lucas;
}

}  // namespace detail

inline BigInt catalan(std::size_t n) { return detail::table(SequenceKind::Catalan).at(n); }

inline BigInt factorial(std::size_t n) { return detail::table(SequenceKind::Factorial).at(n); }

/// C(n, k); zero outside 0 <= k <= n.
inline BigInt binomial(std::size_t n, std::int64_t k) {
  if (k < 0 || static_cast<std::size_t>(k) > n) return 0;
  const auto kk = static_cast<std::size_t>(k);
  return factorial(n) / (factorial(kk) * factorial(n - kk));
}

/// F_n for any integer n; negative indices use F_{-n} = (-1)^{n+1} F_n.
inline BigInt fibonacci(std::int64_t n) {
  if (n >= 0) return detail::table(SequenceKind::Fibonacci).at(static_cast<std::size_t>(n));
  const auto k = static_cast<std::size_t>(-n);
  BigInt v = detail::table(SequenceKind::Fibonacci).at(k);
  return (k % 2 == 1) ? v : BigInt(-v);
}

/// L_n for any integer n; negative indices use L_{-n} = (-1)^n L_n.
inline BigInt lucas(std::int64_t n) {
  if (n >= 0) return detail::table(SequenceKind::Lucas).at(static_cast<std::size_t>(n));
  const auto k = static_cast<std::size_t>(-n);
  BigInt v = detail::table(SequenceKind::Lucas).at(k);
  return (k % 2 == 0) ? v : BigInt(-v);
}

namespace detail {

class StirlingTriangle {
 public:
  BigInt at(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::lock_guard<std::mutex> lock(mutex_);
    while (rows_.size() <= n) {
      const std::size_t r = rows_.size();
      std::vector<BigInt> row(r + 1);
      if (r == 0) {
        row[0] = 1;
      } else {
        const auto& prev = rows_[r - 1];
        row[0] = 0;
        for (std::size_t j = 1; j <= r; ++j) {
          BigInt carry = (j <= r - 1) ? BigInt(j) * prev[j] : BigInt(0);
          row[j] = carry + prev[j - 1];
        }
      }
      rows_.push_back(std::move(row));
    }
    return rows_[n][k];
  }

 private:
  std::mutex mutex_;
  std::vector<std::vector<BigInt>> rows_;
};

inline StirlingTriangle& stirling_triangle() {
  static StirlingTriangle t;
  return t;
}

}  // namespace detail

/// Stirling number of the second kind from S(n,k) = k S(n-1,k) + S(n-1,k-1).
inline BigInt stirling2(std::size_t n, std::size_t k) {
  return detail::stirling_triangle().at(n, k);
}

/// Exact check of sum_j (-1)^j S(m+1, m+1-j) (n+m-j)! == n^m n!.
inline bool mellin_lemma_check(std::size_t m, std::size_t n) {
  BigInt lhs = 0;
  for (std::size_t j = 0; j <= m; ++j) {
    BigInt term = stirling2(m + 1, m + 1 - j) * factorial(n + m - j);
    if (j % 2 == 0)
      lhs += term;
    else
      lhs -= term;
  }
  BigInt rhs = boost::multiprecision::pow(BigInt(n), static_cast<unsigned>(m)) * factorial(n);
  return lhs == rhs;
}

}  // namespace csl
