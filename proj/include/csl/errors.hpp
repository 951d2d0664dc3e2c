#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

namespace csl {

/// Argument outside the region where a representation is valid.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A truncated sum or quadrature did not reach its error budget.
class NotConverged : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string fmt_double(double v, int digits = 17) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

}  // namespace detail
}  // namespace csl
