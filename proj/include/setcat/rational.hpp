#pragma once

#include <boost/rational.hpp>
#include <string>

namespace setcat {

/// Exact rational arithmetic for the counting measures. Every quantity the
/// library reports is a ratio of integer counts; no floating point appears
/// anywhere, so equality checks need no tolerance.
using Rational = boost::rational<long long>;

inline std::string render(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace setcat
