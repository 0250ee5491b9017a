#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace monideal {

/// Exact reduced fraction with positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& q) {
  const auto num = boost::multiprecision::numerator(q);
  const auto den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace monideal
