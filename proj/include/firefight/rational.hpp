#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace firefight {

/// Exact rates and thresholds; every pass/fail decision compares these.
using Rational = boost::rational<std::int64_t>;

inline std::string to_string(const Rational& q) {
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

}  // namespace firefight
