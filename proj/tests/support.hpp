#pragma once

#include <cmath>

namespace testing_support {

inline double rel_err(double x, double ref) { return std::fabs(x - ref) / std::fabs(ref); }

// |x - ref| below one unit in the last of `digits` significant digits of ref.
inline bool agrees_to_digits(double x, double ref, int digits) {
  const double unit = std::pow(10.0, std::floor(std::log10(std::fabs(ref))) - (digits - 1));
  return std::fabs(x - ref) < unit;
}

}  // namespace testing_support
