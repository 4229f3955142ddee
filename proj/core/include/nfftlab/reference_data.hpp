#pragma once

#include <array>
#include <string_view>

namespace nfftlab::reference {

// Published reference values, reproduced here as golden data for regression checks.
// Version tag of this table; bump whenever a value is corrected.
inline constexpr std::string_view kVersion = "1";

inline constexpr std::array<int, 5> kMValues{2, 3, 4, 5, 6};
inline constexpr std::array<double, 3> kSigmaValues{1.25, 1.5, 2.0};

// exp(-beta) at sigma = 2, m = 2..6, three significant digits.
inline constexpr std::array<double, 5> kTable1ExpMinusBeta{8.06e-5, 7.24e-7, 6.51e-9, 5.85e-11,
                                                           5.25e-13};
// gamma(m, 2), m = 2..6, three significant digits.
inline constexpr std::array<double, 5> kTable2Gamma{1.17e-2, 5.08e-3, 2.84e-3, 1.81e-3, 1.25e-3};

enum class Curve { CKB, KB, Family };
std::string_view to_string(Curve c);

struct FigurePoint {
  Curve curve;
  double sigma;
  int m;
  double value;
};

// Plotted error constants, 3 sigma panels x 3 curves x m = 2..6. The Family curve is the
// common sinh/exp/cexp/ccosh curve.
const std::array<FigurePoint, 45>& figure_points();

}  // namespace nfftlab::reference
