#include "nfftlab/reference_data.hpp"

namespace nfftlab::reference {

std::string_view to_string(Curve c) {
  switch (c) {
    case Curve::CKB: return "ckb";
    case Curve::KB: return "kb";
    case Curve::Family: return "family";
  }
  return "?";
}

const std::array<FigurePoint, 45>& figure_points() {
  using enum Curve;
  static const std::array<FigurePoint, 45> points{{
      {CKB, 1.25, 2, 3.8755e-2}, {CKB, 1.25, 3, 4.2966e-3}, {CKB, 1.25, 4, 3.1845e-4},
      {CKB, 1.25, 5, 2.3238e-5}, {CKB, 1.25, 6, 1.7344e-6},
      {KB, 1.25, 2, 4.1531e-2},  {KB, 1.25, 3, 3.8784e-3},  {KB, 1.25, 4, 3.2948e-4},
      {KB, 1.25, 5, 2.3238e-5},  {KB, 1.25, 6, 1.6964e-6},
      {Family, 1.25, 2, 6.6976e-2}, {Family, 1.25, 3, 7.1278e-3}, {Family, 1.25, 4, 6.5055e-4},
      {Family, 1.25, 5, 5.4320e-5}, {Family, 1.25, 6, 4.2561e-6},
      {CKB, 1.5, 2, 1.1239e-2}, {CKB, 1.5, 3, 4.2453e-4}, {CKB, 1.5, 4, 1.5936e-5},
      {CKB, 1.5, 5, 4.8191e-7}, {CKB, 1.5, 6, 1.5868e-8},
      {KB, 1.5, 2, 1.2306e-2},  {KB, 1.5, 3, 4.2453e-4},  {KB, 1.5, 4, 1.5444e-5},
      {KB, 1.5, 5, 5.0302e-7},  {KB, 1.5, 6, 1.5868e-8},
      {Family, 1.5, 2, 1.9433e-2}, {Family, 1.5, 3, 8.9016e-4}, {Family, 1.5, 4, 3.5865e-5},
      {Family, 1.5, 5, 1.3237e-6}, {Family, 1.5, 6, 4.5903e-8},
      {CKB, 2.0, 2, 3.1435e-3}, {CKB, 2.0, 3, 4.2916e-5}, {CKB, 2.0, 4, 7.1695e-7},
      {CKB, 2.0, 5, 1.0699e-8}, {CKB, 2.0, 6, 1.5200e-10},
      {KB, 2.0, 2, 3.1539e-3},  {KB, 2.0, 3, 4.4842e-5},  {KB, 2.0, 4, 7.1695e-7},
      {KB, 2.0, 5, 1.0217e-8},  {KB, 2.0, 6, 1.5229e-10},
      {Family, 2.0, 2, 5.1243e-3}, {Family, 2.0, 3, 1.0287e-4}, {Family, 2.0, 4, 1.8467e-6},
      {Family, 2.0, 5, 3.0197e-8}, {Family, 2.0, 6, 4.6553e-10},
  }};
  return points;
}

}  // namespace nfftlab::reference
