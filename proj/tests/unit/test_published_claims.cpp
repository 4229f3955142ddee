// Published statements checked as written. Each case is registered as its own ctest entry.
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "nfftlab/bounds.hpp"
#include "nfftlab/error_analysis.hpp"
#include "nfftlab/specialfn.hpp"
#include "nfftlab/window.hpp"

using namespace nfftlab;
constexpr double kPi = std::numbers::pi;

namespace {
// max over sigma in [5/4, 2] (step 1/64, N = 512) and m in 2..50 of
// pi b(m, sigma)(1 - 1/(2 sigma)) - slope * m.
double b0_needed(double slope) {
  double worst = -1e300;
  for (int j = 0; j <= 48; ++j) {
    const double sigma = 1.25 + j / 64.0;
    for (int m = 2; m <= 50; ++m) {
      const auto p = WindowParams::make(m, sigma, 512);
      worst = std::max(worst, kPi * b_const(p) * (1.0 - 0.5 / sigma) - slope * m);
    }
  }
  return worst;
}
}  // namespace

TEST_CASE("b0 below 17 with slope 3 pi^2 / 2") {
  const double b0 = b0_needed(1.5 * kPi * kPi);
  MESSAGE("needed b0 = " << b0);
  CHECK(b0 < 17.0);
}

TEST_CASE("b0 below 17 with slope 15") {
  const double b0 = b0_needed(15.0);
  MESSAGE("needed b0 = " << b0);
  CHECK(b0 < 17.0);
}

TEST_CASE("Rect constant inside the bracket on the sigma grid") {
  for (double sigma : {1.25, 1.5, 2.0}) {
    const auto e = error_constant(Window(WindowKind::Rect, WindowParams::make(2, sigma, 128)));
    MESSAGE("sigma = " << sigma << " e_rect = " << e.value);
    CHECK(e.value > kRectLow);
    CHECK(e.value < kRectHigh);
  }
}

TEST_CASE("I1 above two fifths x^-1/2 e^x from x0 on") {
  const double x0 = 4.0 * kPi / std::sqrt(5.0);
  for (int i = 0; i <= 200; ++i) {
    const double x = x0 + 0.25 * i;
    CHECK(bessel_i1(x) > 0.4 / std::sqrt(x) * std::exp(x));
  }
}

TEST_CASE("transform lower bounds at N/2 as printed") {
  for (double sigma : {1.25, 1.5, 2.0}) {
    for (int m = 2; m <= 6; ++m) {
      const auto p = WindowParams::make(m, sigma, 64);
      const double h = p.N / 2.0;
      CHECK(Window(WindowKind::Sinh, p).ft(h) >= sinh_ft_lower_bound(p));
      CHECK(Window(WindowKind::CExp, p).ft(h) >= cexp_ft_lower_bound(p));
      CHECK(Window(WindowKind::Exp, p).ft(h) >= exp_ft_lower_bound(p));
      CHECK(Window(WindowKind::CCosh, p).ft(h) >= ccosh_ft_lower_bound(p));
    }
  }
}
