#include "nfftlab/specialfn.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace nfftlab {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void require_finite(double x, const char* who) {
  if (!std::isfinite(x)) {
    throw std::domain_error(std::string(who) + ": argument must be finite");
  }
}

// I_nu(x) ~ e^x / sqrt(2 pi x) for large x; reject arguments whose result cannot be represented.
void require_representable(double ax, const char* who) {
  if (ax > 700.0) {
    const double log_value = ax - 0.5 * std::log(2.0 * std::numbers::pi * ax);
    if (log_value >= std::log(std::numeric_limits<double>::max())) {
      throw std::range_error(std::string(who) + ": result overflows double");
    }
  }
}

// Sum of q^k / (k! (k+order)!) for order 0 or 1. Small arguments sum in ascending order;
// large arguments store the terms and add them smallest first to limit rounding.
double modified_bessel_series(double ax, int order) {
  const double q = 0.25 * ax * ax;
  double term = 1.0;
  if (ax <= 15.0) {
    double sum = term;
    for (int k = 1; k < 500; ++k) {
      term *= q / (static_cast<double>(k) * static_cast<double>(k + order));
      sum += term;
      if (term < 0.5 * kEps * sum) break;
    }
    return sum;
  }
  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>(2.0 * ax) + 64);
  terms.push_back(term);
  double running = term;
  for (int k = 1; k < 4000; ++k) {
    term *= q / (static_cast<double>(k) * static_cast<double>(k + order));
    if (!std::isfinite(term)) throw std::range_error("modified Bessel series overflow");
    terms.push_back(term);
    running += term;
    if (term < 0.25 * kEps * running) break;
  }
  double sum = 0.0;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) sum += *it;
  return sum;
}

}  // namespace

double bessel_i0(double x) {
  require_finite(x, "bessel_i0");
  const double ax = std::fabs(x);
  require_representable(ax, "bessel_i0");
  return modified_bessel_series(ax, 0);
}

double bessel_i1(double x) {
  require_finite(x, "bessel_i1");
  const double ax = std::fabs(x);
  require_representable(ax, "bessel_i1");
  const double value = 0.5 * ax * modified_bessel_series(ax, 1);
  if (!std::isfinite(value)) throw std::range_error("bessel_i1: result overflows double");
  return x < 0.0 ? -value : value;
}

double bessel_j1(double x) {
  require_finite(x, "bessel_j1");
  const double ax = std::fabs(x);
  double value = 0.0;
  if (ax <= 12.0) {
    // Alternating series in extended precision; the largest term is about e^12.
    const long double q = 0.25L * static_cast<long double>(ax) * static_cast<long double>(ax);
    long double term = 1.0L;
    long double sum = 1.0L;
    for (int k = 1; k < 200; ++k) {
      term *= -q / (static_cast<long double>(k) * static_cast<long double>(k + 1));
      sum += term;
      if (std::fabs(term) < 1e-22L) break;
    }
    value = static_cast<double>(0.5L * static_cast<long double>(ax) * sum);
  } else {
    // Poisson integral J1(x) = (x/pi) int_0^pi cos(x cos t) sin^2 t dt. The integrand is an
    // even trigonometric polynomial in t up to aliasing of order ~x, so the trapezoid rule with
    // n panels is exact to rounding once 2n comfortably exceeds x.
    const int n = static_cast<int>(std::ceil(0.5 * (ax + 10.0 * std::cbrt(ax) + 40.0)));
    const double h = std::numbers::pi / n;
    double sum = 0.0;
    for (int j = 1; j < n; ++j) {
      const double t = h * j;
      const double s = std::sin(t);
      sum += std::cos(ax * std::cos(t)) * s * s;
    }
    value = ax * sum / n;
  }
  return x < 0.0 ? -value : value;
}

double exp_int_e1(double x) {
  if (!std::isfinite(x) || x <= 0.0) {
    throw std::domain_error("exp_int_e1: argument must be finite and positive");
  }
  if (x < 1.0) {
    // E1(x) = -gamma - ln x - sum_{k>=1} (-x)^k / (k k!)
    double term = 1.0;
    double sum = 0.0;
    for (int k = 1; k < 100; ++k) {
      term *= -x / k;
      const double add = term / k;
      sum += add;
      if (std::fabs(add) < 0.25 * kEps * std::fabs(sum)) break;
    }
    return -std::numbers::egamma - std::log(x) - sum;
  }
  // Continued fraction e^{-x} / (x + 1 - 1/(x + 3 - 4/(x + 5 - ...))) by modified Lentz.
  constexpr double tiny = 1e-300;
  double b = x + 1.0;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 10000; ++i) {
    const double an = -static_cast<double>(i) * static_cast<double>(i);
    b += 2.0;
    d = 1.0 / (an * d + b);
    c = b + an / c;
    const double del = c * d;
    h *= del;
    if (std::fabs(del - 1.0) < kEps) break;
  }
  return h * std::exp(-x);
}

double sinc(double x) {
  require_finite(x, "sinc");
  if (std::fabs(x) < 1e-4) return 1.0 - x * x / 6.0;
  return std::sin(x) / x;
}

}  // namespace nfftlab
