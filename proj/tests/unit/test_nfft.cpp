#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "nfftlab/error_analysis.hpp"
#include "nfftlab/fft.hpp"
#include "nfftlab/nfft.hpp"
#include "oracles/oracles.hpp"

using namespace nfftlab;
constexpr double kPi = std::numbers::pi;

namespace {

double max_abs_diff(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

double max_abs(const std::vector<Complex>& a) {
  double d = 0.0;
  for (const auto& z : a) d = std::max(d, std::abs(z));
  return d;
}

std::vector<Complex> naive_dft(const std::vector<Complex>& x, bool inverse) {
  const std::size_t n = x.size();
  std::vector<Complex> out(n);
  const double sign = inverse ? 1.0 : -1.0;
  for (std::size_t k = 0; k < n; ++k) {
    Complex s = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double t = static_cast<double>((j * k) % n) / static_cast<double>(n);
      s += x[j] * std::polar(1.0, sign * 2.0 * kPi * t);
    }
    out[k] = s;
  }
  return out;
}

}  // namespace

TEST_CASE("FFT matches the naive DFT and round-trips") {
  for (int n : {1, 2, 8, 64, 80, 96, 100, 160, 1024}) {
    const auto c = random_coefficients(n % 2 == 0 ? n : n + 1, 11);
    std::vector<Complex> x(c.values.begin(), c.values.begin() + n);
    const auto f = fft_forward(x);
    CHECK(max_abs_diff(f, naive_dft(x, false)) <= 1e-12 * max_abs(f));
    CHECK(max_abs_diff(fft_inverse(f), x) <= 1e-13);
    auto y = x;
    fft_inplace(y, true);
    CHECK(max_abs_diff(y, naive_dft(x, true)) <= 1e-12 * max_abs(y));
  }
}

TEST_CASE("FFT of a delta is all ones") {
  for (int n : {128, 80}) {
    std::vector<Complex> d(static_cast<std::size_t>(n), 0.0);
    d[0] = 1.0;
    for (const auto& z : fft_forward(d)) CHECK(std::abs(z - Complex(1.0, 0.0)) <= 1e-15);
  }
}

TEST_CASE("ndft_direct examples") {
  const auto nodes = random_nodes(7, 3);
  SpectralCoefficients delta(16);
  delta.at(0) = 1.0;
  for (const auto& z : ndft_direct(delta, nodes)) CHECK(z == Complex(1.0, 0.0));

  const auto c = random_coefficients(16, 42);
  Complex sum = 0.0;
  for (const auto& z : c.values) sum += z;
  const auto at0 = ndft_direct(c, NodeSet::make({0.0}));
  CHECK(std::abs(at0[0] - sum) == 0.0);

  const auto direct = ndft_direct(c, nodes);
  const auto dup = oracle::ndft_duplicate(c, nodes.nodes);
  for (std::size_t j = 0; j < direct.size(); ++j) CHECK(direct[j] == dup[j]);
  CHECK(max_abs_diff(direct, oracle::ndft(c, nodes.nodes)) < 1e-13);
}

TEST_CASE("fft_inverse_scaled examples") {
  const auto p = WindowParams::make(2, 2.0, 16);
  const Window w(WindowKind::Sinh, p);
  const NfftPlan plan(w, random_nodes(5, 1));
  const SpectralCoefficients zero(16);
  CHECK(max_abs(fft_inverse_scaled(plan, zero)) == 0.0);

  SpectralCoefficients delta(16);
  delta.at(0) = 1.0;
  const double expected = 1.0 / (p.N1 * w.ft(0.0));
  for (const auto& g : fft_inverse_scaled(plan, delta)) CHECK(std::abs(g - expected) <= 1e-15 * expected);

  const auto c = random_coefficients(16, 5);
  const auto fast = fft_inverse_scaled(plan, c);
  const auto slow = oracle::g_direct(plan, c);
  CHECK(max_abs_diff(fast, slow) <= 1e-12 * max_abs(slow));
}

TEST_CASE("nfft_transform examples") {
  const auto p = WindowParams::make(4, 2.0, 64);
  const Window w(WindowKind::Sinh, p);
  const auto e = error_constant(w);

  const NfftPlan plan(w, random_nodes(1000, 43));
  const SpectralCoefficients zero(64);
  CHECK(max_abs(nfft_transform(plan, zero)) == 0.0);
  CHECK(measured_error(plan, zero) == 0.0);

  std::vector<double> grid;
  for (int j = -p.N1 / 2; j < p.N1 / 2; ++j) grid.push_back(static_cast<double>(j) / p.N1);
  const NfftPlan on_grid(w, NodeSet::make(grid));
  auto c = random_coefficients(64, 42);
  const double l1 = c.l1_norm();
  for (auto& z : c.values) z /= l1;
  CHECK(measured_error(on_grid, c) <= (e.value + e.tail_slack) * c.l1_norm());
  CHECK(measured_error(plan, c) <= (e.value + e.tail_slack) * c.l1_norm());

  SpectralCoefficients delta(64);
  delta.at(0) = 1.0;
  CHECK(measured_error(plan, delta) <= e.value + e.tail_slack);

  auto rotated = c;
  for (auto& z : rotated.values) z *= std::polar(1.0, 0.7);
  CHECK(std::fabs(measured_error(plan, rotated) - measured_error(plan, c)) <=
        1e-15 * c.l1_norm());
}

TEST_CASE("maximal m approaches the NDFT") {
  const auto p = WindowParams::make(8, 2.0, 32);
  const auto c = random_coefficients(32, 9);
  for (auto k : {WindowKind::CKB, WindowKind::KB, WindowKind::Sinh}) {
    const NfftPlan plan(Window(k, p), random_nodes(200, 10));
    CHECK(measured_error(plan, c) < 1e-9 * c.l1_norm());
  }
}

TEST_CASE("error decreases with m") {
  const auto c = random_coefficients(64, 21);
  const auto nodes = random_nodes(400, 22);
  for (auto k : {WindowKind::CKB, WindowKind::KB, WindowKind::Sinh, WindowKind::CExp,
                 WindowKind::Exp, WindowKind::CCosh}) {
    double prev = 1e300;
    for (int m = 2; m <= 6; ++m) {
      const NfftPlan plan(Window(k, WindowParams::make(m, 2.0, 64)), nodes);
      const double err = measured_error(plan, c);
      CHECK(err < prev);
      prev = err;
    }
  }
}

TEST_CASE("plan and node validation") {
  CHECK_THROWS_AS(NodeSet::make({0.5}), std::invalid_argument);
  CHECK_THROWS_AS(NodeSet::make({-0.51}), std::invalid_argument);
  CHECK_THROWS_AS(SpectralCoefficients(7), std::invalid_argument);
  // Rect at m = 4, sigma = 2, N = 64 vanishes at n = 16.
  CHECK_THROWS_AS(NfftPlan(Window(WindowKind::Rect, WindowParams::make(4, 2.0, 64)), random_nodes(3, 1)),
                  std::domain_error);
  const NfftPlan plan(Window(WindowKind::Sinh, WindowParams::make(2, 2.0, 16)), random_nodes(3, 1));
  CHECK_THROWS_AS(nfft_transform(plan, SpectralCoefficients(32)), std::invalid_argument);
}
