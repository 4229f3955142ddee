#include "nfftlab/nfft.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace nfftlab {
namespace {

void require_matching_size(const NfftPlan& plan, const SpectralCoefficients& c) {
  if (c.N() != plan.params().N) {
    throw std::invalid_argument("coefficient length does not match plan N");
  }
}

}  // namespace

SpectralCoefficients::SpectralCoefficients(int N) {
  if (N <= 0 || N % 2 != 0) throw std::invalid_argument("SpectralCoefficients: N must be even");
  values.assign(static_cast<std::size_t>(N), Complex{});
}

Complex& SpectralCoefficients::at(int k) {
  return values.at(static_cast<std::size_t>(k + N() / 2));
}

const Complex& SpectralCoefficients::at(int k) const {
  return values.at(static_cast<std::size_t>(k + N() / 2));
}

double SpectralCoefficients::l1_norm() const {
  double sum = 0.0;
  for (const auto& z : values) sum += std::abs(z);
  return sum;
}

NodeSet NodeSet::make(std::vector<double> nodes) {
  for (double x : nodes) {
    if (!(x >= -0.5 && x < 0.5)) throw std::invalid_argument("NodeSet: node outside [-1/2, 1/2)");
  }
  return NodeSet{std::move(nodes)};
}

SpectralCoefficients random_coefficients(int N, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  SpectralCoefficients c(N);
  for (auto& z : c.values) {
    const double re = dist(rng);
    const double im = dist(rng);
    z = Complex(re, im);
  }
  return c;
}

NodeSet random_nodes(std::size_t M, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-0.5, 0.5);
  std::vector<double> x(M);
  for (auto& v : x) v = dist(rng);
  return NodeSet::make(std::move(x));
}

NfftPlan::NfftPlan(const Window& window, NodeSet nodes)
    : window_(window), nodes_(std::move(nodes)) {
  const int N = window_.params().N;
  phi_hat_.resize(static_cast<std::size_t>(N));
  const bool need_positive = is_continuous(window_.kind());
  // Zeros of the jump kinds come out as rounding noise, so they are caught relative to phi_hat(0).
  const double floor = 1e-12 * std::fabs(window_.ft(0.0));
  for (int k = -N / 2; k < N / 2; ++k) {
    const double v = window_.ft(static_cast<double>(k));
    if (need_positive ? !(v > 0.0) : !(std::fabs(v) > floor)) {
      throw std::domain_error("NfftPlan: window transform vanishes or changes sign on I_N");
    }
    phi_hat_[static_cast<std::size_t>(k + N / 2)] = v;
  }
}

std::vector<Complex> ndft_direct(const SpectralCoefficients& c, const NodeSet& nodes) {
  const int N = c.N();
  std::vector<Complex> out(nodes.size());
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    Complex sum{};
    for (int k = -N / 2; k < N / 2; ++k) {
      const double angle = 2.0 * std::numbers::pi * k * nodes.nodes[j];
      sum += c.at(k) * Complex(std::cos(angle), std::sin(angle));
    }
    out[j] = sum;
  }
  return out;
}

std::vector<Complex> fft_inverse_scaled(const NfftPlan& plan, const SpectralCoefficients& c) {
  require_matching_size(plan, c);
  const int N = plan.params().N;
  const int N1 = plan.params().N1;
  std::vector<Complex> spectrum(static_cast<std::size_t>(N1), Complex{});
  const auto& table = plan.phi_hat_table();
  for (int k = -N / 2; k < N / 2; ++k) {
    const std::size_t pos = static_cast<std::size_t>(k + N / 2);
    spectrum[static_cast<std::size_t>((k + N1) % N1)] = c.values[pos] / table[pos];
  }
  fft_inplace(spectrum, true);
  std::vector<Complex> g(static_cast<std::size_t>(N1));
  const double scale = 1.0 / N1;
  for (int l = -N1 / 2; l < N1 / 2; ++l) {
    g[static_cast<std::size_t>(l + N1 / 2)] = spectrum[static_cast<std::size_t>((l + N1) % N1)] * scale;
  }
  return g;
}

std::vector<Complex> nfft_transform(const NfftPlan& plan, const SpectralCoefficients& c) {
  const std::vector<Complex> g = fft_inverse_scaled(plan, c);
  const int N1 = plan.params().N1;
  const int m = plan.params().m;
  const Window& window = plan.window();
  const auto& x = plan.nodes().nodes;
  std::vector<Complex> s(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    const double scaled = N1 * x[j];
    const long lo = static_cast<long>(std::ceil(scaled - m));
    const long hi = static_cast<long>(std::floor(scaled + m));
    Complex sum{};
    for (long l = lo; l <= hi; ++l) {
      const double weight = window.value((scaled - static_cast<double>(l)) / N1);
      const long wrapped = ((l % N1) + N1 + N1 / 2) % N1;  // position of l mod N1 in I_N1
      sum += g[static_cast<std::size_t>(wrapped)] * weight;
    }
    s[j] = sum;
  }
  return s;
}

double measured_error(const NfftPlan& plan, const SpectralCoefficients& c) {
  const std::vector<Complex> s = nfft_transform(plan, c);
  const std::vector<Complex> p = ndft_direct(c, plan.nodes());
  double worst = 0.0;
  for (std::size_t j = 0; j < s.size(); ++j) worst = std::max(worst, std::abs(s[j] - p[j]));
  return worst;
}

}  // namespace nfftlab
