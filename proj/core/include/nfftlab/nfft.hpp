#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "nfftlab/fft.hpp"
#include "nfftlab/window.hpp"

namespace nfftlab {

// Coefficients c_k for k in I_N = {-N/2, ..., N/2 - 1}, stored at position k + N/2.
struct SpectralCoefficients {
  std::vector<Complex> values;

  explicit SpectralCoefficients(int N);
  int N() const noexcept { return static_cast<int>(values.size()); }
  Complex& at(int k);
  const Complex& at(int k) const;
  double l1_norm() const;
};

// Nodes x_j in [-1/2, 1/2).
struct NodeSet {
  std::vector<double> nodes;

  // Throws std::invalid_argument for nodes outside [-1/2, 1/2).
  static NodeSet make(std::vector<double> nodes);
  std::size_t size() const noexcept { return nodes.size(); }
};

SpectralCoefficients random_coefficients(int N, std::uint64_t seed);
NodeSet random_nodes(std::size_t M, std::uint64_t seed);

class NfftPlan {
 public:
  // Tabulates phi_hat(k) for k in I_N. Continuous kinds need phi_hat > 0 there; the jump
  // kinds need |phi_hat| > 1e-12 phi_hat(0). Throws std::domain_error otherwise.
  NfftPlan(const Window& window, NodeSet nodes);

  const WindowParams& params() const noexcept { return window_.params(); }
  const Window& window() const noexcept { return window_; }
  const NodeSet& nodes() const noexcept { return nodes_; }
  // phi_hat(k) at position k + N/2.
  const std::vector<double>& phi_hat_table() const noexcept { return phi_hat_; }

 private:
  Window window_;
  NodeSet nodes_;
  std::vector<double> phi_hat_;
};

// p(x_j) = sum_{k in I_N} c_k e^{2 pi i k x_j}, ascending k.
std::vector<Complex> ndft_direct(const SpectralCoefficients& c, const NodeSet& nodes);

// g_l for l in I_N1 at position l + N1/2.
std::vector<Complex> fft_inverse_scaled(const NfftPlan& plan, const SpectralCoefficients& c);

// s(x_j) = sum_l g_l phi~(x_j - l/N1) over the at most 2m+1 grid points in the support.
std::vector<Complex> nfft_transform(const NfftPlan& plan, const SpectralCoefficients& c);

// max_j |s(x_j) - p(x_j)| with p from ndft_direct.
double measured_error(const NfftPlan& plan, const SpectralCoefficients& c);

}  // namespace nfftlab
