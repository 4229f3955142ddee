#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <string_view>

#include "nfftlab/quadrature.hpp"

namespace nfftlab {

enum class WindowKind { Rect, CKB, KB, Sinh, CExp, Exp, CCosh };
enum class FtStrategy { Analytic, Quadrature, Split };

inline constexpr std::array<WindowKind, 7> kAllWindowKinds = {
    WindowKind::Rect, WindowKind::CKB, WindowKind::KB,   WindowKind::Sinh,
    WindowKind::CExp, WindowKind::Exp, WindowKind::CCosh};

// Lower-case identifiers used on the command line and in reports: rect, ckb, kb, sinh, cexp, exp, ccosh.
std::string_view to_string(WindowKind kind);
std::string_view to_string(FtStrategy strategy);
// Throws std::invalid_argument for unknown names.
WindowKind parse_window_kind(std::string_view name);

// Continuous, decreasing, positive-transform kinds; Rect, KB and Exp jump at the support edge.
bool is_continuous(WindowKind kind);

struct WindowParams {
  int m = 0;
  double sigma = 0.0;
  int N = 0;
  int N1 = 0;
  double b = 0.0;
  double beta = 0.0;
  double support_half_width = 0.0;

  // Validates m >= 2, sigma >= 5/4, N even and >= 8, sigma*N an even integer, 2m <= N1/4.
  // Throws std::invalid_argument otherwise.
  static WindowParams make(int m, double sigma, int N);
};

// Tolerances used for window transforms computed by quadrature.
QuadratureConfig transform_quadrature_config();

class Window {
 public:
  // CExp and CCosh default to Quadrature; Exp composes CExp with Rect and follows the given
  // strategy for its CExp part. Analytic kinds reject non-Analytic strategies.
  Window(WindowKind kind, const WindowParams& params,
         std::optional<FtStrategy> strategy = std::nullopt);

  WindowKind kind() const noexcept { return kind_; }
  const WindowParams& params() const noexcept { return params_; }
  FtStrategy ft_strategy() const noexcept { return strategy_; }

  // phi(x), including the midpoint value at x = +-m/N1 for the jump kinds.
  double value(double x) const;
  // phi restricted to the open support as a function of s = sqrt(1 - (N1 x / m)^2).
  double profile(double s) const;
  // Fourier transform int phi(x) e^{-2 pi i v x} dx.
  double ft(double v) const;
  // Same transform by direct quadrature of the cosine integral, for any kind.
  double ft_quadrature(double v) const;

  // psi + rho split of CExp and CCosh; other kinds throw std::logic_error.
  double psi_value(double x) const;
  double rho_value(double x) const;
  double psi_ft(double v) const;
  double rho_ft(double v) const;
  // sup |rho| over the support.
  double rho_bound() const;

 private:
  double scaled_frequency(double v) const;
  double split_scale() const;
  void require_split(const char* who) const;
  double cexp_ft(double w) const;

  WindowKind kind_;
  WindowParams params_;
  FtStrategy strategy_;
  double i0_beta_ = 0.0;
  double sinh_beta_ = 0.0;
  double expm1_beta_ = 0.0;
  double coshm1_beta_ = 0.0;
  double exp_minus_beta_ = 0.0;
};

// R(d) with d = beta^2 - w^2: I1(sqrt d)/sqrt d, 1/2 at d = 0, J1(sqrt(-d))/sqrt(-d).
// (pi beta / 2) R is the cosine transform over [0, 1] of sinh(beta sqrt(1 - t^2)).
double sinh_kernel(double beta, double w);
// sinh(sqrt d)/sqrt d for d > 0 and sinc(sqrt(-d)) for d < 0.
double kb_kernel(double beta, double w);

// I(w) = int_{-1}^{1} (e^{-beta sqrt(1-t^2)} - 1) e^{i w t} dt by quadrature.
std::complex<double> contour_integral_I(const WindowParams& params, double w);

}  // namespace nfftlab
