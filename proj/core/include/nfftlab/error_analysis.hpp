#pragma once

#include <complex>
#include <string_view>
#include <vector>

#include "nfftlab/window.hpp"

namespace nfftlab {

// Poisson evaluates the aliasing series exactly through its finite dual form
//   sum_r phi_hat(n + r N1) e^{2 pi i r N1 x} = (1/N1) sum_l phi(x + l/N1) e^{-2 pi i n (x + l/N1)},
// where only the 2m + 1 shifts inside the support contribute. Series truncates at r_max and
// reports a bound on the dropped terms as tail_slack.
enum class EstimatorMethod { Poisson, Series };
std::string_view to_string(EstimatorMethod method);
// Throws std::invalid_argument for names other than "poisson" and "series".
EstimatorMethod parse_estimator_method(std::string_view name);

struct EstimatorConfig {
  int r_max = 64;     // Series: aliasing series truncated at |r| <= r_max
  int x_grid = 2048;  // samples per period 1/N1
  bool refine = true; // golden-section search around the grid maximum
  EstimatorMethod method = EstimatorMethod::Poisson;

  // Throws std::invalid_argument unless r_max >= 8 and x_grid >= 256.
  void validate() const;
};

struct ErrorConstantEstimate {
  double value = 0.0;
  int n_argmax = 0;
  double x_argmax = 0.0;   // in [0, 1/N1)
  // Series: bound on the dropped |r| > r_max terms relative to phi_hat(n).
  // Poisson: rounding and transform-accuracy allowance.
  double tail_slack = 0.0;
  EstimatorConfig config;
};

// sum_{0<|r|<=r_max} phi_hat(n + r N1)/phi_hat(n) e^{2 pi i r N1 x}, pairing +r and -r.
// For Rect the ratio is taken as n/(n + r N1), its value wherever phi_hat_rect(n) != 0.
std::complex<double> aliasing_function(const Window& window, int n, double x,
                                       const EstimatorConfig& cfg = {});

// The same series without truncation, from the dual form; x anywhere in R. At a support edge the
// jump kinds take their midpoint value, matching the pointwise limit of the series.
std::complex<double> aliasing_function_exact(const Window& window, int n, double x);

// Upper bound on |sum_{|r|>r_max} phi_hat(n + r N1) e^{2 pi i r y}| divided by |phi_hat(n)|.
double aliasing_tail_slack(const Window& window, int n, int r_max);

// Bounds on sum_{|r|>r_max} |f(n + r N1)| for the transform pieces, from their decay envelopes.
// coeff * (pi beta/2) R(beta^2 - w^2) type terms, e.g. psi_hat or the sinh transform.
double sinh_like_tail(const WindowParams& p, double coeff, int n, int r_max);
// coeff * (2m/N1) (sinc sqrt(w^2 - beta^2) - sinc w), the cKB transform shape.
double kb_difference_tail(const WindowParams& p, double coeff, int n, int r_max);
// coeff * I(w), the rho_hat shape, via the contour bound on |I(w)|.
double rho_contour_tail(const WindowParams& p, double coeff, int n, int r_max);
// |sum_{|r|>r_max} phi_hat_rect(n + r N1) e^{2 pi i r y}| for all y.
double rect_oscillating_tail(const WindowParams& p, int n, int r_max);

// sup over y in [0, 1) of |sum_{r=1}^{R} plus[r-1] e^{2 pi i r y} + minus[r-1] e^{-2 pi i r y}|
// on a uniform grid of x_grid points, optionally refined by golden-section search.
struct TrigSup {
  double value = 0.0;
  double y_argmax = 0.0;
};
TrigSup trig_sup(const std::vector<double>& plus, const std::vector<double>& minus, int x_grid,
                 bool refine);

// max over n in {-N/2, 0, ..., N/2-1} of sup_x |aliasing function|, by the configured method.
// The jump kinds also contribute their one-sided limits at x = 0.
// Rect is evaluated exactly from rect_aliasing_sup with zero tail slack.
// Throws std::domain_error if phi_hat(n) <= 0 at a scanned n.
ErrorConstantEstimate error_constant(const Window& window, const EstimatorConfig& cfg = {});

struct RectBracket {
  double low = 0.0;   // 1/2 - 1/pi
  double high = 0.0;  // 1/2 + pi/4
  ErrorConstantEstimate estimate;
};

// Estimates the Rect constant and throws std::runtime_error if it leaves [low, high]
// by more than its tail slack.
RectBracket error_constant_rect_bracket(const WindowParams& params, const EstimatorConfig& cfg = {});

// Closed form of the untruncated Rect aliasing series with u = n/N1:
// 2 pi i u (1 - e^{-2 pi i u})^{-1} e^{-2 pi i n x} - 1, valid for 0 < |n| < N1, 0 < N1 x < 1.
std::complex<double> rect_aliasing_closed_form(const WindowParams& params, int n, double x);
// sup over 0 < N1 x < 1 of |rect_aliasing_closed_form|, approached as N1 x -> 0; 0 for n = 0.
double rect_aliasing_sup(const WindowParams& params, int n);

}  // namespace nfftlab
