#pragma once

#include <numbers>
#include <optional>
#include <vector>

#include "nfftlab/error_analysis.hpp"
#include "nfftlab/window.hpp"

namespace nfftlab {

// gamma(m, sigma) = int_0^1 e^{-beta sqrt(1 - t^2)} dt by quadrature.
double gamma_const(const WindowParams& p);
// The five-term constant b(m, sigma) of the exp/cosh bounds.
double b_const(const WindowParams& p);

struct AuxConstants {
  double gamma = 0.0;
  double b_const = 0.0;
  double S1_bound = 0.0;  // sum |u + r|^{-5/4}
  double S2_bound = 0.0;  // sum e^{-sqrt(2 pi m |u+r|)}/(2 pi m |u+r|)
  double S3_bound = 0.0;  // sum e^{-2 pi m |u+r|}
};
AuxConstants aux_constants(const WindowParams& p);

// Direct values of S1, S2, S3 at n (see AuxConstants) with integral tails added.
struct SeriesValues {
  double S1 = 0.0;
  double S2 = 0.0;
  double S3 = 0.0;
};
SeriesValues s_series(const WindowParams& p, int n);

enum class SeriesFamily { PowerMu, ExpA, ExpSqrtOverX };

struct SeriesCheck {
  double direct = 0.0;  // sum_{r != 0} f(u + r): partial sum plus an upper integral tail
  double bound = 0.0;   // closed form from the summation lemma
  bool holds() const { return direct <= bound; }
};
// f(x) = |x|^{-mu}, e^{-a|x|}, or e^{-sqrt(a|x|)}/(a|x|); u in (-1, 1).
SeriesCheck series_bound_check(SeriesFamily family, double a_or_mu, double u);

// Upper bounds on the error constant e_sigma(phi).
double bound_ckb(const WindowParams& p);
double bound_kb(const WindowParams& p);
double bound_kb_small_sigma(const WindowParams& p);  // 0.06^m form, sigma >= 5/4
double bound_sinh(const WindowParams& p);
double bound_cexp(const WindowParams& p);
double bound_exp(const WindowParams& p);
double bound_ccosh(const WindowParams& p);
// Upper bound for the kinds that have one; nullopt for Rect.
std::optional<double> theorem_bound(WindowKind kind, const WindowParams& p);

// Bracket for the Rect constant.
inline constexpr double kRectLow = 0.5 - 1.0 / std::numbers::pi;
inline constexpr double kRectHigh = 0.5 + std::numbers::pi / 4.0;

// Closed-form lower bounds on phi_hat(N/2).
double ckb_ft_lower_bound(const WindowParams& p);
double kb_ft_lower_bound(const WindowParams& p);
double sinh_ft_lower_bound(const WindowParams& p);
double cexp_ft_lower_bound(const WindowParams& p);
double exp_ft_lower_bound(const WindowParams& p);
// Derived in the >= direction although printed with <=.
double ccosh_ft_lower_bound(const WindowParams& p);

// Closed-form upper bounds on sum_{r != 0} |f(n + r N1)|, uniform in n.
double ckb_alias_sum_bound(const WindowParams& p);
double sinh_alias_sum_bound(const WindowParams& p);
double psi_alias_sum_bound(WindowKind kind, const WindowParams& p);  // CExp or CCosh
double rho_alias_sum_bound(WindowKind kind, const WindowParams& p);  // CExp or CCosh

// |sinc sqrt(w^2 - beta^2) - sinc w| <= 2 beta^2 / w^2 for |w| >= beta.
double sinc_difference_bound(double beta, double w);

// Right-hand side of the contour bound on |I(w)| for |w| >= beta.
double contour_bound(const WindowParams& p, double w);

struct ContourCheck {
  double w = 0.0;
  double abs_I = 0.0;
  double imag_I = 0.0;
  double bound = 0.0;
  bool holds = false;
  double slack_ratio = 0.0;  // bound / |I(w)|
};
// Throws std::invalid_argument if some |w| < beta.
std::vector<ContourCheck> contour_bound_check(const WindowParams& p,
                                              const std::vector<double>& w_samples);

struct RectSumCheck {
  double max_sup = 0.0;  // max_n sup_x |sum_{r != 0} phi_hat_rect(n + r N1) e^{2 pi i r N1 x}|
  double lower = 0.0;    // (1 - 2/pi)(m/N1)|sinc(pi m/sigma)|
  double upper = 0.0;    // 3m/N1
  bool n0_zero = false;  // the n = 0 series vanishes
  bool holds = false;
};
RectSumCheck rect_sum_property_check(const WindowParams& p, const EstimatorConfig& cfg = {});

// Direct truncated sums sum_{0<|r|<=R} |f(n + r N1)| plus the envelope tail, against the
// uniform closed-form bound, for every n in I_N.
struct AliasSumCheck {
  int worst_n = 0;
  double worst_ratio = 0.0;  // max_n (direct + tail) / bound
  bool holds() const { return worst_ratio <= 1.0; }
};
AliasSumCheck check_ckb_alias_sum(const WindowParams& p, int r_max);
AliasSumCheck check_sinh_alias_sum(const WindowParams& p, int r_max);
AliasSumCheck check_psi_alias_sum(WindowKind kind, const WindowParams& p, int r_max);
AliasSumCheck check_rho_alias_sum(WindowKind kind, const WindowParams& p, int r_max);

struct BoundReport {
  WindowKind window = WindowKind::Rect;
  WindowParams params;
  double bound_value = 0.0;  // upper bound; for Rect the bracket top 1/2 + pi/4
  double lower_value = 0.0;  // Rect bracket bottom, else 0
  double estimate = 0.0;
  double tail_slack = 0.0;
  bool dominated = false;    // estimate + tail_slack <= bound (Rect: within the bracket)
  double slack_ratio = 0.0;  // bound / estimate
};
BoundReport make_bound_report(WindowKind kind, const WindowParams& p,
                              const ErrorConstantEstimate& estimate);

}  // namespace nfftlab
