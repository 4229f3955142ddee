#include "nfftlab/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "nfftlab/quadrature.hpp"
#include "nfftlab/specialfn.hpp"

namespace nfftlab {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kE = std::numbers::e;

double one_minus_inv_sigma(const WindowParams& p) { return 1.0 - 1.0 / p.sigma; }
double one_minus_half_inv_sigma(const WindowParams& p) { return 1.0 - 0.5 / p.sigma; }
// 2 pi m sqrt(1 - 1/sigma), the argument of the exponential in every bound.
double bound_exponent(const WindowParams& p) {
  return 2.0 * kPi * p.m * std::sqrt(one_minus_inv_sigma(p));
}
double coshm1(double beta) {
  const double sh = std::sinh(0.5 * beta);
  return 2.0 * sh * sh;
}
// sqrt(2 pi m - pi m / sigma)
double s2_argument(const WindowParams& p) {
  return std::sqrt(2.0 * kPi * p.m - kPi * p.m / p.sigma);
}

// The bracket of the rho_hat sum lemma, shared by the exp and cosh variants.
double rho_sum_bracket(const WindowParams& p) {
  const double m = p.m;
  const double sg = p.sigma;
  const double q = s2_argument(p);
  return (1.0 + 1.0 / kE) * p.beta / kPi * std::pow(5.0 / (2.0 * kPi * m), 0.25) *
             (4.0 * sg / (2.0 * sg - 1.0) + 8.0) * std::pow(one_minus_half_inv_sigma(p), -0.25) +
         8.0 * sg / ((2.0 * sg - 1.0) * kPi) * std::exp(-q) + 8.0 / kPi * exp_int_e1(q) +
         (std::exp(-std::sqrt(2.0) * p.beta) + 0.5) * (4.0 * m + 2.0 / kPi) *
             std::exp(-2.0 * kPi * m + kPi * m / sg);
}

double psi_sum_bracket(const WindowParams& p) {
  const double m = p.m;
  return 2.0 * kPi * m +
         10.0 / std::sqrt(2.0 * kPi * m) * std::pow(one_minus_half_inv_sigma(p), -0.5);
}

// e^{x} (b/(5 sqrt(2 pi m))) (1 - 1/sigma)^{-3/4}, the exp-type lower-bound main term.
double exp_type_main_term(const WindowParams& p) {
  return p.b / (5.0 * std::sqrt(2.0 * kPi * p.m)) * std::pow(one_minus_inv_sigma(p), -0.75) *
         std::exp(bound_exponent(p));
}

double cosh_type_main_term(const WindowParams& p) {
  return std::sqrt(kPi) / (5.0 * std::sqrt(2.0 * p.m)) * one_minus_half_inv_sigma(p) *
         std::pow(one_minus_inv_sigma(p), -0.75) * std::exp(bound_exponent(p));
}

void require_split_kind(WindowKind kind) {
  if (kind != WindowKind::CExp && kind != WindowKind::CCosh) {
    throw std::invalid_argument("expected cexp or ccosh");
  }
}

// sum_{k=1}^{K} [f(k + u) + f(k - u)] summed from the small end, plus the convex-midpoint tail
// int_{K+1/2}^inf [f(t + u) + f(t - u)] dt which bounds the remainder from above.
template <class F, class Tail>
double two_sided_sum(F f, Tail tail, double u, long K) {
  double sum = tail(K + 0.5 + u) + tail(K + 0.5 - u);
  for (long k = K; k >= 1; --k) sum += f(k + u) + f(k - u);
  return sum;
}

}  // namespace

double gamma_const(const WindowParams& p) {
  const double beta = p.beta;
  // t = sin(theta): int_0^{pi/2} e^{-beta cos theta} cos theta dtheta.
  const auto f = [beta](double theta) {
    const double c = std::cos(theta);
    return std::exp(-beta * c) * c;
  };
  return integrate(f, 0.0, 0.5 * kPi, transform_quadrature_config()).value;
}

double b_const(const WindowParams& p) {
  const double m = p.m;
  const double sg = p.sigma;
  const double q = s2_argument(p);
  const double beta = p.beta;
  return 2.0 * kPi * m +
         10.0 / std::sqrt(2.0 * kPi * m) * std::pow(one_minus_half_inv_sigma(p), -0.5) +
         (1.0 + 1.0 / kE) / kPi * std::pow(5.0 / (2.0 * kPi * m), 0.25) *
             (4.0 * sg / (2.0 * sg - 1.0) + 8.0) * std::pow(one_minus_half_inv_sigma(p), -0.25) +
         8.0 * sg / ((2.0 * sg - 1.0) * kPi * beta) * std::exp(-q) +
         8.0 / (kPi * beta) * exp_int_e1(q) +
         (4.0 * kPi * m + 2.0) / (beta * kPi) * (std::exp(-std::sqrt(2.0) * beta) + 0.5) *
             std::exp(-2.0 * kPi * m + kPi * m / sg);
}

AuxConstants aux_constants(const WindowParams& p) {
  AuxConstants a;
  const double m = p.m;
  const double sg = p.sigma;
  const double q = s2_argument(p);
  a.gamma = gamma_const(p);
  a.b_const = b_const(p);
  a.S1_bound = (4.0 * sg / (2.0 * sg - 1.0) + 8.0) * std::pow(one_minus_half_inv_sigma(p), -0.25);
  a.S2_bound = 2.0 * sg / ((2.0 * sg - 1.0) * kPi * m) * std::exp(-q) +
               2.0 / (kPi * m) * exp_int_e1(q);
  a.S3_bound = (2.0 + 1.0 / (kPi * m)) * std::exp(-2.0 * kPi * m + kPi * m / sg);
  return a;
}

SeriesValues s_series(const WindowParams& p, int n) {
  const double u = static_cast<double>(n) / p.N1;
  const double a = 2.0 * kPi * p.m;
  SeriesValues s;
  s.S1 = series_bound_check(SeriesFamily::PowerMu, 1.25, u).direct;
  s.S2 = series_bound_check(SeriesFamily::ExpSqrtOverX, a, u).direct;
  s.S3 = series_bound_check(SeriesFamily::ExpA, a, u).direct;
  return s;
}

SeriesCheck series_bound_check(SeriesFamily family, double a_or_mu, double u) {
  if (!(u > -1.0 && u < 1.0)) throw std::invalid_argument("series_bound_check: need |u| < 1");
  const double au = std::fabs(u);
  SeriesCheck out;
  switch (family) {
    case SeriesFamily::PowerMu: {
      const double mu = a_or_mu;
      if (!(mu > 1.0)) throw std::invalid_argument("series_bound_check: need mu > 1");
      out.direct = two_sided_sum([mu](double x) { return std::pow(x, -mu); },
                                 [mu](double x) { return std::pow(x, 1.0 - mu) / (mu - 1.0); }, u,
                                 1000000);
      out.bound = 2.0 * std::pow(1.0 - au, -mu) + 2.0 * std::pow(1.0 - au, 1.0 - mu) / (mu - 1.0);
      break;
    }
    case SeriesFamily::ExpA: {
      const double a = a_or_mu;
      if (!(a > 0.0)) throw std::invalid_argument("series_bound_check: need a > 0");
      out.direct = two_sided_sum([a](double x) { return std::exp(-a * x); },
                                 [a](double x) { return std::exp(-a * x) / a; }, u, 2000);
      out.bound = (2.0 + 2.0 / a) * std::exp(a * au - a);
      break;
    }
    case SeriesFamily::ExpSqrtOverX: {
      const double a = a_or_mu;
      if (!(a > 0.0)) throw std::invalid_argument("series_bound_check: need a > 0");
      out.direct = two_sided_sum(
          [a](double x) { return std::exp(-std::sqrt(a * x)) / (a * x); },
          [a](double x) { return 2.0 / a * exp_int_e1(std::sqrt(a * x)); }, u, 20000);
      out.bound = 2.0 / (a * (1.0 - au)) * std::exp(-std::sqrt(a - a * au)) +
                  4.0 / a * exp_int_e1(std::sqrt(a * (1.0 - au)));
      break;
    }
  }
  return out;
}

double bound_ckb(const WindowParams& p) {
  const double x = bound_exponent(p);
  return 16.0 * p.m * kPi * std::sqrt(one_minus_inv_sigma(p)) /
         (std::exp(x) - std::exp(-x) - 4.0 * std::sqrt(p.sigma * p.sigma - p.sigma));
}

double bound_kb(const WindowParams& p) {
  const double x = bound_exponent(p);
  return 22.0 * kPi * p.m * std::sqrt(one_minus_inv_sigma(p)) / (std::exp(x) - std::exp(-x));
}

double bound_kb_small_sigma(const WindowParams& p) {
  const double x = bound_exponent(p);
  return 22.0 * kPi * p.m * std::sqrt(one_minus_inv_sigma(p)) /
         (std::exp(x) - std::pow(0.06, p.m));
}

double bound_sinh(const WindowParams& p) {
  return (40.0 * std::pow(p.m, 1.5) + 3.0 * std::pow(one_minus_half_inv_sigma(p), -1.5)) *
         std::pow(one_minus_inv_sigma(p), 0.75) * std::exp(-bound_exponent(p));
}

double bound_cexp(const WindowParams& p) {
  const double numerator = p.beta * b_const(p) / (2.0 * p.m);
  return numerator / (exp_type_main_term(p) - 1.0 - gamma_const(p));
}

double bound_exp(const WindowParams& p) {
  const double numerator = p.beta * b_const(p) / (2.0 * p.m) + 1.5;
  return numerator / (exp_type_main_term(p) - gamma_const(p));
}

double bound_ccosh(const WindowParams& p) {
  const double numerator = p.beta * b_const(p) / (2.0 * p.m);
  return numerator / (cosh_type_main_term(p) - 1.0 - gamma_const(p));
}

std::optional<double> theorem_bound(WindowKind kind, const WindowParams& p) {
  switch (kind) {
    case WindowKind::Rect: return std::nullopt;
    case WindowKind::CKB: return bound_ckb(p);
    case WindowKind::KB: return bound_kb(p);
    case WindowKind::Sinh: return bound_sinh(p);
    case WindowKind::CExp: return bound_cexp(p);
    case WindowKind::Exp: return bound_exp(p);
    case WindowKind::CCosh: return bound_ccosh(p);
  }
  return std::nullopt;
}

double ckb_ft_lower_bound(const WindowParams& p) {
  const double s = std::sqrt(one_minus_inv_sigma(p));
  return 2.0 * p.m / ((bessel_i0(p.beta) - 1.0) * p.N1) *
         (std::sinh(bound_exponent(p)) / (2.0 * p.m * kPi * s) - p.sigma / (kPi * p.m));
}

double kb_ft_lower_bound(const WindowParams& p) {
  return std::sinh(bound_exponent(p)) /
         (bessel_i0(p.beta) * p.N1 * kPi * std::sqrt(one_minus_inv_sigma(p)));
}

double sinh_ft_lower_bound(const WindowParams& p) {
  return p.beta / (5.0 * p.N1 * std::sqrt(2.0 * kPi * p.m) * std::sinh(p.beta)) *
         std::pow(one_minus_inv_sigma(p), -0.75) * std::exp(bound_exponent(p));
}

double cexp_ft_lower_bound(const WindowParams& p) {
  return 2.0 * p.m / (std::expm1(p.beta) * p.N1) *
         (exp_type_main_term(p) - 1.0 - gamma_const(p));
}

double exp_ft_lower_bound(const WindowParams& p) {
  return 2.0 * p.m * std::exp(-p.beta) / p.N1 * (exp_type_main_term(p) - gamma_const(p));
}

double ccosh_ft_lower_bound(const WindowParams& p) {
  return 2.0 * p.m / (coshm1(p.beta) * p.N1) * (cosh_type_main_term(p) - 1.0 - gamma_const(p));
}

double ckb_alias_sum_bound(const WindowParams& p) {
  return 8.0 * p.m / ((bessel_i0(p.beta) - 1.0) * p.N1);
}

double sinh_alias_sum_bound(const WindowParams& p) {
  return (kPi * p.m * p.beta +
          3.0 * std::sqrt(2.0 * kPi * p.m) * std::pow(one_minus_half_inv_sigma(p), -0.5)) /
         (p.N1 * std::sinh(p.beta));
}

double psi_alias_sum_bound(WindowKind kind, const WindowParams& p) {
  require_split_kind(kind);
  const double denom = kind == WindowKind::CExp ? std::expm1(p.beta) : coshm1(p.beta);
  return p.beta / (denom * p.N1) * psi_sum_bracket(p);
}

double rho_alias_sum_bound(WindowKind kind, const WindowParams& p) {
  require_split_kind(kind);
  const double denom = kind == WindowKind::CExp ? std::expm1(p.beta) : coshm1(p.beta);
  return rho_sum_bracket(p) / (denom * p.N1);
}

double sinc_difference_bound(double beta, double w) { return 2.0 * beta * beta / (w * w); }

double contour_bound(const WindowParams& p, double w) {
  const double aw = std::fabs(w);
  return (2.0 + 2.0 / kE) * p.beta * std::pow(5.0, 0.25) * std::pow(aw, -1.25) +
         4.0 / aw * std::exp(-std::sqrt(aw)) +
         (2.0 * std::exp(-std::sqrt(2.0) * p.beta) + 1.0) * std::exp(-aw);
}

std::vector<ContourCheck> contour_bound_check(const WindowParams& p,
                                              const std::vector<double>& w_samples) {
  std::vector<ContourCheck> out;
  out.reserve(w_samples.size());
  for (double w : w_samples) {
    if (std::fabs(w) < p.beta) throw std::invalid_argument("contour_bound_check: need |w| >= beta");
    const std::complex<double> I = contour_integral_I(p, w);
    ContourCheck c;
    c.w = w;
    c.abs_I = std::abs(I);
    c.imag_I = I.imag();
    c.bound = contour_bound(p, w);
    c.holds = c.abs_I <= c.bound;
    c.slack_ratio = c.bound / c.abs_I;
    out.push_back(c);
  }
  return out;
}

RectSumCheck rect_sum_property_check(const WindowParams& p, const EstimatorConfig& cfg) {
  cfg.validate();
  const Window rect(WindowKind::Rect, p);
  RectSumCheck out;
  out.lower = (1.0 - 2.0 / kPi) * p.m / p.N1 * std::fabs(sinc(kPi * p.m / p.sigma));
  out.upper = 3.0 * p.m / p.N1;
  double n0_max = 0.0;
  for (int r = 1; r <= cfg.r_max; ++r) {
    n0_max = std::max(n0_max, std::fabs(rect.ft(static_cast<double>(r) * p.N1)));
  }
  out.n0_zero = n0_max <= 1e-14 * out.upper;
  // The series norm equals |phi_hat_rect(n)| times the normalized aliasing sup.
  for (int n = -p.N / 2; n < p.N / 2; ++n) {
    out.max_sup = std::max(out.max_sup, std::fabs(rect.ft(n)) * rect_aliasing_sup(p, n));
  }
  out.holds = out.n0_zero && out.max_sup >= out.lower && out.max_sup <= out.upper;
  return out;
}

namespace {

template <class F, class Tail>
AliasSumCheck check_alias_sum(const WindowParams& p, int r_max, double bound, F f, Tail tail) {
  AliasSumCheck out;
  out.worst_ratio = -1.0;
  for (int n = -p.N / 2; n < p.N / 2; ++n) {
    double direct = 0.0;
    for (int r = r_max; r >= 1; --r) {
      direct += std::fabs(f(n + static_cast<double>(r) * p.N1)) +
                std::fabs(f(n - static_cast<double>(r) * p.N1));
    }
    const double ratio = (direct + tail(n)) / bound;
    if (ratio > out.worst_ratio) {
      out.worst_ratio = ratio;
      out.worst_n = n;
    }
  }
  return out;
}

}  // namespace

AliasSumCheck check_ckb_alias_sum(const WindowParams& p, int r_max) {
  const Window w(WindowKind::CKB, p);
  const double coeff = 1.0 / (bessel_i0(p.beta) - 1.0);
  return check_alias_sum(p, r_max, ckb_alias_sum_bound(p), [&](double v) { return w.ft(v); },
                         [&](int n) { return kb_difference_tail(p, coeff, n, r_max); });
}

AliasSumCheck check_sinh_alias_sum(const WindowParams& p, int r_max) {
  const Window w(WindowKind::Sinh, p);
  const double coeff = 2.0 * p.m / p.N1 / std::sinh(p.beta);
  return check_alias_sum(p, r_max, sinh_alias_sum_bound(p), [&](double v) { return w.ft(v); },
                         [&](int n) { return sinh_like_tail(p, coeff, n, r_max); });
}

AliasSumCheck check_psi_alias_sum(WindowKind kind, const WindowParams& p, int r_max) {
  require_split_kind(kind);
  const Window w(kind, p);
  const double scale = 2.0 * p.m / p.N1;
  const double coeff =
      kind == WindowKind::CExp ? 2.0 * scale / std::expm1(p.beta) : scale / coshm1(p.beta);
  return check_alias_sum(p, r_max, psi_alias_sum_bound(kind, p),
                         [&](double v) { return w.psi_ft(v); },
                         [&](int n) { return sinh_like_tail(p, coeff, n, r_max); });
}

AliasSumCheck check_rho_alias_sum(WindowKind kind, const WindowParams& p, int r_max) {
  require_split_kind(kind);
  const Window w(kind, p);
  const double denom = kind == WindowKind::CExp ? std::expm1(p.beta) : coshm1(p.beta);
  const double coeff = p.m / (denom * p.N1);
  return check_alias_sum(p, r_max, rho_alias_sum_bound(kind, p),
                         [&](double v) { return w.rho_ft(v); },
                         [&](int n) { return rho_contour_tail(p, coeff, n, r_max); });
}

BoundReport make_bound_report(WindowKind kind, const WindowParams& p,
                              const ErrorConstantEstimate& estimate) {
  BoundReport r;
  r.window = kind;
  r.params = p;
  r.estimate = estimate.value;
  r.tail_slack = estimate.tail_slack;
  if (kind == WindowKind::Rect) {
    r.lower_value = kRectLow;
    r.bound_value = kRectHigh;
    r.dominated = r.estimate > kRectLow && r.estimate < kRectHigh;
  } else {
    r.bound_value = *theorem_bound(kind, p);
    r.dominated = r.estimate + r.tail_slack <= r.bound_value;
  }
  r.slack_ratio = r.bound_value / r.estimate;
  return r;
}

}  // namespace nfftlab
