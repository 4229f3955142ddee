#include "nfftlab/window.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "nfftlab/specialfn.hpp"

namespace nfftlab {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = 0.5 * std::numbers::pi;
constexpr double kSeriesThreshold = 1e-6;

// d = beta^2 - w^2 in factored form to keep precision near the branch point.
double branch_d(double beta, double w) {
  const double aw = std::fabs(w);
  return (beta - aw) * (beta + aw);
}

// Cosine transform over [0, 1] of profile(sqrt(1 - t^2)) via t = sin(theta).
double cosine_transform(const auto& profile, double w) {
  const auto integrand = [&](double theta) {
    const double c = std::cos(theta);
    return profile(c) * std::cos(w * std::sin(theta)) * c;
  };
  return integrate(integrand, 0.0, kHalfPi, transform_quadrature_config()).value;
}

}  // namespace

std::string_view to_string(WindowKind kind) {
  switch (kind) {
    case WindowKind::Rect: return "rect";
    case WindowKind::CKB: return "ckb";
    case WindowKind::KB: return "kb";
    case WindowKind::Sinh: return "sinh";
    case WindowKind::CExp: return "cexp";
    case WindowKind::Exp: return "exp";
    case WindowKind::CCosh: return "ccosh";
  }
  return "unknown";
}

std::string_view to_string(FtStrategy strategy) {
  switch (strategy) {
    case FtStrategy::Analytic: return "analytic";
    case FtStrategy::Quadrature: return "quadrature";
    case FtStrategy::Split: return "split";
  }
  return "unknown";
}

WindowKind parse_window_kind(std::string_view name) {
  for (WindowKind k : kAllWindowKinds) {
    if (to_string(k) == name) return k;
  }
  throw std::invalid_argument("unknown window kind: " + std::string(name));
}

bool is_continuous(WindowKind kind) {
  return kind == WindowKind::CKB || kind == WindowKind::Sinh || kind == WindowKind::CExp ||
         kind == WindowKind::CCosh;
}

WindowParams WindowParams::make(int m, double sigma, int N) {
  if (m < 2) throw std::invalid_argument("WindowParams: m must be >= 2");
  if (!std::isfinite(sigma) || sigma < 1.25 - 1e-12) {
    throw std::invalid_argument("WindowParams: sigma must be >= 5/4");
  }
  if (N < 8 || N % 2 != 0) throw std::invalid_argument("WindowParams: N must be even and >= 8");
  const double n1_real = sigma * N;
  const long long n1 = std::llround(n1_real);
  if (std::fabs(n1_real - static_cast<double>(n1)) > 1e-9 * n1_real || n1 % 2 != 0) {
    throw std::invalid_argument("WindowParams: sigma * N must be an even integer");
  }
  if (n1 > 1 << 28) throw std::invalid_argument("WindowParams: N1 too large");
  if (8 * m > n1) throw std::invalid_argument("WindowParams: need 2m <= N1/4");
  WindowParams p;
  p.m = m;
  p.sigma = sigma;
  p.N = N;
  p.N1 = static_cast<int>(n1);
  p.b = 2.0 * kPi * (1.0 - 1.0 / (2.0 * sigma));
  p.beta = p.b * m;
  p.support_half_width = static_cast<double>(m) / p.N1;
  return p;
}

QuadratureConfig transform_quadrature_config() {
  QuadratureConfig cfg;
  cfg.abs_tol = 1e-16;
  cfg.rel_tol = 1e-13;
  cfg.max_depth = 60;
  return cfg;
}

double sinh_kernel(double beta, double w) {
  const double d = branch_d(beta, w);
  if (std::fabs(d) < kSeriesThreshold) {
    // (1/2) sum_k d^k / (4^k k! (k+1)!)
    double term = 0.5;
    double sum = term;
    for (int k = 1; k < 20; ++k) {
      term *= d / (4.0 * k * (k + 1));
      sum += term;
      if (std::fabs(term) < 1e-17) break;
    }
    return sum;
  }
  if (d > 0.0) {
    const double x = std::sqrt(d);
    return bessel_i1(x) / x;
  }
  const double x = std::sqrt(-d);
  return bessel_j1(x) / x;
}

double kb_kernel(double beta, double w) {
  const double d = branch_d(beta, w);
  if (std::fabs(d) < kSeriesThreshold) {
    // sum_k d^k / (2k+1)!
    return 1.0 + d / 6.0 + d * d / 120.0;
  }
  if (d > 0.0) {
    const double x = std::sqrt(d);
    return std::sinh(x) / x;
  }
  return sinc(std::sqrt(-d));
}

Window::Window(WindowKind kind, const WindowParams& params, std::optional<FtStrategy> strategy)
    : kind_(kind), params_(params) {
  const bool split_capable =
      kind == WindowKind::CExp || kind == WindowKind::CCosh || kind == WindowKind::Exp;
  if (split_capable) {
    strategy_ = strategy.value_or(FtStrategy::Quadrature);
    if (strategy_ == FtStrategy::Analytic) {
      throw std::invalid_argument("Window: exp/cosh kinds have no analytic transform");
    }
  } else {
    strategy_ = strategy.value_or(FtStrategy::Analytic);
    if (strategy_ != FtStrategy::Analytic) {
      throw std::invalid_argument("Window: this kind only supports the analytic transform");
    }
  }
  const double beta = params_.beta;
  switch (kind_) {
    case WindowKind::CKB:
    case WindowKind::KB:
      i0_beta_ = bessel_i0(beta);
      break;
    case WindowKind::Sinh:
      sinh_beta_ = std::sinh(beta);
      break;
    default:
      break;
  }
  expm1_beta_ = std::expm1(beta);
  const double sh = std::sinh(0.5 * beta);
  coshm1_beta_ = 2.0 * sh * sh;
  exp_minus_beta_ = std::exp(-beta);
}

double Window::scaled_frequency(double v) const {
  return 2.0 * kPi * params_.m * v / params_.N1;
}

double Window::profile(double s) const {
  const double beta = params_.beta;
  switch (kind_) {
    case WindowKind::Rect:
      return 1.0;
    case WindowKind::CKB:
      return (bessel_i0(beta * s) - 1.0) / (i0_beta_ - 1.0);
    case WindowKind::KB:
      return bessel_i0(beta * s) / i0_beta_;
    case WindowKind::Sinh:
      return std::sinh(beta * s) / sinh_beta_;
    case WindowKind::CExp:
      return std::expm1(beta * s) / expm1_beta_;
    case WindowKind::Exp:
      return std::exp(beta * (s - 1.0));
    case WindowKind::CCosh: {
      const double r = std::sinh(0.5 * beta * s) / std::sinh(0.5 * beta);
      return r * r;
    }
  }
  return 0.0;
}

double Window::value(double x) const {
  const double ax = std::fabs(x);
  const double hw = params_.support_half_width;
  if (ax > hw) return 0.0;
  if (ax == hw) {
    switch (kind_) {
      case WindowKind::Rect: return 0.5;
      case WindowKind::KB: return 0.5 / i0_beta_;
      case WindowKind::Exp: return 0.5 * exp_minus_beta_;
      default: return 0.0;
    }
  }
  const double t = ax / hw;
  return profile(std::sqrt((1.0 - t) * (1.0 + t)));
}

double Window::ft(double v) const {
  const double w = scaled_frequency(v);
  const double beta = params_.beta;
  const double scale = 2.0 * params_.m / params_.N1;
  switch (kind_) {
    case WindowKind::Rect:
      return scale * sinc(w);
    case WindowKind::CKB:
      return scale / (i0_beta_ - 1.0) * (kb_kernel(beta, w) - sinc(w));
    case WindowKind::KB:
      return scale / i0_beta_ * kb_kernel(beta, w);
    case WindowKind::Sinh:
      return kPi * params_.m * beta / (params_.N1 * sinh_beta_) * sinh_kernel(beta, w);
    case WindowKind::CExp:
      return cexp_ft(w);
    case WindowKind::Exp:
      return (1.0 - exp_minus_beta_) * cexp_ft(w) + exp_minus_beta_ * scale * sinc(w);
    case WindowKind::CCosh:
      if (strategy_ == FtStrategy::Split) return psi_ft(v) + rho_ft(v);
      return ft_quadrature(v);
  }
  return 0.0;
}

double Window::cexp_ft(double w) const {
  const double scale = 2.0 * params_.m / params_.N1;
  if (strategy_ == FtStrategy::Split) {
    const double beta = params_.beta;
    const double psi = 2.0 * kPi * params_.m * beta / (expm1_beta_ * params_.N1) *
                       sinh_kernel(beta, w);
    const double rho = scale / expm1_beta_ *
                       cosine_transform([beta](double s) { return std::expm1(-beta * s); }, w);
    return psi + rho;
  }
  const double beta = params_.beta;
  const double denom = expm1_beta_;
  return scale * cosine_transform(
                     [beta, denom](double s) { return std::expm1(beta * s) / denom; }, w);
}

double Window::ft_quadrature(double v) const {
  const double scale = 2.0 * params_.m / params_.N1;
  return scale * cosine_transform([this](double s) { return profile(s); }, scaled_frequency(v));
}

void Window::require_split(const char* who) const {
  if (kind_ != WindowKind::CExp && kind_ != WindowKind::CCosh) {
    throw std::logic_error(std::string(who) + ": only defined for cexp and ccosh");
  }
}

// psi = sinh(beta s) * split_scale(): 2/(e^beta - 1) for CExp, 1/(cosh beta - 1) for CCosh.
double Window::split_scale() const {
  return kind_ == WindowKind::CExp ? 2.0 / expm1_beta_ : 1.0 / coshm1_beta_;
}

double Window::psi_value(double x) const {
  require_split("psi_value");
  const double ax = std::fabs(x);
  const double hw = params_.support_half_width;
  if (ax >= hw) return 0.0;
  const double t = ax / hw;
  return split_scale() * std::sinh(params_.beta * std::sqrt((1.0 - t) * (1.0 + t)));
}

double Window::rho_value(double x) const {
  require_split("rho_value");
  const double ax = std::fabs(x);
  const double hw = params_.support_half_width;
  if (ax >= hw) return 0.0;
  const double t = ax / hw;
  const double denom = kind_ == WindowKind::CExp ? expm1_beta_ : coshm1_beta_;
  return std::expm1(-params_.beta * std::sqrt((1.0 - t) * (1.0 + t))) / denom;
}

double Window::psi_ft(double v) const {
  require_split("psi_ft");
  const double beta = params_.beta;
  // (2m/N1) * split_scale * (pi beta / 2) * R
  return kPi * params_.m * beta / params_.N1 * split_scale() *
         sinh_kernel(beta, scaled_frequency(v));
}

double Window::rho_ft(double v) const {
  require_split("rho_ft");
  const double beta = params_.beta;
  const double denom = kind_ == WindowKind::CExp ? expm1_beta_ : coshm1_beta_;
  const double scale = 2.0 * params_.m / params_.N1;
  return scale / denom *
         cosine_transform([beta](double s) { return std::expm1(-beta * s); },
                          scaled_frequency(v));
}

double Window::rho_bound() const {
  require_split("rho_bound");
  return kind_ == WindowKind::CExp ? exp_minus_beta_ : 2.0 / expm1_beta_;
}

std::complex<double> contour_integral_I(const WindowParams& params, double w) {
  const double beta = params.beta;
  const QuadratureConfig cfg = transform_quadrature_config();
  // t = sin(theta) over [-pi/2, pi/2]; dt = cos(theta) dtheta.
  const auto re = [beta, w](double theta) {
    const double c = std::cos(theta);
    return std::expm1(-beta * c) * std::cos(w * std::sin(theta)) * c;
  };
  const auto im = [beta, w](double theta) {
    const double c = std::cos(theta);
    return std::expm1(-beta * c) * std::sin(w * std::sin(theta)) * c;
  };
  return {integrate(re, -kHalfPi, kHalfPi, cfg).value, integrate(im, -kHalfPi, kHalfPi, cfg).value};
}

}  // namespace nfftlab
