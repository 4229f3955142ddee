#include "nfftlab/error_analysis.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "nfftlab/specialfn.hpp"

namespace nfftlab {
namespace {

constexpr double kPi = std::numbers::pi;
// Si(pi); partial sums of sum sin(r y)/r lie in [0, Si(pi)] on (0, pi).
constexpr double kSiPi = 1.8519370519824661;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// Transform values of quadrature-based windows, shared across estimates within a process.
class FtCache {
 public:
  double get(const Window& w, long v) {
    const Key key{static_cast<int>(w.kind()), static_cast<int>(w.ft_strategy()), w.params().m,
                  w.params().N1, w.params().sigma, v};
    {
      std::lock_guard<std::mutex> lock(mutex_);
      auto it = values_.find(key);
      if (it != values_.end()) return it->second;
    }
    const double value = w.ft(static_cast<double>(v));
    std::lock_guard<std::mutex> lock(mutex_);
    values_.emplace(key, value);
    return value;
  }

 private:
  using Key = std::tuple<int, int, int, int, double, long>;
  std::mutex mutex_;
  std::map<Key, double> values_;
};

FtCache& ft_cache() {
  static FtCache cache;
  return cache;
}

double transform_at(const Window& w, long v) {
  const long av = v < 0 ? -v : v;
  switch (w.kind()) {
    case WindowKind::CExp:
    case WindowKind::CCosh:
      return ft_cache().get(w, av);
    case WindowKind::Exp: {
      const Window inner(WindowKind::CExp, w.params(), w.ft_strategy());
      const Window rect(WindowKind::Rect, w.params());
      const double e = std::exp(-w.params().beta);
      return (1.0 - e) * ft_cache().get(inner, av) + e * rect.ft(static_cast<double>(av));
    }
    default:
      return w.ft(static_cast<double>(av));
  }
}

// a_r = phi_hat(n + r N1)/phi_hat(n) for r = 1..R (plus) and r = -1..-R (minus).
struct AliasCoefficients {
  std::vector<double> plus;
  std::vector<double> minus;
  double phi_n = 0.0;
};

AliasCoefficients alias_coefficients(const Window& w, int n, int r_max) {
  AliasCoefficients a;
  a.plus.resize(static_cast<std::size_t>(r_max));
  a.minus.resize(static_cast<std::size_t>(r_max));
  const long N1 = w.params().N1;
  if (w.kind() == WindowKind::Rect) {
    a.phi_n = w.ft(n);
    for (int r = 1; r <= r_max; ++r) {
      a.plus[r - 1] = n == 0 ? 0.0 : static_cast<double>(n) / static_cast<double>(n + r * N1);
      a.minus[r - 1] = n == 0 ? 0.0 : static_cast<double>(n) / static_cast<double>(n - r * N1);
    }
    return a;
  }
  a.phi_n = transform_at(w, n);
  for (int r = 1; r <= r_max; ++r) {
    a.plus[r - 1] = transform_at(w, n + r * N1) / a.phi_n;
    a.minus[r - 1] = transform_at(w, n - r * N1) / a.phi_n;
  }
  return a;
}

std::complex<double> evaluate(const std::vector<double>& plus, const std::vector<double>& minus,
                              double y) {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t k = 0; k < plus.size(); ++k) {
    const double angle = 2.0 * kPi * static_cast<double>(k + 1) * y;
    re += (plus[k] + minus[k]) * std::cos(angle);
    im += (plus[k] - minus[k]) * std::sin(angle);
  }
  return {re, im};
}

// Dual form of the full aliasing sum at y = N1 x. side = +1 or -1 takes the one-sided limit
// y -> y0 from above or below, 0 the pointwise value. Returns h and a rounding allowance.
struct DualValue {
  std::complex<double> h;
  double abs_sum = 0.0;  // sum of |terms| / |N1 phi_hat(n)|
};

DualValue dual_aliasing(const Window& w, int n, double phi_n, double y, int side) {
  const WindowParams& p = w.params();
  const int m = p.m;
  const long N1 = p.N1;
  const long lo = static_cast<long>(std::ceil(-m - y));
  const long hi = static_cast<long>(std::floor(m - y));
  const double inner_edge = w.profile(0.0);
  const double phase_y = static_cast<double>(n) * y;
  std::complex<double> sum = 0.0;
  double abs_sum = 0.0;
  for (long l = lo; l <= hi; ++l) {
    const double t = (y + static_cast<double>(l)) / m;
    double phi;
    if (t == -1.0 || t == 1.0) {
      if (side == 0) {
        phi = w.value(t * p.support_half_width);
      } else {
        // Moving inward from the edge picks up the interior limit, outward gives zero.
        phi = (side > 0) == (t < 0.0) ? inner_edge : 0.0;
      }
    } else {
      phi = w.profile(std::sqrt((1.0 - t) * (1.0 + t)));
    }
    if (phi == 0.0) continue;
    const long k = ((static_cast<long>(n) * l) % N1 + N1) % N1;
    const double angle = -2.0 * kPi * (static_cast<double>(k) + phase_y) / static_cast<double>(N1);
    sum += phi * std::polar(1.0, angle);
    abs_sum += std::fabs(phi);
  }
  const double scale = 1.0 / (static_cast<double>(N1) * phi_n);
  return {sum * scale - 1.0, abs_sum * std::fabs(scale)};
}

// Relative accuracy of phi_hat on I_N.
double transform_rel_accuracy(const Window& w) {
  switch (w.kind()) {
    case WindowKind::CExp:
    case WindowKind::CCosh:
    case WindowKind::Exp:
      return w.ft_strategy() == FtStrategy::Analytic ? 1e-14 : transform_quadrature_config().rel_tol;
    default:
      return 1e-14;
  }
}

struct DualSup {
  double value = 0.0;
  double y_argmax = 0.0;
  double slack = 0.0;
};

DualSup dual_sup(const Window& w, int n, double phi_n, const EstimatorConfig& cfg) {
  const int G = cfg.x_grid;
  const double rel = transform_rel_accuracy(w);
  DualSup out;
  out.value = -1.0;
  auto consider = [&](double y, int side) {
    const DualValue d = dual_aliasing(w, n, phi_n, y, side);
    const double mag = std::abs(d.h);
    const double err = rel * std::abs(d.h + 1.0) + 16.0 * kEps * (2.0 * w.params().m + 2.0) * d.abs_sum;
    out.slack = std::max(out.slack, err);
    if (mag > out.value) {
      out.value = mag;
      out.y_argmax = y - std::floor(y);
    }
    return mag;
  };
  for (int j = 1; j < G; ++j) consider(static_cast<double>(j) / G, 0);
  consider(0.0, +1);
  consider(0.0, -1);
  if (!cfg.refine) return out;
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = out.y_argmax - 1.0 / G;
  double hi = out.y_argmax + 1.0 / G;
  auto f = [&](double y) { return std::abs(dual_aliasing(w, n, phi_n, y, 0).h); };
  double c = hi - invphi * (hi - lo);
  double d = lo + invphi * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  for (int it = 0; it < 30; ++it) {
    if (fc > fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - invphi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + invphi * (hi - lo);
      fd = f(d);
    }
  }
  consider(fc > fd ? c : d, 0);
  return out;
}

// Lower end V = R N1 - |n| of the frequencies dropped by truncation.
double tail_start(const WindowParams& p, int n, int r_max) {
  return static_cast<double>(r_max) * p.N1 - std::fabs(static_cast<double>(n));
}

}  // namespace

std::string_view to_string(EstimatorMethod method) {
  return method == EstimatorMethod::Poisson ? "poisson" : "series";
}

EstimatorMethod parse_estimator_method(std::string_view name) {
  if (name == "poisson") return EstimatorMethod::Poisson;
  if (name == "series") return EstimatorMethod::Series;
  throw std::invalid_argument("unknown estimator method: " + std::string(name));
}

void EstimatorConfig::validate() const {
  if (r_max < 8 || x_grid < 256) {
    throw std::invalid_argument("EstimatorConfig: need r_max >= 8 and x_grid >= 256");
  }
}

// For decreasing E: sum_{|r|>R} E(|n + r N1|) <= (2/N1) int_V^inf E(v) dv.

double sinh_like_tail(const WindowParams& p, double coeff, int n, int r_max) {
  // |coeff (pi beta/2) J1(x)/x| with x = sqrt(w^2 - beta^2) and |J1(x)| <= x^{-1/2} for x >= 6.
  const double V = tail_start(p, n, r_max);
  const double a = 2.0 * kPi * p.m / p.N1;
  const double q = p.beta / (a * V);
  const double x_min = std::sqrt((a * V - p.beta) * (a * V + p.beta));
  if (!(q < 1.0) || x_min < 6.0) throw std::logic_error("tail envelope outside its validity range");
  const double c = coeff * 0.5 * kPi * p.beta;
  return 2.0 / p.N1 * c * std::pow(1.0 - q * q, -0.75) * std::pow(a, -1.5) * 2.0 / std::sqrt(V);
}

double kb_difference_tail(const WindowParams& p, double coeff, int n, int r_max) {
  // coeff (2m/N1) 2 beta^2/w^2 = coeff m b^2 N1/(pi^2 v^2).
  const double V = tail_start(p, n, r_max);
  return 2.0 / p.N1 * coeff * p.m * p.b * p.b * p.N1 / (kPi * kPi * V);
}

double rho_contour_tail(const WindowParams& p, double coeff, int n, int r_max) {
  // |I(w)| <= A w^{-5/4} + 4 w^{-1} e^{-sqrt w} + B e^{-w}, dv = dw/a.
  const double V = tail_start(p, n, r_max);
  const double a = 2.0 * kPi * p.m / p.N1;
  const double W = a * V;
  const double A = (2.0 + 2.0 / std::numbers::e) * p.beta * std::pow(5.0, 0.25);
  const double B = 2.0 * std::exp(-std::sqrt(2.0) * p.beta) + 1.0;
  const double integral = 4.0 * A * std::pow(W, -0.25) + 8.0 * exp_int_e1(std::sqrt(W)) +
                          B * std::exp(-W);
  return 2.0 / p.N1 * coeff * integral / a;
}

double rect_oscillating_tail(const WindowParams& p, int n, int r_max) {
  // phi_hat_rect(n + r N1) = sin(2 pi m n/N1)/(pi N1 (u + r)) and 1/(u+r) = 1/r - u/(r(u+r)).
  const double u = std::fabs(static_cast<double>(n)) / p.N1;
  const double s = std::fabs(std::sin(2.0 * kPi * p.m * n / p.N1));
  return s / (kPi * p.N1) * (2.0 * (0.5 * kPi + kSiPi) + 2.0 * u / (r_max - u));
}

double aliasing_tail_slack(const Window& window, int n, int r_max) {
  const WindowParams& p = window.params();
  if (window.kind() == WindowKind::Rect) {
    const double u = std::fabs(static_cast<double>(n)) / p.N1;
    return u * (2.0 * (0.5 * kPi + kSiPi) + 2.0 * u / (r_max - u));
  }
  const double beta = p.beta;
  const double expm1_beta = std::expm1(beta);
  const double sh = std::sinh(0.5 * beta);
  const double coshm1_beta = 2.0 * sh * sh;
  const double scale = 2.0 * p.m / p.N1;
  double tail = 0.0;
  switch (window.kind()) {
    case WindowKind::CKB:
      tail = kb_difference_tail(p, 1.0 / (bessel_i0(beta) - 1.0), n, r_max);
      break;
    case WindowKind::KB: {
      const double i0 = bessel_i0(beta);
      tail = (rect_oscillating_tail(p, n, r_max) + kb_difference_tail(p, 1.0, n, r_max)) / i0;
      break;
    }
    case WindowKind::Sinh:
      tail = sinh_like_tail(p, scale / std::sinh(beta), n, r_max);
      break;
    case WindowKind::CExp:
    case WindowKind::Exp:
      tail = sinh_like_tail(p, 2.0 * scale / expm1_beta, n, r_max) +
             rho_contour_tail(p, 0.5 * scale / expm1_beta, n, r_max);
      if (window.kind() == WindowKind::Exp) {
        const double e = std::exp(-beta);
        tail = (1.0 - e) * tail + e * rect_oscillating_tail(p, n, r_max);
      }
      break;
    case WindowKind::CCosh:
      tail = sinh_like_tail(p, scale / coshm1_beta, n, r_max) +
             rho_contour_tail(p, 0.5 * scale / coshm1_beta, n, r_max);
      break;
    case WindowKind::Rect:
      break;
  }
  return tail / std::fabs(transform_at(window, n));
}

TrigSup trig_sup(const std::vector<double>& plus, const std::vector<double>& minus, int x_grid,
                 bool refine) {
  if (plus.size() != minus.size()) throw std::invalid_argument("trig_sup: size mismatch");
  const int G = x_grid;
  const int R = static_cast<int>(plus.size());
  std::vector<double> sum(static_cast<std::size_t>(R));
  std::vector<double> diff(static_cast<std::size_t>(R));
  for (int r = 0; r < R; ++r) {
    sum[r] = plus[r] + minus[r];
    diff[r] = plus[r] - minus[r];
  }
  std::vector<double> cos_table(static_cast<std::size_t>(G));
  std::vector<double> sin_table(static_cast<std::size_t>(G));
  for (int j = 0; j < G; ++j) {
    const double angle = 2.0 * kPi * j / G;
    cos_table[j] = std::cos(angle);
    sin_table[j] = std::sin(angle);
  }
  double grid_max = -1.0;
  int grid_arg = 0;
  for (int j = 0; j < G; ++j) {
    double re = 0.0;
    double im = 0.0;
    int idx = 0;
    for (int r = 0; r < R; ++r) {
      idx += j;
      if (idx >= G) idx -= G;
      re += sum[r] * cos_table[idx];
      im += diff[r] * sin_table[idx];
    }
    const double mag = std::hypot(re, im);
    if (mag > grid_max) {
      grid_max = mag;
      grid_arg = j;
    }
  }
  TrigSup out{grid_max, static_cast<double>(grid_arg) / G};
  if (!refine) return out;
  // Golden-section search for the maximum of |h| within one grid cell either side of the argmax.
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = out.y_argmax - 1.0 / G;
  double hi = out.y_argmax + 1.0 / G;
  double c = hi - invphi * (hi - lo);
  double d = lo + invphi * (hi - lo);
  double fc = std::abs(evaluate(plus, minus, c));
  double fd = std::abs(evaluate(plus, minus, d));
  for (int it = 0; it < 30; ++it) {
    if (fc > fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - invphi * (hi - lo);
      fc = std::abs(evaluate(plus, minus, c));
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + invphi * (hi - lo);
      fd = std::abs(evaluate(plus, minus, d));
    }
  }
  const double y = fc > fd ? c : d;
  const double fy = std::max(fc, fd);
  if (fy > out.value) {
    out.value = fy;
    out.y_argmax = y - std::floor(y);
  }
  return out;
}

std::complex<double> aliasing_function(const Window& window, int n, double x,
                                       const EstimatorConfig& cfg) {
  cfg.validate();
  const int N = window.params().N;
  if (n < -N / 2 || n >= N / 2) throw std::invalid_argument("aliasing_function: n outside I_N");
  const AliasCoefficients a = alias_coefficients(window, n, cfg.r_max);
  const double y = window.params().N1 * x;
  return evaluate(a.plus, a.minus, y - std::floor(y));
}

std::complex<double> aliasing_function_exact(const Window& window, int n, double x) {
  const int N = window.params().N;
  if (n < -N / 2 || n >= N / 2) throw std::invalid_argument("aliasing_function_exact: n outside I_N");
  const double phi_n = window.kind() == WindowKind::Rect ? window.ft(n) : transform_at(window, n);
  if (phi_n == 0.0) throw std::domain_error("aliasing_function_exact: phi_hat(n) = 0");
  return dual_aliasing(window, n, phi_n, window.params().N1 * x, 0).h;
}

double rect_aliasing_sup(const WindowParams& params, int n) {
  if (n == 0) return 0.0;
  // |A e^{i phi} - 1| with A = pi u / sin(pi u) grows with |phi| <= pi |u|; the edge is the sup.
  const double t = kPi * std::fabs(static_cast<double>(n) / params.N1);
  return std::hypot(t / std::tan(t) - 1.0, t);
}

ErrorConstantEstimate error_constant(const Window& window, const EstimatorConfig& cfg) {
  cfg.validate();
  const WindowParams& p = window.params();
  if (window.kind() == WindowKind::Rect) {
    // The truncated series overshoots at the jump by a Gibbs margin that does not shrink with
    // r_max, so the untruncated closed form is used instead.
    ErrorConstantEstimate best;
    best.config = cfg;
    best.n_argmax = -p.N / 2;
    best.value = rect_aliasing_sup(p, best.n_argmax);
    return best;
  }
  std::vector<int> scan;
  scan.push_back(-p.N / 2);
  for (int n = 0; n < p.N / 2; ++n) scan.push_back(n);

  ErrorConstantEstimate best;
  best.config = cfg;
  best.value = -1.0;
  for (int n : scan) {
    if (cfg.method == EstimatorMethod::Poisson) {
      const double phi_n = transform_at(window, n);
      if (!(phi_n > 0.0)) {
        throw std::domain_error("error_constant: window transform not positive on I_N");
      }
      const DualSup sup = dual_sup(window, n, phi_n, cfg);
      if (sup.value > best.value) {
        best.value = sup.value;
        best.n_argmax = n;
        best.x_argmax = sup.y_argmax / p.N1;
      }
      best.tail_slack = std::max(best.tail_slack, sup.slack);
      continue;
    }
    const AliasCoefficients a = alias_coefficients(window, n, cfg.r_max);
    if (!(a.phi_n > 0.0)) {
      throw std::domain_error("error_constant: window transform not positive on I_N");
    }
    const TrigSup sup = trig_sup(a.plus, a.minus, cfg.x_grid, cfg.refine);
    if (sup.value > best.value) {
      best.value = sup.value;
      best.n_argmax = n;
      best.x_argmax = sup.y_argmax / p.N1;
    }
    best.tail_slack = std::max(best.tail_slack, aliasing_tail_slack(window, n, cfg.r_max));
  }
  return best;
}

RectBracket error_constant_rect_bracket(const WindowParams& params, const EstimatorConfig& cfg) {
  RectBracket out;
  out.low = 0.5 - 1.0 / kPi;
  out.high = 0.5 + kPi / 4.0;
  out.estimate = error_constant(Window(WindowKind::Rect, params), cfg);
  const double v = out.estimate.value;
  const double s = out.estimate.tail_slack;
  if (v + s < out.low || v - s > out.high) {
    throw std::runtime_error("error_constant_rect_bracket: estimate outside [1/2 - 1/pi, 1/2 + pi/4]");
  }
  return out;
}

std::complex<double> rect_aliasing_closed_form(const WindowParams& params, int n, double x) {
  const double u = static_cast<double>(n) / params.N1;
  const std::complex<double> i(0.0, 1.0);
  return 2.0 * kPi * i * u / (1.0 - std::exp(-2.0 * kPi * i * u)) *
             std::exp(-2.0 * kPi * i * static_cast<double>(n) * x) -
         1.0;
}

}  // namespace nfftlab
