#include "nfftlab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

namespace nfftlab {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxIntervals = 50000;

// Kronrod abscissae; odd indices are shared with the 7-point Gauss rule.
constexpr double xgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double wgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double wg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a;
  double b;
  double value;
  double error;  // GK error estimate, not floored
  double floor;  // rounding floor 50 eps int|f|
  int depth;
  std::uint64_t id;
};

Segment gk15(const std::function<double(double)>& f, double a, double b, int depth,
             std::uint64_t id) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double abs_half = std::fabs(half);
  double fv1[7];
  double fv2[7];
  const double fc = f(center);
  double resg = fc * wg[3];
  double resk = fc * wgk[7];
  double resabs = std::fabs(resk);
  for (int j = 0; j < 3; ++j) {
    const int jtw = 2 * j + 1;
    const double absc = half * xgk[jtw];
    const double f1 = f(center - absc);
    const double f2 = f(center + absc);
    fv1[jtw] = f1;
    fv2[jtw] = f2;
    resg += wg[j] * (f1 + f2);
    resk += wgk[jtw] * (f1 + f2);
    resabs += wgk[jtw] * (std::fabs(f1) + std::fabs(f2));
  }
  for (int j = 0; j < 4; ++j) {
    const int jtwm1 = 2 * j;
    const double absc = half * xgk[jtwm1];
    const double f1 = f(center - absc);
    const double f2 = f(center + absc);
    fv1[jtwm1] = f1;
    fv2[jtwm1] = f2;
    resk += wgk[jtwm1] * (f1 + f2);
    resabs += wgk[jtwm1] * (std::fabs(f1) + std::fabs(f2));
  }
  const double reskh = 0.5 * resk;
  double resasc = wgk[7] * std::fabs(fc - reskh);
  for (int j = 0; j < 7; ++j) {
    resasc += wgk[j] * (std::fabs(fv1[j] - reskh) + std::fabs(fv2[j] - reskh));
  }
  resabs *= abs_half;
  resasc *= abs_half;
  double err = std::fabs((resk - resg) * half);
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  if (!std::isfinite(resk)) {
    throw std::domain_error("integrate: integrand returned a non-finite value");
  }
  return Segment{a, b, resk * half, err, 50.0 * kEps * resabs, depth, id};
}

struct WorseFirst {
  bool operator()(const Segment& x, const Segment& y) const {
    if (x.error != y.error) return x.error < y.error;
    return x.id > y.id;
  }
};

QuadratureResult summarize(std::vector<Segment> segs) {
  std::sort(segs.begin(), segs.end(), [](const Segment& x, const Segment& y) { return x.a < y.a; });
  QuadratureResult r;
  for (const auto& s : segs) {
    r.value += s.value;
    r.err_estimate += std::max(s.error, s.floor);
  }
  r.intervals = static_cast<int>(segs.size());
  return r;
}

}  // namespace

void QuadratureConfig::validate() const {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0) || max_depth < 10) {
    throw std::invalid_argument("QuadratureConfig: need abs_tol > 0, rel_tol > 0, max_depth >= 10");
  }
}

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureConfig& cfg) {
  cfg.validate();
  if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) {
    throw std::invalid_argument("integrate: need finite a < b");
  }
  std::uint64_t next_id = 0;
  std::priority_queue<Segment, std::vector<Segment>, WorseFirst> active;
  std::vector<Segment> frozen;
  active.push(gk15(f, a, b, 0, next_id++));

  // Totals are tracked incrementally for the stopping test; the reported result is re-summed
  // left to right so it does not depend on the refinement history.
  double total_value = active.top().value;
  double total_error = active.top().error;

  for (;;) {
    const double tol = std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(total_value));
    if (total_error <= tol || active.empty()) break;
    if (static_cast<int>(active.size() + frozen.size()) >= kMaxIntervals) {
      std::vector<Segment> all = frozen;
      while (!active.empty()) { all.push_back(active.top()); active.pop(); }
      throw QuadratureError("integrate: interval limit reached", summarize(std::move(all)));
    }
    Segment worst = active.top();
    active.pop();
    if (worst.error <= worst.floor) {
      total_error -= worst.error;
      frozen.push_back(worst);
      continue;
    }
    if (worst.depth >= cfg.max_depth) {
      std::vector<Segment> all = frozen;
      all.push_back(worst);
      while (!active.empty()) { all.push_back(active.top()); active.pop(); }
      throw QuadratureError("integrate: max_depth exceeded without convergence",
                            summarize(std::move(all)));
    }
    const double mid = 0.5 * (worst.a + worst.b);
    Segment left = gk15(f, worst.a, mid, worst.depth + 1, next_id++);
    Segment right = gk15(f, mid, worst.b, worst.depth + 1, next_id++);
    total_value += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    active.push(left);
    active.push(right);
  }

  std::vector<Segment> all = std::move(frozen);
  while (!active.empty()) { all.push_back(active.top()); active.pop(); }
  return summarize(std::move(all));
}

}  // namespace nfftlab
