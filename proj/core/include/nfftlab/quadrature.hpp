#pragma once

#include <functional>
#include <stdexcept>

namespace nfftlab {

struct QuadratureConfig {
  double abs_tol = 1e-13;
  double rel_tol = 1e-12;
  int max_depth = 60;

  void validate() const;
};

struct QuadratureResult {
  double value = 0.0;
  double err_estimate = 0.0;
  int intervals = 0;
};

// Raised when the subdivision cap is reached before the tolerance is met.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, QuadratureResult best)
      : std::runtime_error(what), best_(best) {}
  const QuadratureResult& best() const noexcept { return best_; }

 private:
  QuadratureResult best_;
};

// Global adaptive Gauss-Kronrod 7/15 quadrature of f over [a, b].
// Intervals whose error estimate has reached the rounding floor are frozen, so tolerances
// below the attainable precision end in a rounding-limited result instead of an error.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureConfig& cfg = {});

}  // namespace nfftlab
