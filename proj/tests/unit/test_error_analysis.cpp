#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "nfftlab/error_analysis.hpp"
#include "nfftlab/reference_data.hpp"
#include "support.hpp"

using namespace nfftlab;
using testing_support::rel_err;
constexpr double kPi = std::numbers::pi;

TEST_CASE("aliasing_function examples") {
  const auto p = WindowParams::make(3, 2.0, 64);
  const Window rect(WindowKind::Rect, p);
  const EstimatorConfig cfg;
  for (double x : {0.0, 0.13 / p.N1, 0.5 / p.N1, 0.77 / p.N1}) {
    CHECK(std::abs(aliasing_function(rect, 0, x, cfg)) < 1e-14);
  }

  const Window sinh(WindowKind::Sinh, p);
  for (double x : {0.1 / p.N1, 0.6 / p.N1}) {
    const auto a = aliasing_function(sinh, 5, x, cfg);
    const auto b = aliasing_function(sinh, 5, x + 1.0 / p.N1, cfg);
    CHECK(std::abs(a - b) < 1e-15);
  }

  // The truncated Rect series against its closed form; the untruncated remainder is bounded
  // by the Rect tail slack.
  const int n = p.N / 4;
  const double x = 0.5 / p.N1;
  const auto truncated = aliasing_function(rect, n, x, cfg);
  const auto exact = rect_aliasing_closed_form(p, n, x);
  CHECK(std::abs(truncated - exact) <= aliasing_tail_slack(rect, n, cfg.r_max));
  CHECK(std::abs(truncated - exact) < 1e-2);
}

TEST_CASE("error_constant examples") {
  const auto check = [](WindowKind k, double sigma, int m, double ref) {
    const auto e = error_constant(Window(k, WindowParams::make(m, sigma, 128)));
    CHECK(rel_err(e.value, ref) <= 0.02);
    CHECK(e.value > 0.0);
    CHECK(e.tail_slack >= 0.0);
  };
  check(WindowKind::CKB, 1.25, 2, 3.8755e-2);
  check(WindowKind::Sinh, 2.0, 6, 4.6553e-10);
  check(WindowKind::KB, 1.5, 4, 1.5444e-5);
}

TEST_CASE("Rect constant is the closed-form edge value") {
  for (double sigma : {1.25, 1.5, 2.0}) {
    const auto p = WindowParams::make(2, sigma, 64);
    const auto e = error_constant(Window(WindowKind::Rect, p));
    CHECK(e.n_argmax == -p.N / 2);
    CHECK(e.tail_slack == 0.0);
    // Approaching x -> 0+ along the closed form reaches the same sup.
    const auto near = rect_aliasing_closed_form(p, -p.N / 2, 1e-9 / p.N1);
    CHECK(std::fabs(std::abs(near) - e.value) < 1e-7);
    for (int n = -p.N / 2; n < p.N / 2; ++n) {
      if (n == 0) continue;
      for (double y : {0.01, 0.3, 0.5, 0.9}) {
        CHECK(std::abs(rect_aliasing_closed_form(p, n, y / p.N1)) <= e.value + 1e-15);
      }
    }
  }
  CHECK(rect_aliasing_sup(WindowParams::make(2, 2.0, 64), 0) == 0.0);
}

TEST_CASE("Rect bracket holds where the closed form stays below 1/2 + pi/4") {
  for (double sigma : {1.5, 2.0}) {
    const auto b = error_constant_rect_bracket(WindowParams::make(3, sigma, 64));
    CHECK(b.low == doctest::Approx(0.18169).epsilon(1e-5));
    CHECK(b.high == doctest::Approx(1.28540).epsilon(1e-5));
    CHECK(b.estimate.value > b.low);
    CHECK(b.estimate.value < b.high);
  }
}

TEST_CASE("series truncation and grid convergence") {
  for (double sigma : {1.25, 1.5, 2.0}) {
    for (int m = 2; m <= 6; ++m) {
      const auto p = WindowParams::make(m, sigma, 64);
      for (auto k : {WindowKind::CKB, WindowKind::KB, WindowKind::Sinh}) {
        const Window w(k, p);
        EstimatorConfig base{32, 1024, true, EstimatorMethod::Series};
        const auto e0 = error_constant(w, base);
        const auto e1 = error_constant(w, EstimatorConfig{64, 1024, true, EstimatorMethod::Series});
        const auto e2 = error_constant(w, EstimatorConfig{32, 2048, true, EstimatorMethod::Series});
        CHECK(std::fabs(e1.value - e0.value) < e0.tail_slack);
        CHECK(rel_err(e2.value, e0.value) < 1e-3);
      }
    }
  }
}

TEST_CASE("N stability between 64 and 256") {
  for (double sigma : {1.25, 1.5, 2.0}) {
    for (int m = 2; m <= 6; ++m) {
      for (auto k : {WindowKind::CKB, WindowKind::KB, WindowKind::Sinh}) {
        const double a = error_constant(Window(k, WindowParams::make(m, sigma, 64))).value;
        const double b = error_constant(Window(k, WindowParams::make(m, sigma, 256))).value;
        CHECK(rel_err(a, b) < 0.01);
      }
    }
  }
}

TEST_CASE("monotone decay in m") {
  for (double sigma : {1.25, 1.5, 2.0}) {
    for (auto k : {WindowKind::CKB, WindowKind::KB, WindowKind::Sinh}) {
      double prev = 1e300;
      for (int m = 2; m <= 6; ++m) {
        const double v = error_constant(Window(k, WindowParams::make(m, sigma, 64))).value;
        CHECK(v < prev);
        prev = v;
      }
    }
  }
}

TEST_CASE("estimator config validation") {
  const Window w(WindowKind::Sinh, WindowParams::make(2, 2.0, 64));
  CHECK_THROWS_AS(error_constant(w, EstimatorConfig{7, 2048, true}), std::invalid_argument);
  CHECK_THROWS_AS(error_constant(w, EstimatorConfig{64, 255, true}), std::invalid_argument);
  CHECK_THROWS_AS(aliasing_function(w, 32, 0.0, EstimatorConfig{}), std::invalid_argument);
}

TEST_CASE("truncated series against the dual form") {
  for (double sigma : {1.25, 2.0}) {
    for (int m : {2, 4}) {
      const auto p = WindowParams::make(m, sigma, 64);
      for (auto k : {WindowKind::CKB, WindowKind::KB, WindowKind::Sinh, WindowKind::CCosh}) {
        const Window w(k, p);
        for (int n : {-32, 0, 7, 31}) {
          const double slack = aliasing_tail_slack(w, n, 64);
          for (double y : {0.05, 0.37, 0.5, 0.81}) {
            const auto a = aliasing_function(w, n, y / p.N1);
            const auto b = aliasing_function_exact(w, n, y / p.N1);
            CHECK(std::abs(a - b) <= slack + 1e-12);
            CHECK(std::abs(aliasing_function_exact(w, n, (y + 3.0) / p.N1) - b) < 1e-13);
          }
        }
      }
    }
  }
  const auto p = WindowParams::make(3, 2.0, 64);
  const Window rect(WindowKind::Rect, p);
  const auto exact = aliasing_function_exact(rect, 16, 0.3 / p.N1);
  CHECK(std::abs(exact - rect_aliasing_closed_form(p, 16, 0.3 / p.N1)) < 1e-14);
}

TEST_CASE("Poisson and series estimates agree within the series slack") {
  for (double sigma : {1.25, 2.0}) {
    for (int m : {2, 3, 5}) {
      const auto p = WindowParams::make(m, sigma, 64);
      for (auto k : {WindowKind::CKB, WindowKind::KB, WindowKind::Sinh, WindowKind::CExp}) {
        const Window w(k, p);
        const auto exact = error_constant(w);
        EstimatorConfig series_cfg;
        series_cfg.method = EstimatorMethod::Series;
        const auto series = error_constant(w, series_cfg);
        CHECK(exact.config.method == EstimatorMethod::Poisson);
        CHECK(exact.tail_slack < 1e-10);
        CHECK(std::fabs(exact.value - series.value) <= series.tail_slack + exact.tail_slack);
      }
    }
  }
}

TEST_CASE("jump kinds reach their sup as x -> 0+") {
  // One-sided limits at the grid origin count towards the sup.
  const auto p = WindowParams::make(2, 2.0, 64);
  for (auto k : {WindowKind::KB, WindowKind::Exp}) {
    const Window w(k, p);
    const auto e = error_constant(w);
    for (int n : {-32, 0, 17, 31}) {
      for (double y : {1e-9, 1.0 - 1e-9}) {
        CHECK(std::abs(aliasing_function_exact(w, n, y / p.N1)) <= e.value + 1e-7);
      }
    }
  }
}

TEST_CASE("estimator method names") {
  CHECK(parse_estimator_method("poisson") == EstimatorMethod::Poisson);
  CHECK(parse_estimator_method("series") == EstimatorMethod::Series);
  CHECK(to_string(EstimatorMethod::Series) == "series");
  CHECK_THROWS_AS(parse_estimator_method("exact"), std::invalid_argument);
}
