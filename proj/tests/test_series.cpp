#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <vector>

#include "hunter/errors.hpp"
#include "hunter/params.hpp"
#include "hunter/series.hpp"
#include "hunter/sonic.hpp"
#include "hunter/system.hpp"

using hunter::derive_params;
using hunter::GammaParams;
using hunter::SeriesPair;
using hunter::TaylorSolution;
using hunter::TruncatedSeries;

namespace {

double binom_coeff(double alpha, int n) {
  double c = 1.0;
  for (int j = 0; j < n; ++j) c *= (alpha - j) / (j + 1);
  return c;
}

}  // namespace

TEST_CASE("series arithmetic identities") {
  const TruncatedSeries one = TruncatedSeries::constant(1.0, 8);
  const TruncatedSeries t = TruncatedSeries::variable(8);
  const TruncatedSeries a = one + t;  // 1 + t

  SUBCASE("product telescopes") {
    const TruncatedSeries prod = a * (one - t);  // 1 - t^2
    CHECK(prod[0] == doctest::Approx(1.0));
    CHECK(prod[1] == doctest::Approx(0.0));
    CHECK(prod[2] == doctest::Approx(-1.0));
    for (int i = 3; i <= 8; ++i) CHECK(prod[i] == doctest::Approx(0.0));
  }
  SUBCASE("reciprocal inverts") {
    const TruncatedSeries r = a.reciprocal();
    const TruncatedSeries prod = a * r;
    CHECK(prod[0] == doctest::Approx(1.0));
    for (int i = 1; i <= 8; ++i)
      CHECK(prod[i] == doctest::Approx(0.0).epsilon(1e-14));
    // Geometric series coefficients (-1)^n.
    for (int i = 0; i <= 8; ++i)
      CHECK(r[i] == doctest::Approx((i % 2 == 0) ? 1.0 : -1.0));
  }
  SUBCASE("division") {
    const TruncatedSeries q = (a * a) / a;
    for (int i = 0; i <= 8; ++i)
      CHECK(q[i] == doctest::Approx(a[i]).epsilon(1e-14));
  }
  SUBCASE("pow matches the binomial series") {
    for (double alpha : {0.5, -2.0, 1.7, 3.0}) {
      const TruncatedSeries pw = a.pow(alpha);
      for (int n = 0; n <= 8; ++n)
        CHECK(pw[n] == doctest::Approx(binom_coeff(alpha, n)).epsilon(1e-13));
    }
  }
  SUBCASE("pow composes") {
    const TruncatedSeries half = a.pow(0.5);
    const TruncatedSeries sq = half * half;
    for (int i = 0; i <= 8; ++i)
      CHECK(sq[i] == doctest::Approx(a[i]).epsilon(1e-13));
  }
  SUBCASE("derivative and shift") {
    const TruncatedSeries d = (t * t * 3.0 + t).derivative();  // 1 + 6t
    CHECK(d[0] == doctest::Approx(1.0));
    CHECK(d[1] == doctest::Approx(6.0));
    const TruncatedSeries s = (t * t).shift_down();
    CHECK(s[0] == doctest::Approx(0.0));
    CHECK(s[1] == doctest::Approx(1.0));
  }
  SUBCASE("horner evaluation") {
    const TruncatedSeries q = a.pow(-1.0);
    const double x = 0.3;
    CHECK(q.eval(x) ==
          doctest::Approx((1.0 - std::pow(-x, 9)) / (1.0 + x)).epsilon(1e-13));
    // eval_derivative vs finite difference.
    const double h = 1e-6;
    CHECK(q.eval_derivative(x) ==
          doctest::Approx((q.eval(x + h) - q.eval(x - h)) / (2.0 * h))
              .epsilon(1e-7));
  }
}

TEST_CASE("sonic series re-expands the far-field solution at eps = 0") {
  // At eps = 0 the sonic Taylor data must coincide with the binomial
  // re-expansion of rho = k y^(-alpha) about y_f, and u identically 0.
  for (double g : {1.05, 1.1, 1.15}) {
    const GammaParams p = derive_params(g);
    const hunter::SonicPointData sp = hunter::solve_sonic(p, 0.0);
    const TaylorSolution ts = hunter::taylor_at_sonic(p, sp, 10);
    const double a = p.alpha();
    const double rho_f = p.k * std::pow(p.y_f, -a);
    for (int n = 0; n <= 10; ++n) {
      const double ref = rho_f * binom_coeff(-a, n) * std::pow(p.y_f, -n);
      CHECK(std::abs(ts.coeffs_rho[n] - ref) < 1e-9 * std::abs(ref));
      CHECK(std::abs(ts.coeffs_u[n]) < 1e-9);
    }
  }
}

TEST_CASE("sonic series residual decays spectrally") {
  const GammaParams p = derive_params(1.1);
  const hunter::SonicPointData sp = hunter::solve_sonic(p, 0.05);
  const int N = 10;
  const TaylorSolution ts = hunter::taylor_at_sonic(p, sp, N);
  SeriesPair cand{TruncatedSeries(ts.coeffs_rho), TruncatedSeries(ts.coeffs_u)};
  const SeriesPair res =
      hunter::euler_poisson_series_residual(p, sp.y_star, cand);
  // All solved orders must vanish; the scale is set by the low-order
  // residual of a deliberately unsolved candidate.
  SeriesPair bad = cand;
  bad.a.at(2) += 1.0;
  const SeriesPair res_bad =
      hunter::euler_poisson_series_residual(p, sp.y_star, bad);
  const double scale = std::abs(res_bad.a[1]) + std::abs(res_bad.b[1]) + 1.0;
  for (int m = 0; m < N - 1; ++m) {
    CHECK(std::abs(res.a[m]) < 1e-9 * scale);
    CHECK(std::abs(res.b[m]) < 1e-9 * scale);
  }
}

TEST_CASE("origin series reproduces the Friedman solution exactly") {
  const GammaParams p = derive_params(1.1);
  const double rho_c = 1.0 / (6.0 * std::numbers::pi);
  const TaylorSolution ts = hunter::taylor_at_origin(p, rho_c, 8);
  CHECK(ts.coeffs_rho[0] == doctest::Approx(rho_c).epsilon(1e-14));
  CHECK(ts.coeffs_u[1] == doctest::Approx(-2.0 / 3.0).epsilon(1e-14));
  for (int n = 1; n <= 8; ++n)
    CHECK(std::abs(ts.coeffs_rho[n]) < 1e-12 * rho_c);
  for (int n = 0; n <= 8; ++n) {
    if (n == 1) continue;
    CHECK(std::abs(ts.coeffs_u[n]) < 1e-12);
  }
}

TEST_CASE("origin series boundary data and residual") {
  const GammaParams p = derive_params(1.1);
  const TaylorSolution ts = hunter::taylor_at_origin(p, 0.3, 10);
  CHECK(ts.coeffs_rho[0] == doctest::Approx(0.3));
  CHECK(std::abs(ts.coeffs_rho[1]) < 1e-13);
  CHECK(std::abs(ts.coeffs_u[0]) < 1e-13);
  CHECK(ts.coeffs_u[1] == doctest::Approx(-2.0 / 3.0).epsilon(1e-14));
  SeriesPair cand{TruncatedSeries(ts.coeffs_rho), TruncatedSeries(ts.coeffs_u)};
  const SeriesPair res = hunter::euler_poisson_series_residual(p, 0.0, cand);
  for (int m = 0; m < 9; ++m) {
    CHECK(std::abs(res.a[m]) < 1e-10);
    CHECK(std::abs(res.b[m]) < 1e-10);
  }
}

TEST_CASE("taylor evaluation matches the ODE locally") {
  const GammaParams p = derive_params(1.1);
  const hunter::SonicPointData sp = hunter::solve_sonic(p, 0.05);
  const TaylorSolution ts = hunter::taylor_at_sonic(p, sp, 12);
  const double y = sp.y_star - 1e-3 * p.y_f;
  const auto [s, ds] = ts.evaluate(y);
  const auto r = hunter::residual(p, y, s, ds);
  CHECK(std::abs(r[0]) < 1e-9);
  CHECK(std::abs(r[1]) < 1e-9);
}

TEST_CASE("trust region is enforced") {
  const GammaParams p = derive_params(1.1);
  const hunter::SonicPointData sp = hunter::solve_sonic(p, 0.05);
  const TaylorSolution ts = hunter::taylor_at_sonic(p, sp, 10);
  CHECK_THROWS_AS(ts.evaluate(sp.y_star + 10.0 * ts.radius_estimate),
                  hunter::TrustRegionError);
}

TEST_CASE("resonant synthetic system is detected") {
  // u1' = res_a, t u2' - 2 u2 + t = res_b has kappa = -2: the order-2 solve
  // is rank-deficient and must be reported, not silently mangled.
  auto residual_fn = [](const SeriesPair& s) {
    SeriesPair r;
    r.a = s.a.derivative();
    const TruncatedSeries t = TruncatedSeries::variable(s.b.order());
    r.b = t * s.b.derivative() - s.b * 2.0 + t;
    return r;
  };
  SeriesPair seed;
  seed.a = TruncatedSeries(std::vector<double>{1.0, 0.0, 0.0, 0.0, 0.0});
  seed.b = TruncatedSeries(std::vector<double>{0.0, 1.0, 0.0, 0.0, 0.0});
  CHECK_THROWS_AS(hunter::solve_singular_series(residual_fn, seed, 4),
                  hunter::Error);
  try {
    hunter::solve_singular_series(residual_fn, seed, 4);
  } catch (const hunter::Error& e) {
    const bool resonant = e.code() == hunter::ErrorCode::Resonant ||
                          e.code() == hunter::ErrorCode::ResonantOrder;
    CHECK(resonant);
  }
}

TEST_CASE("radius estimate is positive and finite") {
  const GammaParams p = derive_params(1.1);
  for (double eps : {0.0, 0.05, 0.2}) {
    const hunter::SonicPointData sp = hunter::solve_sonic(p, eps);
    const TaylorSolution ts = hunter::taylor_at_sonic(p, sp, 10);
    CHECK(ts.radius_estimate > 0.0);
    CHECK(std::isfinite(ts.radius_estimate));
  }
}
