#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "hunter/errors.hpp"
#include "hunter/params.hpp"
#include "hunter/system.hpp"

using hunter::derive_params;
using hunter::GammaParams;
using hunter::PWState;
using hunter::State;

TEST_CASE("rhs solves the quasilinear system (Cramer oracle)") {
  const GammaParams p = derive_params(1.1);
  const State samples[] = {{0.05, -0.3}, {0.4, -0.8}, {1.2, 0.1}, {0.01, -0.05}};
  for (double y : {0.2, 0.7, 1.5, 3.0}) {
    for (const State& s : samples) {
      const auto ds = hunter::rhs_rho_u(p, y, s);
      // The residual must vanish by construction of the solve.
      const auto r = hunter::residual(p, y, s, ds);
      CHECK(std::abs(r[0]) < 1e-12 * (1.0 + std::abs(ds[0])));
      CHECK(std::abs(r[1]) < 1e-12 * (1.0 + std::abs(ds[1])));
      // Independent Cramer solve of A ds = -B.
      const auto [A, B] = hunter::system_matrices(p, y, s);
      const double det = A[0][0] * A[1][1] - A[0][1] * A[1][0];
      const double d0 = (-B[0] * A[1][1] + B[1] * A[0][1]) / det;
      const double d1 = (-B[1] * A[0][0] + B[0] * A[1][0]) / det;
      CHECK(ds[0] == doctest::Approx(d0).epsilon(1e-12));
      CHECK(ds[1] == doctest::Approx(d1).epsilon(1e-12));
    }
  }
}

TEST_CASE("discriminant equals det A up to a positive factor sign") {
  const GammaParams p = derive_params(1.1);
  for (double y : {0.3, 1.0, 2.5}) {
    for (const State s : {State{0.05, -0.3}, State{0.8, -1.2}}) {
      const double D = hunter::sonic_discriminant(p, y, s);
      const auto [A, B] = hunter::system_matrices(p, y, s);
      (void)B;
      const double det = A[0][0] * A[1][1] - A[0][1] * A[1][0];
      CHECK(D * det > 0.0);
    }
  }
}

TEST_CASE("far-field point y_f is sonic") {
  for (double g : {1.05, 1.1, 1.15}) {
    const GammaParams p = derive_params(g);
    const State ff{p.k * std::pow(p.y_f, -p.alpha()), 0.0};
    CHECK(std::abs(hunter::sonic_discriminant(p, p.y_f, ff)) < 1e-13);
    CHECK_THROWS_AS(hunter::rhs_rho_u(p, p.y_f, ff),
                    hunter::SonicSingularError);
  }
}

TEST_CASE("origin is rejected") {
  const GammaParams p = derive_params(1.1);
  CHECK_THROWS_AS(hunter::rhs_rho_u(p, 0.0, State{0.1, 0.0}),
                  hunter::OriginSingularError);
  CHECK_THROWS_AS(hunter::rhs_rho_u(p, -0.5, State{0.1, 0.0}),
                  hunter::OriginSingularError);
}

TEST_CASE("pw and enthalpy transforms round-trip") {
  const GammaParams p = derive_params(1.1);
  for (double y : {0.2, 1.0, 4.0}) {
    const State s{0.3, -0.7};
    const PWState pw = hunter::to_pw(p, y, s);
    const State back = hunter::from_pw(p, y, pw);
    CHECK(back.rho == doctest::Approx(s.rho).epsilon(1e-14));
    CHECK(back.u == doctest::Approx(s.u).epsilon(1e-14));
    const auto en = hunter::to_enthalpy(p, s);
    const State back2 = hunter::from_enthalpy(p, en);
    CHECK(back2.rho == doctest::Approx(s.rho).epsilon(1e-13));
    CHECK(back2.u == doctest::Approx(s.u).epsilon(1e-13));
  }
}

TEST_CASE("pw rhs agrees with the chain rule applied to rhs_rho_u") {
  const GammaParams p = derive_params(1.1);
  const double a = p.alpha();
  for (double z : {1.5, 2.0, 3.5}) {
    const State s{0.02, -0.1};
    const auto ds = hunter::rhs_rho_u(p, z, s);
    const PWState pw = hunter::to_pw(p, z, s);
    const auto dpw = hunter::rhs_pw(p, z, pw);
    // p = z^alpha rho, w = u/z + (2-gamma)
    const double dp = a * std::pow(z, a - 1.0) * s.rho + std::pow(z, a) * ds[0];
    const double dw = ds[1] / z - s.u / (z * z);
    CHECK(dpw[0] == doctest::Approx(dp).epsilon(1e-11));
    CHECK(dpw[1] == doctest::Approx(dw).epsilon(1e-11));
  }
}

TEST_CASE("far-field solution is the fixed point of the pw system") {
  for (double g : {1.05, 1.1, 1.15}) {
    const GammaParams p = derive_params(g);
    const PWState fixed{p.k, 2.0 - g};
    for (double z : {1.3 * p.y_f, 2.0, 5.0}) {
      const auto dpw = hunter::rhs_pw(p, z, fixed);
      CHECK(std::abs(dpw[0]) < 1e-12);
      CHECK(std::abs(dpw[1]) < 1e-12);
    }
  }
}

TEST_CASE("friedman rhs matches its closed-form derivative") {
  const GammaParams p = derive_params(1.1);
  for (double y : {0.3, 0.6, 2.0}) {
    const State s = hunter::explicit_solution(p, hunter::ExplicitKind::Friedman, y);
    const auto ds = hunter::rhs_rho_u(p, y, s);
    CHECK(std::abs(ds[0]) < 1e-12);
    CHECK(ds[1] == doctest::Approx(-2.0 / 3.0).epsilon(1e-12));
  }
}
