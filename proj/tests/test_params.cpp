#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "hunter/errors.hpp"
#include "hunter/params.hpp"
#include "hunter/system.hpp"

using hunter::derive_params;
using hunter::ExplicitKind;
using hunter::GammaParams;

namespace {

constexpr double kPi = std::numbers::pi;

// 25-digit reference values computed with arbitrary-precision arithmetic
// from the closed forms, independent of the library implementation.
struct Fixture {
  double gamma, k, y_f, mu, nu, theta0;
};
constexpr Fixture kFixtures[] = {
    {1.05, 0.1427963135017766173152919, 1.026011008860548486063505,
     0.3947368421052631578947368, 1.278145731008514873225238,
     3.814025645706111500610913},
    {1.10, 0.1226578577860346718817662, 1.044238597528340185519094,
     0.2777777777777777777777778, 1.215892701568849397346948,
     3.756335600514762812216035},
    {1.15, 0.09839919403680955791250697, 1.05097819592075648527091,
     0.1470588235294117647058824, 1.128047582986182750028239,
     3.688448570614607484735607},
};

}  // namespace

TEST_CASE("constants match high-precision references") {
  for (const Fixture& f : kFixtures) {
    const GammaParams p = derive_params(f.gamma);
    CHECK(p.k == doctest::Approx(f.k).epsilon(1e-14));
    CHECK(p.y_f == doctest::Approx(f.y_f).epsilon(1e-14));
    CHECK(p.mu == doctest::Approx(f.mu).epsilon(1e-14));
    CHECK(p.nu == doctest::Approx(f.nu).epsilon(1e-14));
    CHECK(p.theta0 == doctest::Approx(f.theta0).epsilon(1e-14));
  }
}

TEST_CASE("isothermal endpoint gamma = 1") {
  const GammaParams p = derive_params(1.0);
  CHECK(p.k == doctest::Approx(1.0 / (2.0 * kPi)).epsilon(1e-15));
  CHECK(p.y_f == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(p.mu == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(p.nu == doctest::Approx(std::sqrt(7.0) / 2.0).epsilon(1e-15));
  const hunter::ResidueMatrix rm = hunter::residue_matrix(p);
  CHECK(std::abs(rm.eig1 - std::complex<double>(-0.5, std::sqrt(7.0) / 2.0)) <
        1e-10);
  CHECK(std::abs(rm.eig2 - std::complex<double>(-0.5, -std::sqrt(7.0) / 2.0)) <
        1e-10);
}

TEST_CASE("domain guards") {
  CHECK_THROWS_AS(derive_params(0.99), hunter::DomainError);
  CHECK_THROWS_AS(derive_params(1.2), hunter::DomainError);
  CHECK_THROWS_AS(derive_params(1.3), hunter::DomainError);
  CHECK_NOTHROW(derive_params(1.0));
  CHECK_NOTHROW(derive_params(1.19999));
}

TEST_CASE("identities hold across the gamma range") {
  for (int i = 0; i < 200; ++i) {
    const double g = 1.0 + 0.2 * (i + 0.5) / 200.0;
    const GammaParams p = derive_params(g);
    const double a = p.alpha();
    // k y_f^(-alpha) = (4 - 3 gamma)/(2 pi)
    CHECK(p.k * std::pow(p.y_f, -a) ==
          doctest::Approx((4.0 - 3.0 * g) / (2.0 * kPi)).epsilon(1e-12));
    // gamma k^(gamma-2) = (2-gamma)^2 y_f^alpha / k
    CHECK(g * std::pow(p.k, g - 2.0) ==
          doctest::Approx((2.0 - g) * (2.0 - g) * std::pow(p.y_f, a) / p.k)
              .epsilon(1e-12));
    // sin(theta0) = -nu sqrt(2-gamma)/2 (with the quadrant fixed by theta0)
    CHECK(std::sin(p.theta0) ==
          doctest::Approx(-p.nu * std::sqrt(2.0 - g) / 2.0).epsilon(1e-12));
    // eigenvalue pair solves the characteristic polynomial of the residue
    const hunter::ResidueMatrix rm = hunter::residue_matrix(p);
    const double tr = rm.m[0][0] + rm.m[1][1];
    const double det = rm.m[0][0] * rm.m[1][1] - rm.m[0][1] * rm.m[1][0];
    const std::complex<double> lam(-p.mu, p.nu);
    CHECK(std::abs(lam * lam - tr * lam + det) < 1e-10);
  }
}

TEST_CASE("explicit solutions and their derivatives") {
  for (double g : {1.05, 1.1, 1.15}) {
    const GammaParams p = derive_params(g);
    for (int i = 1; i <= 50; ++i) {
      const double y = 0.1 + 0.1 * i;
      const hunter::State fr =
          hunter::explicit_solution(p, ExplicitKind::Friedman, y);
      CHECK(fr.rho == doctest::Approx(1.0 / (6.0 * kPi)).epsilon(1e-15));
      CHECK(fr.u == doctest::Approx(-2.0 * y / 3.0).epsilon(1e-15));
      const hunter::State ff =
          hunter::explicit_solution(p, ExplicitKind::FarField, y);
      CHECK(ff.rho ==
            doctest::Approx(p.k * std::pow(y, -p.alpha())).epsilon(1e-14));
      CHECK(ff.u == 0.0);

      // Closed-form derivatives agree with central finite differences.
      const double h = 1e-6 * y;
      for (ExplicitKind kind : {ExplicitKind::Friedman, ExplicitKind::FarField}) {
        const auto d = hunter::explicit_solution_derivative(p, kind, y);
        const hunter::State sp = hunter::explicit_solution(p, kind, y + h);
        const hunter::State sm = hunter::explicit_solution(p, kind, y - h);
        CHECK(d[0] == doctest::Approx((sp.rho - sm.rho) / (2.0 * h))
                          .epsilon(1e-8));
        CHECK(d[1] ==
              doctest::Approx((sp.u - sm.u) / (2.0 * h)).epsilon(1e-8));
      }
    }
  }
}

TEST_CASE("explicit solutions satisfy the system exactly") {
  for (double g : {1.05, 1.1, 1.15}) {
    const GammaParams p = derive_params(g);
    for (int i = 1; i <= 50; ++i) {
      const double y = 0.05 + 0.08 * i;
      for (ExplicitKind kind : {ExplicitKind::Friedman, ExplicitKind::FarField}) {
        const hunter::State s = hunter::explicit_solution(p, kind, y);
        const auto ds = hunter::explicit_solution_derivative(p, kind, y);
        const auto r = hunter::residual(p, y, s, ds);
        CHECK(std::abs(r[0]) < 1e-10);
        CHECK(std::abs(r[1]) < 1e-10);
      }
    }
  }
}
