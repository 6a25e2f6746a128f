#include "hunter/params.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "hunter/errors.hpp"
#include "hunter/system.hpp"

namespace hunter {

namespace {
constexpr double kPi = std::numbers::pi;
}

GammaParams derive_params(double gamma) {
  if (!(gamma >= 1.0 && gamma < 1.2)) {
    throw DomainError("gamma must lie in [1, 6/5), got " +
                      std::to_string(gamma));
  }
  GammaParams p;
  p.gamma = gamma;
  const double tg = 2.0 - gamma;
  p.k = std::pow(gamma * (4.0 - 3.0 * gamma) / (2.0 * kPi * tg * tg),
                 1.0 / tg);
  p.y_f = std::sqrt(gamma) / tg *
          std::pow((4.0 - 3.0 * gamma) / (2.0 * kPi), (gamma - 1.0) / 2.0);
  p.mu = (6.0 - 5.0 * gamma) / (2.0 * tg);
  const double disc = -gamma * gamma - 20.0 * gamma + 28.0;
  p.nu = std::sqrt(disc) / (2.0 * tg);
  p.theta0 = std::atan(std::sqrt(disc) / (2.0 + gamma)) + kPi;
  return p;
}

State explicit_solution(const GammaParams& params, ExplicitKind kind,
                        double y) {
  switch (kind) {
    case ExplicitKind::Friedman:
      if (y < 0.0) throw DomainError("Friedman solution requires y >= 0");
      return State{1.0 / (6.0 * kPi), -2.0 * y / 3.0};
    case ExplicitKind::FarField:
      if (y <= 0.0) {
        throw DomainError("far-field density is singular at y = 0");
      }
      return State{params.k * std::pow(y, -params.alpha()), 0.0};
  }
  throw DomainError("unknown explicit solution kind");
}

std::array<double, 2> explicit_solution_derivative(const GammaParams& params,
                                                   ExplicitKind kind,
                                                   double y) {
  switch (kind) {
    case ExplicitKind::Friedman:
      return {0.0, -2.0 / 3.0};
    case ExplicitKind::FarField: {
      if (y <= 0.0) {
        throw DomainError("far-field density is singular at y = 0");
      }
      const double a = params.alpha();
      return {-a * params.k * std::pow(y, -a - 1.0), 0.0};
    }
  }
  throw DomainError("unknown explicit solution kind");
}

ResidueMatrix residue_matrix(const GammaParams& params) {
  const double g = params.gamma;
  const double tg = 2.0 - g;
  ResidueMatrix r;
  r.m = {{{-2.0, -2.0 * params.k / (tg * tg)},
          {2.0 * tg / params.k, (3.0 * g - 2.0) / tg}}};
  // Eigenvalues of the 2x2 via the characteristic quadratic.
  const double tr = r.m[0][0] + r.m[1][1];
  const double det = r.m[0][0] * r.m[1][1] - r.m[0][1] * r.m[1][0];
  const std::complex<double> s =
      std::sqrt(std::complex<double>(tr * tr / 4.0 - det, 0.0));
  r.eig1 = tr / 2.0 + s;
  r.eig2 = tr / 2.0 - s;
  if (r.eig1.imag() < r.eig2.imag()) std::swap(r.eig1, r.eig2);
  return r;
}

}  // namespace hunter
