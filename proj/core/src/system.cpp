#include "hunter/system.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "hunter/errors.hpp"

namespace hunter {

namespace {
constexpr double kPi = std::numbers::pi;

std::array<double, 2> solve2x2(const std::array<std::array<double, 2>, 2>& A,
                               const std::array<double, 2>& rhs) {
  const double det = A[0][0] * A[1][1] - A[0][1] * A[1][0];
  return {(rhs[0] * A[1][1] - rhs[1] * A[0][1]) / det,
          (A[0][0] * rhs[1] - A[1][0] * rhs[0]) / det};
}
}  // namespace

double sonic_discriminant(const GammaParams& params, double y, const State& s) {
  const double g = params.gamma;
  const double f = s.u + (2.0 - g) * y;
  return f * f - g * std::pow(s.rho, g - 1.0);
}

SystemMatrices system_matrices(const GammaParams& params, double y,
                               const State& s) {
  const double g = params.gamma;
  const double f = s.u + (2.0 - g) * y;
  SystemMatrices m;
  m.A = {{{f, s.rho}, {g * std::pow(s.rho, g - 2.0), f}}};
  m.B = {2.0 * s.rho * (s.u + y) / y,
         (g - 1.0) * s.u + 4.0 * kPi / (4.0 - 3.0 * g) * s.rho * f};
  return m;
}

std::array<double, 2> rhs_rho_u(const GammaParams& params, double y,
                                const State& s, double tol_sonic) {
  if (y <= 0.0) throw OriginSingularError("rhs_rho_u requires y > 0");
  const double D = sonic_discriminant(params, y, s);
  if (std::abs(D) <= tol_sonic) {
    throw SonicSingularError("sonic discriminant " + std::to_string(D) +
                             " within tolerance at y = " + std::to_string(y));
  }
  const SystemMatrices m = system_matrices(params, y, s);
  return solve2x2(m.A, {-m.B[0], -m.B[1]});
}

std::array<double, 2> rhs_pw(const GammaParams& params, double z,
                             const PWState& s, double tol_sonic) {
  if (z <= 0.0) throw OriginSingularError("rhs_pw requires z > 0");
  const double g = params.gamma;
  const double tg = 2.0 - g;
  const double p = s.p;
  const double w = s.w;
  // Coefficient matrix and inhomogeneity of the exterior-variable system.
  const std::array<std::array<double, 2>, 2> E = {
      {{w * z, p * z},
       {g / (std::pow(z, g / tg) * std::pow(p, 2.0 - g)), w * z}}};
  const double zinv = std::pow(z, -2.0 / tg);
  const std::array<double, 2> F = {
      (4.0 - 3.0 * g) / tg * p * (w - tg),
      w * (w - tg) + (g - 1.0) * (w - tg) +
          zinv * (4.0 * kPi / (4.0 - 3.0 * g) * p * w -
                  2.0 * g / tg * std::pow(p, g - 1.0))};
  const double det = E[0][0] * E[1][1] - E[0][1] * E[1][0];
  // det E equals the sonic discriminant expressed in these variables.
  if (std::abs(det) <= tol_sonic) {
    throw SonicSingularError("transformed discriminant within tolerance at z = " +
                             std::to_string(z));
  }
  return solve2x2(E, {-F[0], -F[1]});
}

PWState to_pw(const GammaParams& params, double y, const State& s) {
  if (y <= 0.0) throw DomainError("to_pw requires y > 0");
  return {std::pow(y, params.alpha()) * s.rho,
          s.u / y + params.two_minus_gamma()};
}

State from_pw(const GammaParams& params, double z, const PWState& s) {
  if (z <= 0.0) throw DomainError("from_pw requires z > 0");
  return {s.p * std::pow(z, -params.alpha()),
          z * (s.w - params.two_minus_gamma())};
}

EnthalpyState to_enthalpy(const GammaParams& params, const State& s) {
  const double g = params.gamma;
  if (g <= 1.0) throw DomainError("enthalpy variables require gamma > 1");
  return {g / (g - 1.0) * std::pow(s.rho, g - 1.0), s.u};
}

State from_enthalpy(const GammaParams& params, const EnthalpyState& s) {
  const double g = params.gamma;
  if (g <= 1.0) throw DomainError("enthalpy variables require gamma > 1");
  return {std::pow((g - 1.0) / g * s.w_enth, 1.0 / (g - 1.0)), s.u};
}

std::array<double, 2> residual(const GammaParams& params, double y,
                               const State& s,
                               const std::array<double, 2>& ds) {
  const SystemMatrices m = system_matrices(params, y, s);
  return {m.A[0][0] * ds[0] + m.A[0][1] * ds[1] + m.B[0],
          m.A[1][0] * ds[0] + m.A[1][1] * ds[1] + m.B[1]};
}

}  // namespace hunter
