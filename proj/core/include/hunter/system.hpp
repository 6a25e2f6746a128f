#pragma once

#include <array>

#include "hunter/params.hpp"

namespace hunter {

/// Self-similar unknowns (rho, u) at a point y.
struct State {
  double rho;
  double u;
};

/// Exterior variables: p = y^(2/(2-gamma)) rho, w = u/y + (2-gamma).
struct PWState {
  double p;
  double w;
};

/// Enthalpy variables: w_enth = (gamma/(gamma-1)) rho^(gamma-1).
struct EnthalpyState {
  double w_enth;
  double u;
};

/// D(y) = (u + (2-gamma) y)^2 - gamma rho^(gamma-1).
/// Negative in the subsonic interior, positive in the supersonic exterior.
double sonic_discriminant(const GammaParams& params, double y, const State& s);

inline constexpr double kDefaultSonicTol = 1e-9;

/// Right-hand side (rho', u') of the self-similar system.
/// Throws SonicSingular when |D| <= tol_sonic and OriginSingular for y <= 0.
std::array<double, 2> rhs_rho_u(const GammaParams& params, double y,
                                const State& s,
                                double tol_sonic = kDefaultSonicTol);

/// Right-hand side (p', w') in exterior variables at z.
std::array<double, 2> rhs_pw(const GammaParams& params, double z,
                             const PWState& s,
                             double tol_sonic = kDefaultSonicTol);

PWState to_pw(const GammaParams& params, double y, const State& s);
State from_pw(const GammaParams& params, double z, const PWState& s);

EnthalpyState to_enthalpy(const GammaParams& params, const State& s);
State from_enthalpy(const GammaParams& params, const EnthalpyState& s);

/// Residual A*ds + B of the (rho, u) system; zero iff ds solves it at (y, s).
std::array<double, 2> residual(const GammaParams& params, double y,
                               const State& s,
                               const std::array<double, 2>& ds);

/// Coefficient matrix A and inhomogeneity B of the (rho, u) system.
struct SystemMatrices {
  std::array<std::array<double, 2>, 2> A;
  std::array<double, 2> B;
};
SystemMatrices system_matrices(const GammaParams& params, double y,
                               const State& s);

}  // namespace hunter
