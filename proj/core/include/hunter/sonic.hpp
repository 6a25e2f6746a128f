#pragma once

#include "hunter/params.hpp"

namespace hunter {

/// Larson-Penston-Hunter Taylor data at a sonic point, parameterized by the
/// shooting parameter eps through omega0 = (2-gamma)/(1+eps).
struct SonicPointData {
  double eps;
  double omega0;  // w(y*)
  double p0;      // p(y*)
  double y_star;
  double rho0;  // rho(y*)
  double u0;    // u(y*)
  double R;     // y* rho'(y*)/rho0 (log-density slope)
  double W;     // y* w'(y*) (velocity slope)
  double rho1;  // rho'(y*)
  double u1;    // u'(y*)
};

/// Characteristic parameters (a, b, c, d) of the normal form at a singular
/// point, the selected quadratic root U and the resonance index
/// kappa = (d + bU)/(a + bU).
struct NormalFormParams {
  double a, b, c, d;
  double U;
  double kappa;
  double a_plus_bU;
  /// True unless kappa is a negative integer <= -2 (within tolerance).
  bool kappa_admissible;
};

/// Solves the sonic-point conditions for the given eps and selects the
/// Larson-Penston-Hunter branch. Throws BranchLost if the characteristic
/// quadratic has no real root, DomainError if omega0 or the density would be
/// nonpositive.
SonicPointData solve_sonic(const GammaParams& params, double eps);

/// Normal-form characteristic parameters at a sonic point, with U from the
/// closed-form LPH branch (+sqrt root).
NormalFormParams characteristic_params_at_sonic(const GammaParams& params,
                                                const SonicPointData& sp);

/// Normal-form parameters at the regular center: (rho0, 0, 2 rho0, 2 rho0),
/// U = -2/3, kappa = 2.
NormalFormParams origin_params(double rho_center);

/// Value of the quadratic that the log-density slope R satisfies at a sonic
/// point with velocity slope parameter omega0.
double r_quadratic_residual(const GammaParams& params, double omega0, double R);

}  // namespace hunter
