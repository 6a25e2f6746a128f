#include "hunter/sonic.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "hunter/errors.hpp"

namespace hunter {

namespace {
constexpr double kPi = std::numbers::pi;
}

NormalFormParams characteristic_params_at_sonic(const GammaParams& params,
                                                const SonicPointData& sp) {
  const double g = params.gamma;
  const double tg = 2.0 - g;
  const double w0 = sp.omega0;
  const double yw = sp.y_star * w0;

  NormalFormParams nf;
  nf.a = (2.0 * tg + (g - 3.0) * (w0 + (g - 1.0))) / (4.0 * yw);
  nf.b = -(g + 1.0) / (4.0 * sp.rho0);
  nf.c = sp.rho0 / (4.0 * yw * yw) *
             (-(g + 3.0) * w0 * w0 + (-2.0 * g * g + g + 3.0) * w0 +
              tg * (g - 1.0) * (g - 1.0)) -
         sp.rho0 * sp.rho0 / (4.0 * yw * yw) *
             (4.0 * kPi / (4.0 - 3.0 * g) * (4.0 - 3.0 * g - 2.0 * w0));
  nf.d = (3.0 * (g - 1.0) + (g - 3.0) * (w0 + (g - 1.0))) / (4.0 * yw);

  const double disc = (nf.a + nf.d) * (nf.a + nf.d) - 4.0 * nf.b * nf.c;
  if (disc < 0.0) {
    throw BranchLostError(
        "characteristic quadratic has no real root at eps = " +
        std::to_string(sp.eps));
  }
  nf.U = (-(nf.a + nf.d) + std::sqrt(disc)) / (2.0 * nf.b);
  nf.a_plus_bU = nf.a + nf.b * nf.U;
  if (nf.a_plus_bU == 0.0) {
    throw DegenerateBranchError("a + bU vanished at the sonic point");
  }
  nf.kappa = (nf.d + nf.b * nf.U) / nf.a_plus_bU;
  const double nearest = std::round(nf.kappa);
  nf.kappa_admissible =
      !(nearest <= -2.0 && std::abs(nf.kappa - nearest) < 1e-9);
  return nf;
}

SonicPointData solve_sonic(const GammaParams& params, double eps) {
  const double g = params.gamma;
  if (g <= 1.0) throw DomainError("solve_sonic requires gamma > 1");
  const double tg = 2.0 - g;

  SonicPointData sp;
  sp.eps = eps;
  if (!(eps > -1.0)) {
    throw DomainError("eps must exceed -1, got " + std::to_string(eps));
  }
  sp.omega0 = tg / (1.0 + eps);
  if (!(sp.omega0 > 0.0)) {
    throw DomainError("omega0 <= 0 at eps = " + std::to_string(eps));
  }
  const double w0 = sp.omega0;

  // p0 from the density sonic condition.
  const double mass_factor = 2.0 * w0 * w0 + (g - 1.0) * w0 + tg * (g - 1.0);
  if (!(mass_factor > 0.0)) {
    throw DomainError("nonpositive density branch at eps = " +
                      std::to_string(eps));
  }
  sp.p0 = std::pow(g, 1.0 / tg) / std::pow(w0, 2.0 / tg) *
          std::pow((4.0 - 3.0 * g) / (4.0 * kPi) * mass_factor / w0, 1.0 / tg);

  // y* from the sound-speed sonic condition.
  sp.y_star = std::pow(g, tg / 2.0) *
              std::pow(sp.p0, (g - 1.0) * tg / 2.0) / std::pow(w0, tg);

  sp.rho0 = sp.p0 * std::pow(sp.y_star, -params.alpha());
  sp.u0 = sp.y_star * (w0 - tg);

  // LPH branch: closed-form root U, then R through the U<->R map and W
  // through the three-term identity.
  const NormalFormParams nf = characteristic_params_at_sonic(params, sp);
  sp.R = (nf.U * sp.y_star * w0 / sp.rho0 - (w0 + g - 1.0)) / w0;
  sp.W = 4.0 - 3.0 * g - 3.0 * w0 - w0 * sp.R;
  sp.rho1 = sp.rho0 * sp.R / sp.y_star;
  sp.u1 = sp.W + sp.u0 / sp.y_star;
  return sp;
}

NormalFormParams origin_params(double rho_center) {
  if (!(rho_center > 0.0)) {
    throw DomainError("origin normal form requires rho_center > 0");
  }
  NormalFormParams nf;
  nf.a = rho_center;
  nf.b = 0.0;
  nf.c = 2.0 * rho_center;
  nf.d = 2.0 * rho_center;
  nf.U = -2.0 / 3.0;
  nf.a_plus_bU = rho_center;
  nf.kappa = 2.0;
  nf.kappa_admissible = true;
  return nf;
}

double r_quadratic_residual(const GammaParams& params, double omega0,
                            double R) {
  const double g = params.gamma;
  if (!(omega0 > 0.0)) throw DomainError("r_quadratic_residual: omega0 <= 0");
  return -(1.0 + g) * omega0 * omega0 * R * R +
         (9.0 - 7.0 * g - 8.0 * omega0) * omega0 * R - 6.0 * omega0 * omega0 +
         (8.0 - 6.0 * g) * omega0 + (-3.0 * g * g + 9.0 * g - 6.0) +
         (4.0 - 3.0 * g) * (2.0 - g) * (1.0 - g) / omega0;
}

}  // namespace hunter
