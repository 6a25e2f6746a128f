#pragma once

#include <utility>

#include "hunter/integrate.hpp"
#include "hunter/oscfit.hpp"
#include "hunter/params.hpp"

namespace hunter {

/// Oscillatory tail constants of the Lane-Emden density, plus free-parameter
/// diagnostic refits.
struct TailFit {
  double c2;  // amplitude, > 0
  double d2;  // phase in [0, 2pi)
  double residual_rel;
  double freq_diag;   // best-fit frequency (should match nu)
  double decay_diag;  // best-fit decay exponent (should match mu)
};

class LaneEmdenSolution {
 public:
  LaneEmdenSolution(const GammaParams& params, double y_launch, double y_switch,
                    IntegrationResult inner, IntegrationResult outer)
      : params_(params),
        y_launch_(y_launch),
        y_switch_(y_switch),
        inner_(std::move(inner)),
        outer_(std::move(outer)) {}

  const GammaParams& params() const { return params_; }
  double y_max() const { return outer_.y_end; }
  const IntegrationResult& outer() const { return outer_; }

  double Q0() const { return params_.gamma / (params_.gamma - 1.0); }
  /// (Q, Q') at y; center series below the launch point.
  std::array<double, 2> Q_Qp(double y) const;
  double Q(double y) const { return Q_Qp(y)[0]; }
  double density(double y) const;
  double ustar(double y) const;

  /// Density and velocity from the state of a stored grid point.
  double density_from(double Qv) const;
  double ustar_from(double y, double Qv, double Qpv) const;

 private:
  GammaParams params_;
  double y_launch_, y_switch_;
  IntegrationResult inner_, outer_;
};

/// Integrates the Lane-Emden equation from the center series out to y_max
/// (in log y beyond y = 1). Throws PositivityViolation if Q <= 0 is reached.
LaneEmdenSolution solve_laneemden(const GammaParams& params, double y_max,
                                  double tol);

/// Least-squares tail fit of y^(2/(2-gamma)) rho_Q - k at fixed (mu, nu).
/// Throws FitUnreliable if the residual exceeds 10% of the amplitude or the
/// window covers fewer than 3 oscillation periods.
TailFit fit_tail(const GammaParams& params, const LaneEmdenSolution& le);

/// Fit of the u* tail y^(mu-1) u*; its phase exceeds d2 by theta0.
OscFit fit_ustar_tail(const GammaParams& params, const LaneEmdenSolution& le);

/// Scaled family member (Q_lambda, u_lambda) at y.
std::pair<double, double> scale(const LaneEmdenSolution& le, double lambda,
                                double y);

/// Lane-Emden equation residual Q'' + (2/y) Q' + 4 pi rho(Q) given Q'' from
/// finite data; used for residual checks.
double laneemden_residual(const GammaParams& params, double y, double Qv,
                          double Qpv, double Qppv);

}  // namespace hunter
