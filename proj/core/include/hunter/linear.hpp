#pragma once

#include <array>

#include "hunter/oscfit.hpp"
#include "hunter/params.hpp"

namespace hunter {

/// Parameters of 2F1(a, conj(a); c; z) with a = a_re + i a_im and real c.
struct HypergeometricArgs {
  double a_re, a_im;
  double c;
  double z;
};

/// Real-valued Gauss series for a conjugate parameter pair, summed by the
/// real term recurrence. Throws ConvergenceFailure past 1e5 terms,
/// DomainError for |z| >= 1 or c a nonpositive integer.
double gauss_2f1_conjugate(const HypergeometricArgs& args);

struct HomValue {
  double p, w;    // (p_hom, omega_hom)
  double dp, dw;  // d/dz
};

/// Homogeneous solution of the exterior linearized system, assembled from the
/// hypergeometric representation in xi = 1 - (y_f/z)^(2/(2-gamma)).
/// Evaluation throws OutsideWindow for |xi| >= 0.9.
class HomSolution {
 public:
  explicit HomSolution(const GammaParams& params);

  HomValue evaluate(double z) const;
  double xi(double z) const;
  /// Inner edge of the evaluation window (xi = -0.9).
  double z_window_lo() const { return z_lo_; }

 private:
  GammaParams params_;
  double a_re_, a_im_, c_;
  double g1_scale_;   // (6 gamma^2 - 15 gamma + 11)/(3 gamma - 1)
  double rescale_;    // k (3 gamma - 1)/(2 (2 - gamma))
  double m11_, m21_, m12_, m22_;
  double z_lo_;
};

/// Residual of the exterior linearized system applied to (p, w) at z.
std::array<double, 2> linear_residual(const GammaParams& params, double z,
                                      const HomValue& v);

struct AsymptoticConstants {
  double c1;  // > 0
  double d1;  // phase of the p-component, in [0, 2pi)
  double w_phase;       // phase of the w-component fit
  double residual_rel;  // p-fit residual
  double decay_diag;    // free-exponent diagnostic, should match mu
};

/// Extends the homogeneous solution below the hypergeometric window by
/// integrating the (regular) linearized system inward, then extracts the
/// asymptotic constants from fits on z in [z_lo, 0.3 y_f].
AsymptoticConstants extract_c1_d1(const GammaParams& params,
                                  const HomSolution& hom, double tol = 1e-11);

}  // namespace hunter
