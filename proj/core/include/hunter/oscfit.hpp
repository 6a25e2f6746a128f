#pragma once

#include <functional>
#include <vector>

namespace hunter {

/// Linear least-squares fit of v(t) ~ A sin(nu t) + B cos(nu t) at fixed
/// frequency, reported as c sin(nu t + d) with c >= 0, d in [0, 2pi).
struct OscFit {
  double amp_sin, amp_cos;
  double c, d;
  /// RMS residual relative to the RMS of the fitted signal.
  double residual_rel;
};

OscFit fit_oscillation(const std::vector<double>& t,
                       const std::vector<double>& v, double nu);

/// Golden-section minimizer for 1-D diagnostic searches (e.g. free-frequency
/// or free-exponent variants of the tail fits).
double golden_minimize(const std::function<double(double)>& f, double lo,
                       double hi, double tol);

/// Frequency minimizing the fit residual over [nu_lo, nu_hi] (diagnostic).
double best_frequency(const std::vector<double>& t,
                      const std::vector<double>& v, double nu_lo,
                      double nu_hi);

/// Phase difference a - b wrapped to (-pi, pi].
double wrap_phase(double a, double b);

}  // namespace hunter
