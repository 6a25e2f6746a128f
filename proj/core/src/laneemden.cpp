#include "hunter/laneemden.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "hunter/errors.hpp"

namespace hunter {

namespace {
constexpr double kPi = std::numbers::pi;

double rho_of_Q(double gamma, double Q) {
  if (Q <= 0.0) {
    throw PositivityViolationError("Lane-Emden Q reached " + std::to_string(Q));
  }
  return std::pow((gamma - 1.0) / gamma * Q, 1.0 / (gamma - 1.0));
}

std::array<double, 2> center_series(double gamma, double y) {
  const double q2 = -2.0 * kPi / 3.0;
  const double q4 = 2.0 * kPi * kPi / (15.0 * gamma);
  const double Q0 = gamma / (gamma - 1.0);
  return {Q0 + q2 * y * y + q4 * y * y * y * y,
          2.0 * q2 * y + 4.0 * q4 * y * y * y};
}

}  // namespace

std::array<double, 2> LaneEmdenSolution::Q_Qp(double y) const {
  if (y < 0.0) throw DomainError("Lane-Emden evaluation requires y >= 0");
  if (y <= y_launch_) return center_series(params_.gamma, y);
  if (y <= y_switch_) return inner_.interpolate(y);
  return outer_.interpolate(y);
}

double LaneEmdenSolution::density_from(double Qv) const {
  return rho_of_Q(params_.gamma, Qv);
}

double LaneEmdenSolution::ustar_from(double y, double Qv, double Qpv) const {
  const double g = params_.gamma;
  const double rho = rho_of_Q(g, Qv);
  return ((3.0 * g - 4.0) * Qpv - 4.0 * kPi * (2.0 - g) * y * rho) /
         (4.0 * kPi * rho);
}

double LaneEmdenSolution::density(double y) const {
  return density_from(Q_Qp(y)[0]);
}

double LaneEmdenSolution::ustar(double y) const {
  const auto q = Q_Qp(y);
  return ustar_from(y, q[0], q[1]);
}

LaneEmdenSolution solve_laneemden(const GammaParams& params, double y_max,
                                  double tol) {
  const double g = params.gamma;
  if (!(y_max >= 1e3)) {
    throw DomainError("solve_laneemden requires y_max >= 1e3");
  }
  if (!(tol > 0.0)) throw DomainError("solve_laneemden requires tol > 0");

  auto rhs = [g](double y, const std::array<double, 2>& s) {
    return std::array<double, 2>{
        s[1], -2.0 / y * s[1] - 4.0 * kPi * rho_of_Q(g, s[0])};
  };

  const double y_launch = 1e-3;
  const double y_switch = 1.0;
  IntegrateOptions opt;
  opt.tol = tol;
  opt.track_density = false;

  IntegrationResult inner = integrate(rhs, y_launch,
                                      center_series(g, y_launch), y_switch, opt);
  IntegrateOptions opt_log = opt;
  opt_log.log_independent = true;
  IntegrationResult outer =
      integrate(rhs, y_switch, inner.state_end, y_max, opt_log);
  return LaneEmdenSolution(params, y_launch, y_switch, std::move(inner),
                           std::move(outer));
}

namespace {

// Tail window sample abscissas (log y) and the exponent-compensated signal.
struct TailSamples {
  std::vector<double> t;       // log y
  std::vector<double> v_rho;   // y^mu (y^alpha rho - k)
  std::vector<double> v_ust;   // y^(mu-1) u*
};

TailSamples tail_samples(const GammaParams& params,
                         const LaneEmdenSolution& le) {
  const double y_lo = 1e2;
  TailSamples s;
  const IntegrationResult& outer = le.outer();
  for (size_t i = 0; i < outer.ys.size(); ++i) {
    const double y = outer.ys[i];
    if (y < y_lo) continue;
    const double rho = le.density_from(outer.states[i][0]);
    const double ust = le.ustar_from(y, outer.states[i][0], outer.states[i][1]);
    s.t.push_back(std::log(y));
    s.v_rho.push_back(std::pow(y, params.mu) *
                      (std::pow(y, params.alpha()) * rho - params.k));
    s.v_ust.push_back(std::pow(y, params.mu - 1.0) * ust);
  }
  if (s.t.size() < 16) {
    throw FitUnreliableError("too few tail samples above y = 1e2");
  }
  const double periods =
      (s.t.back() - s.t.front()) * params.nu / (2.0 * kPi);
  if (periods < 3.0) {
    throw FitUnreliableError("tail window covers only " +
                             std::to_string(periods) + " periods");
  }
  return s;
}

}  // namespace

TailFit fit_tail(const GammaParams& params, const LaneEmdenSolution& le) {
  const TailSamples s = tail_samples(params, le);
  const OscFit fit = fit_oscillation(s.t, s.v_rho, params.nu);
  if (fit.residual_rel > 0.10) {
    throw FitUnreliableError("tail fit residual " +
                             std::to_string(fit.residual_rel));
  }
  TailFit tf;
  tf.c2 = fit.c;
  tf.d2 = fit.d;
  tf.residual_rel = fit.residual_rel;
  tf.freq_diag = best_frequency(s.t, s.v_rho, 0.5 * params.nu, 1.5 * params.nu);

  // Free decay exponent: recompensate with trial mu and minimize the
  // fixed-frequency residual.
  const IntegrationResult& outer = le.outer();
  auto resid_mu = [&](double mu) {
    std::vector<double> v;
    v.reserve(s.t.size());
    for (size_t i = 0; i < outer.ys.size(); ++i) {
      const double y = outer.ys[i];
      if (y < 1e2) continue;
      const double rho = le.density_from(outer.states[i][0]);
      v.push_back(std::pow(y, mu) *
                  (std::pow(y, params.alpha()) * rho - params.k));
    }
    return fit_oscillation(s.t, v, params.nu).residual_rel;
  };
  tf.decay_diag =
      golden_minimize(resid_mu, 0.3 * params.mu, 2.0 * params.mu, 1e-6);
  return tf;
}

OscFit fit_ustar_tail(const GammaParams& params, const LaneEmdenSolution& le) {
  const TailSamples s = tail_samples(params, le);
  const OscFit fit = fit_oscillation(s.t, s.v_ust, params.nu);
  if (fit.residual_rel > 0.10) {
    throw FitUnreliableError("u* tail fit residual " +
                             std::to_string(fit.residual_rel));
  }
  return fit;
}

std::pair<double, double> scale(const LaneEmdenSolution& le, double lambda,
                                double y) {
  if (!(lambda > 0.0)) throw DomainError("scale requires lambda > 0");
  const double g = le.params().gamma;
  const double ys = y / lambda;
  if (ys > le.y_max()) {
    throw DomainError("y/lambda outside the computed Lane-Emden domain");
  }
  const double qfac = std::pow(lambda, -2.0 * (g - 1.0) / (2.0 - g));
  return {qfac * le.Q(ys), lambda * le.ustar(ys)};
}

double laneemden_residual(const GammaParams& params, double y, double Qv,
                          double Qpv, double Qppv) {
  if (!(y > 0.0)) throw DomainError("laneemden_residual requires y > 0");
  return Qppv + 2.0 / y * Qpv + 4.0 * kPi * rho_of_Q(params.gamma, Qv);
}

}  // namespace hunter
