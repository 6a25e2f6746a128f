#include "hunter/linear.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "hunter/errors.hpp"
#include "hunter/integrate.hpp"

namespace hunter {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr int kMaxTerms = 100000;
}  // namespace

double gauss_2f1_conjugate(const HypergeometricArgs& args) {
  if (!(std::abs(args.z) < 1.0)) {
    throw DomainError("2F1 series requires |z| < 1");
  }
  if (args.c <= 0.0 && args.c == std::floor(args.c)) {
    throw DomainError("2F1 parameter c is a nonpositive integer");
  }
  double t = 1.0, sum = 1.0;
  for (int n = 0; n < kMaxTerms; ++n) {
    const double num = (n + args.a_re) * (n + args.a_re) + args.a_im * args.a_im;
    t *= num / ((args.c + n) * (1.0 + n)) * args.z;
    sum += t;
    if (!std::isfinite(sum)) {
      throw ConvergenceError("2F1 series overflowed at z = " +
                             std::to_string(args.z));
    }
    if (std::abs(t) < 1e-16 * std::abs(sum)) return sum;
  }
  throw ConvergenceError("2F1 series did not converge at z = " +
                         std::to_string(args.z));
}

HomSolution::HomSolution(const GammaParams& params) : params_(params) {
  const double g = params.gamma;
  const double tg = 2.0 - g;
  a_re_ = -tg * params.mu / 2.0;
  a_im_ = -tg * params.nu / 2.0;
  c_ = (5.0 * g - 3.0) / 2.0;
  const double q = 6.0 * g * g - 15.0 * g + 11.0;
  g1_scale_ = q / (3.0 * g - 1.0);
  rescale_ = params.k * (3.0 * g - 1.0) / (2.0 * tg);
  m11_ = (3.0 * g - 1.0) / q;
  m21_ = -2.0 * tg * tg / (q * params.k);
  m12_ = -6.0 * (g - 1.0) / ((4.0 - 3.0 * g) * q);
  m22_ = 2.0 * tg / ((4.0 - 3.0 * g) * q * params.k);
  z_lo_ = params.y_f * std::pow(1.9, -1.0 / params.alpha());
}

double HomSolution::xi(double z) const {
  if (!(z > 0.0)) throw DomainError("xi requires z > 0");
  return 1.0 - std::pow(params_.y_f / z, params_.alpha());
}

HomValue HomSolution::evaluate(double z) const {
  const double x = xi(z);
  if (!(std::abs(x) < 0.9)) {
    throw OutsideWindowError("xi = " + std::to_string(x) +
                             " outside the hypergeometric window");
  }
  const double F = gauss_2f1_conjugate({a_re_, a_im_, c_, x});
  const double mod_a = a_re_ * a_re_ + a_im_ * a_im_;
  const double mod_a1 = (a_re_ + 1.0) * (a_re_ + 1.0) + a_im_ * a_im_;
  const double Fp =
      mod_a / c_ * gauss_2f1_conjugate({a_re_ + 1.0, a_im_, c_ + 1.0, x});
  const double Fpp = mod_a * mod_a1 / (c_ * (c_ + 1.0)) *
                     gauss_2f1_conjugate({a_re_ + 2.0, a_im_, c_ + 2.0, x});
  const double gv = g1_scale_ * F;
  const double gp = g1_scale_ * Fp;
  const double gpp = g1_scale_ * Fpp;
  const double dxi = params_.alpha() * (1.0 - x) / z;

  HomValue v;
  v.p = rescale_ * (m11_ * gv + m12_ * x * gp);
  v.w = rescale_ * (m21_ * gv + m22_ * x * gp);
  v.dp = rescale_ * (m11_ * gp + m12_ * (gp + x * gpp)) * dxi;
  v.dw = rescale_ * (m21_ * gp + m22_ * (gp + x * gpp)) * dxi;
  return v;
}

namespace {

struct LinMatrices {
  std::array<std::array<double, 2>, 2> E;
  std::array<std::array<double, 2>, 2> F;
};

LinMatrices linear_matrices(const GammaParams& params, double z) {
  const double g = params.gamma;
  const double tg = 2.0 - g;
  const double zi = std::pow(z, -params.alpha());
  LinMatrices m;
  m.E = {{{tg * z, params.k * z},
          {2.0 * kPi * tg * tg / (4.0 - 3.0 * g) * z * zi, tg * z}}};
  m.F = {{{0.0, (4.0 - 3.0 * g) * params.k / tg},
          {4.0 * kPi * tg * tg / (4.0 - 3.0 * g) * zi,
           1.0 + 4.0 * kPi * params.k / (4.0 - 3.0 * g) * zi}}};
  return m;
}

}  // namespace

std::array<double, 2> linear_residual(const GammaParams& params, double z,
                                      const HomValue& v) {
  const LinMatrices m = linear_matrices(params, z);
  return {m.E[0][0] * v.dp + m.E[0][1] * v.dw + m.F[0][0] * v.p +
              m.F[0][1] * v.w,
          m.E[1][0] * v.dp + m.E[1][1] * v.dw + m.F[1][0] * v.p +
              m.F[1][1] * v.w};
}

AsymptoticConstants extract_c1_d1(const GammaParams& params,
                                  const HomSolution& hom, double tol) {
  // Launch just inside the window edge and integrate the regular linear
  // system toward the origin.
  const double z0 = params.y_f * std::pow(1.85, -1.0 / params.alpha());
  const HomValue v0 = hom.evaluate(z0);
  const double z_lo = 1e-5 * params.y_f;

  auto rhs = [&params](double z, const std::array<double, 2>& s) {
    const LinMatrices m = linear_matrices(params, z);
    const std::array<double, 2> b = {
        -(m.F[0][0] * s[0] + m.F[0][1] * s[1]),
        -(m.F[1][0] * s[0] + m.F[1][1] * s[1])};
    const double det = m.E[0][0] * m.E[1][1] - m.E[0][1] * m.E[1][0];
    return std::array<double, 2>{
        (b[0] * m.E[1][1] - b[1] * m.E[0][1]) / det,
        (m.E[0][0] * b[1] - m.E[1][0] * b[0]) / det};
  };

  IntegrateOptions opt;
  opt.tol = tol;
  opt.track_density = false;
  opt.log_independent = true;
  const IntegrationResult run = integrate(rhs, z0, {v0.p, v0.w}, z_lo, opt);

  const double z_hi = 0.3 * params.y_f;
  std::vector<double> t, vp, vw;
  for (size_t i = 0; i < run.ys.size(); ++i) {
    const double z = run.ys[i];
    if (z > z_hi || z < z_lo) continue;
    const double zmu = std::pow(z, params.mu);
    t.push_back(std::log(z));
    vp.push_back(zmu * run.states[i][0]);
    vw.push_back(zmu * run.states[i][1]);
  }
  const OscFit fp = fit_oscillation(t, vp, params.nu);
  if (fp.residual_rel > 0.05) {
    throw FitUnreliableError("asymptotic p-fit residual " +
                             std::to_string(fp.residual_rel));
  }
  const OscFit fw = fit_oscillation(t, vw, params.nu);

  auto resid_mu = [&](double mu) {
    std::vector<double> v;
    v.reserve(t.size());
    for (size_t i = 0; i < run.ys.size(); ++i) {
      const double z = run.ys[i];
      if (z > z_hi || z < z_lo) continue;
      v.push_back(std::pow(z, mu) * run.states[i][0]);
    }
    return fit_oscillation(t, v, params.nu).residual_rel;
  };

  AsymptoticConstants out;
  out.c1 = fp.c;
  out.d1 = fp.d;
  out.w_phase = fw.d;
  out.residual_rel = fp.residual_rel;
  out.decay_diag =
      golden_minimize(resid_mu, 0.3 * params.mu, 2.0 * params.mu, 1e-6);
  return out;
}

}  // namespace hunter
