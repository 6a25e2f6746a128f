#include "hunter/series.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "hunter/errors.hpp"
#include "hunter/sonic.hpp"

namespace hunter {

namespace {
constexpr double kPi = std::numbers::pi;
}

TruncatedSeries TruncatedSeries::constant(double value, int order) {
  std::vector<double> c(order + 1, 0.0);
  c[0] = value;
  return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::variable(int order) {
  std::vector<double> c(order + 1, 0.0);
  if (order >= 1) c[1] = 1.0;
  return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
  const int n = std::min(order(), o.order());
  std::vector<double> c(n + 1);
  for (int i = 0; i <= n; ++i) c[i] = (*this)[i] + o[i];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
  const int n = std::min(order(), o.order());
  std::vector<double> c(n + 1);
  for (int i = 0; i <= n; ++i) c[i] = (*this)[i] - o[i];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
  const int n = std::min(order(), o.order());
  std::vector<double> c(n + 1, 0.0);
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; i + j <= n; ++j) c[i + j] += (*this)[i] * o[j];
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::operator*(double s) const {
  std::vector<double> c(c_);
  for (double& v : c) v *= s;
  return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::operator+(double s) const {
  std::vector<double> c(c_);
  c[0] += s;
  return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::reciprocal() const {
  if ((*this)[0] == 0.0) {
    throw DomainError("series reciprocal requires a nonzero constant term");
  }
  const int n = order();
  std::vector<double> c(n + 1, 0.0);
  c[0] = 1.0 / (*this)[0];
  for (int i = 1; i <= n; ++i) {
    double acc = 0.0;
    for (int j = 1; j <= i; ++j) acc += (*this)[j] * c[i - j];
    c[i] = -acc / (*this)[0];
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::operator/(const TruncatedSeries& o) const {
  return (*this) * o.reciprocal();
}

TruncatedSeries TruncatedSeries::pow(double alpha) const {
  if (!((*this)[0] > 0.0)) {
    throw DomainError("series pow requires a positive constant term");
  }
  // J.C.P. Miller recurrence for w = v^alpha: n v0 w_n =
  // sum_{j=1..n} ((alpha+1) j - n) v_j w_{n-j}.
  const int n = order();
  std::vector<double> c(n + 1, 0.0);
  c[0] = std::pow((*this)[0], alpha);
  for (int i = 1; i <= n; ++i) {
    double acc = 0.0;
    for (int j = 1; j <= i; ++j) {
      acc += ((alpha + 1.0) * j - i) * (*this)[j] * c[i - j];
    }
    c[i] = acc / (i * (*this)[0]);
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::derivative() const {
  const int n = order();
  std::vector<double> c(std::max(n, 1), 0.0);
  for (int i = 1; i <= n; ++i) c[i - 1] = i * (*this)[i];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::shift_down() const {
  if ((*this)[0] != 0.0) {
    throw DomainError("shift_down requires a zero constant term");
  }
  const int n = order();
  std::vector<double> c(std::max(n, 1), 0.0);
  for (int i = 1; i <= n; ++i) c[i - 1] = (*this)[i];
  return TruncatedSeries(std::move(c));
}

double TruncatedSeries::eval(double t) const {
  double acc = 0.0;
  for (int i = order(); i >= 0; --i) acc = acc * t + (*this)[i];
  return acc;
}

double TruncatedSeries::eval_derivative(double t) const {
  double acc = 0.0;
  for (int i = order(); i >= 1; --i) acc = acc * t + i * (*this)[i];
  return acc;
}

SeriesPair euler_poisson_series_residual(const GammaParams& params,
                                         double center, const SeriesPair& s) {
  const double g = params.gamma;
  const double tg = 2.0 - g;
  const int n = s.a.order();
  const TruncatedSeries& rho = s.a;
  const TruncatedSeries& u = s.b;
  const TruncatedSeries y =
      TruncatedSeries::variable(n) + center;  // y = center + t
  const TruncatedSeries drho = rho.derivative();
  const TruncatedSeries du = u.derivative();
  const TruncatedSeries flow = u + y * tg;  // u + (2-gamma) y
  const TruncatedSeries rho_pow = rho.pow(g - 2.0);

  TruncatedSeries r1(std::vector<double>{});
  if (center == 0.0) {
    // Origin form: first equation multiplied by y to clear the 1/y pole.
    // Requires u(0) = 0 so that u/y is regular.
    r1 = y * (flow * drho + rho * du) + (rho * (u + y)) * 2.0;
    // The y-multiplied first equation and the plain second equation keep the
    // mass-equation part of r1 one order short; trim both to a common order.
  } else {
    r1 = flow * drho + rho * du + (rho * (u + y)) * y.reciprocal() * 2.0;
  }
  TruncatedSeries r2 = rho_pow * drho * g + flow * du + u * (g - 1.0) +
                       rho * flow * (4.0 * kPi / (4.0 - 3.0 * g));
  return {r1, r2};
}

namespace {

struct ProjectedSolve {
  // Projections used for the order-by-order solve: e is transverse to the
  // left null vector l of the leading coefficient matrix.
  std::array<double, 2> e;
  std::array<double, 2> l;
};

// The leading (t^0) coefficient matrix of the residual with respect to the
// derivative term is rank one at a singular point; recover its column
// direction by probing the residual linearly.
ProjectedSolve projections_for(const SeriesResidualFn& residual_fn,
                               const SeriesPair& seed) {
  const int n = seed.a.order();
  SeriesPair base = seed;
  // Probe sensitivity of residual order 0 to first-order coefficients.
  const SeriesPair r0 = residual_fn(base);
  std::array<std::array<double, 2>, 2> m{};  // m[:, j]: d res_0 / d c_1[j]
  for (int j = 0; j < 2; ++j) {
    SeriesPair probe = base;
    (j == 0 ? probe.a : probe.b).at(1) += 1.0;
    const SeriesPair r = residual_fn(probe);
    m[0][j] = r.a[0] - r0.a[0];
    m[1][j] = r.b[0] - r0.b[0];
  }
  const double n1 = std::hypot(m[0][0], m[1][0]);
  const double n2 = std::hypot(m[0][1], m[1][1]);
  const std::array<double, 2> col =
      n1 >= n2 ? std::array<double, 2>{m[0][0], m[1][0]}
               : std::array<double, 2>{m[0][1], m[1][1]};
  const double nc = std::hypot(col[0], col[1]);
  if (!(nc > 0.0)) {
    throw DomainError("singular system has vanishing leading coefficients");
  }
  ProjectedSolve ps;
  ps.e = {col[0] / nc, col[1] / nc};
  ps.l = {-col[1] / nc, col[0] / nc};
  (void)n;
  return ps;
}

}  // namespace

SeriesPair solve_singular_series(const SeriesResidualFn& residual_fn,
                                 SeriesPair seed, int order) {
  if (order < 2) throw DomainError("series order must be >= 2");
  if (seed.a.order() < order || seed.b.order() < order) {
    throw DomainError("seed series shorter than requested order");
  }
  // One spare order so the residual series reaches order m+1 at the last
  // solve; the spare coefficient is transverse-killed by the projection.
  {
    std::vector<double> ca = seed.a.coeffs(), cb = seed.b.coeffs();
    ca.resize(order + 2, 0.0);
    cb.resize(order + 2, 0.0);
    seed.a = TruncatedSeries(std::move(ca));
    seed.b = TruncatedSeries(std::move(cb));
  }
  const ProjectedSolve ps = projections_for(residual_fn, seed);

  auto projected = [&](const SeriesPair& cand, int m) -> std::array<double, 2> {
    const SeriesPair r = residual_fn(cand);
    return {ps.e[0] * r.a[m] + ps.e[1] * r.b[m],
            ps.l[0] * r.a[m + 1] + ps.l[1] * r.b[m + 1]};
  };

  for (int m = 1; m < order; ++m) {
    // Unknown x = (rho_{m+1}, u_{m+1}); phi(x) = (e . res_m, l . res_{m+1})
    // is affine in x. Three evaluations determine the 2x2 solve.
    const std::array<double, 2> f0 = projected(seed, m);
    std::array<std::array<double, 2>, 2> M{};
    for (int j = 0; j < 2; ++j) {
      SeriesPair probe = seed;
      (j == 0 ? probe.a : probe.b).at(m + 1) += 1.0;
      const std::array<double, 2> f = projected(probe, m);
      M[0][j] = f[0] - f0[0];
      M[1][j] = f[1] - f0[1];
    }
    const double det = M[0][0] * M[1][1] - M[0][1] * M[1][0];
    const double norm = std::max({std::abs(M[0][0]), std::abs(M[0][1]),
                                  std::abs(M[1][0]), std::abs(M[1][1])});
    if (!(std::abs(det) > 0.0) ||
        norm * norm / std::abs(det) > kResonanceConditionThreshold) {
      throw ResonantOrderError(
          m + 1, "near-singular coefficient solve at series order " +
                     std::to_string(m + 1));
    }
    // Partial pivoting on the 2x2.
    double x0, x1;
    if (std::abs(M[0][0]) >= std::abs(M[1][0])) {
      const double f = M[1][0] / M[0][0];
      x1 = (-f0[1] + f * f0[0]) / (M[1][1] - f * M[0][1]);
      x0 = (-f0[0] - M[0][1] * x1) / M[0][0];
    } else {
      const double f = M[0][0] / M[1][0];
      x1 = (-f0[0] + f * f0[1]) / (M[0][1] - f * M[1][1]);
      x0 = (-f0[1] - M[1][1] * x1) / M[1][0];
    }
    seed.a.at(m + 1) = x0;
    seed.b.at(m + 1) = x1;
  }
  std::vector<double> ca = seed.a.coeffs(), cb = seed.b.coeffs();
  ca.resize(order + 1);
  cb.resize(order + 1);
  return {TruncatedSeries(std::move(ca)), TruncatedSeries(std::move(cb))};
}

namespace {

double estimate_radius(const SeriesPair& s) {
  // Least-squares slope of log|c_n| against n over the top half of the
  // combined coefficient magnitudes; radius ~ exp(-slope).
  const int n = std::min(s.a.order(), s.b.order());
  std::vector<std::pair<int, double>> pts;
  for (int i = std::max(2, n / 2); i <= n; ++i) {
    const double mag = std::max(std::abs(s.a[i]), std::abs(s.b[i]));
    if (mag > 0.0) pts.emplace_back(i, std::log(mag));
  }
  if (pts.size() < 2) return 1e3;  // polynomial tail; effectively unlimited
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (auto [x, yv] : pts) {
    sx += x;
    sy += yv;
    sxx += double(x) * x;
    sxy += x * yv;
  }
  const double np = static_cast<double>(pts.size());
  const double slope = (np * sxy - sx * sy) / (np * sxx - sx * sx);
  const double r = std::exp(-slope);
  return std::clamp(r, 1e-12, 1e3);
}

TaylorSolution make_solution(double center, const SeriesPair& s) {
  TaylorSolution ts;
  ts.center = center;
  ts.coeffs_rho = s.a.coeffs();
  ts.coeffs_u = s.b.coeffs();
  ts.radius_estimate = estimate_radius(s);
  return ts;
}

}  // namespace

TaylorSolution taylor_at_sonic(const GammaParams& params,
                               const SonicPointData& sp, int order) {
  if (order < 2) throw DomainError("taylor_at_sonic requires order >= 2");
  const NormalFormParams nf = characteristic_params_at_sonic(params, sp);
  if (!nf.kappa_admissible) {
    throw ResonantError("resonant sonic point: kappa = " +
                        std::to_string(nf.kappa));
  }
  SeriesPair seed{TruncatedSeries::constant(sp.rho0, order),
                  TruncatedSeries::constant(sp.u0, order)};
  seed.a.at(1) = sp.rho1;
  seed.b.at(1) = sp.u1;
  auto fn = [&params, &sp](const SeriesPair& s) {
    return euler_poisson_series_residual(params, sp.y_star, s);
  };
  const SeriesPair sol = solve_singular_series(fn, std::move(seed), order);
  return make_solution(sp.y_star, sol);
}

TaylorSolution taylor_at_origin(const GammaParams& params, double rho_center,
                                int order) {
  if (!(rho_center > 0.0)) {
    throw DomainError("taylor_at_origin requires rho_center > 0");
  }
  if (order < 2) throw DomainError("taylor_at_origin requires order >= 2");
  // kappa = 2 at the regular center, never resonant.
  SeriesPair seed{TruncatedSeries::constant(rho_center, order),
                  TruncatedSeries::constant(0.0, order)};
  seed.a.at(1) = 0.0;
  seed.b.at(1) = -2.0 / 3.0;
  auto fn = [&params](const SeriesPair& s) {
    return euler_poisson_series_residual(params, 0.0, s);
  };
  const SeriesPair sol = solve_singular_series(fn, std::move(seed), order);
  return make_solution(0.0, sol);
}

std::pair<State, std::array<double, 2>> TaylorSolution::evaluate(
    double y) const {
  const double t = y - center;
  if (!(std::abs(t) < radius_estimate * trust_safety)) {
    throw TrustRegionError("evaluation outside series trust region");
  }
  TruncatedSeries r(coeffs_rho), u(coeffs_u);
  return {State{r.eval(t), u.eval(t)},
          {r.eval_derivative(t), u.eval_derivative(t)}};
}

}  // namespace hunter
