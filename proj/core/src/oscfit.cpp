#include "hunter/oscfit.hpp"

#include <cmath>
#include <numbers>

#include "hunter/errors.hpp"

namespace hunter {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

OscFit fit_oscillation(const std::vector<double>& t,
                       const std::vector<double>& v, double nu) {
  if (t.size() != v.size() || t.size() < 4) {
    throw DomainError("fit_oscillation needs matching vectors of size >= 4");
  }
  // Normal equations for the 2-parameter linear model.
  double sss = 0, scc = 0, ssc = 0, svs = 0, svc = 0;
  for (size_t i = 0; i < t.size(); ++i) {
    const double si = std::sin(nu * t[i]);
    const double ci = std::cos(nu * t[i]);
    sss += si * si;
    scc += ci * ci;
    ssc += si * ci;
    svs += v[i] * si;
    svc += v[i] * ci;
  }
  const double det = sss * scc - ssc * ssc;
  if (!(std::abs(det) > 1e-12 * (sss + scc) * (sss + scc))) {
    throw FitUnreliableError("degenerate oscillation fit (window too short)");
  }
  OscFit fit;
  fit.amp_sin = (svs * scc - svc * ssc) / det;
  fit.amp_cos = (sss * svc - ssc * svs) / det;
  fit.c = std::hypot(fit.amp_sin, fit.amp_cos);
  fit.d = std::atan2(fit.amp_cos, fit.amp_sin);
  if (fit.d < 0.0) fit.d += kTwoPi;

  double ss_res = 0, ss_fit = 0;
  for (size_t i = 0; i < t.size(); ++i) {
    const double m =
        fit.amp_sin * std::sin(nu * t[i]) + fit.amp_cos * std::cos(nu * t[i]);
    ss_res += (v[i] - m) * (v[i] - m);
    ss_fit += m * m;
  }
  fit.residual_rel = ss_fit > 0.0 ? std::sqrt(ss_res / ss_fit) : 1.0;
  return fit;
}

double golden_minimize(const std::function<double(double)>& f, double lo,
                       double hi, double tol) {
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > tol) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - gr * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + gr * (b - a);
      f2 = f(x2);
    }
  }
  return 0.5 * (a + b);
}

double best_frequency(const std::vector<double>& t,
                      const std::vector<double>& v, double nu_lo,
                      double nu_hi) {
  auto resid = [&](double nu) {
    try {
      return fit_oscillation(t, v, nu).residual_rel;
    } catch (const Error&) {
      return 1e30;
    }
  };
  // Coarse scan guards against local minima of the periodic residual.
  const int n = 64;
  double best = nu_lo, best_r = resid(nu_lo);
  for (int i = 1; i <= n; ++i) {
    const double nu = nu_lo + (nu_hi - nu_lo) * i / n;
    const double r = resid(nu);
    if (r < best_r) {
      best = nu;
      best_r = r;
    }
  }
  const double half = (nu_hi - nu_lo) / n;
  return golden_minimize(resid, std::max(nu_lo, best - half),
                         std::min(nu_hi, best + half),
                         1e-10 * (nu_hi - nu_lo));
}

double wrap_phase(double a, double b) {
  double d = std::fmod(a - b, kTwoPi);
  if (d > std::numbers::pi) d -= kTwoPi;
  if (d <= -std::numbers::pi) d += kTwoPi;
  return d;
}

}  // namespace hunter
