#include "hunter/integrate.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hunter/errors.hpp"

namespace hunter {

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double kC[7] = {0.0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1.0, 1.0};
constexpr double kA[7][6] = {
    {},
    {1.0 / 5},
    {3.0 / 40, 9.0 / 40},
    {44.0 / 45, -56.0 / 15, 32.0 / 9},
    {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
    {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
    {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84}};
// b - bhat (error weights).
constexpr double kE[7] = {71.0 / 57600,      0.0,         -71.0 / 16695,
                          71.0 / 1920,       -17253.0 / 339200,
                          22.0 / 525,        -1.0 / 40};
// Dense-output weights.
constexpr double kD[7] = {-12715105075.0 / 11282082432.0,
                          0.0,
                          87487479700.0 / 32700410799.0,
                          -10690763975.0 / 1880347072.0,
                          701980252875.0 / 199316789632.0,
                          -1453857185.0 / 822651844.0,
                          69997945.0 / 29380423.0};

using Vec = std::array<double, 2>;

double error_norm(const Vec& err, const Vec& s0, const Vec& s1, double tol) {
  double acc = 0.0;
  for (int i = 0; i < 2; ++i) {
    const double sc = tol + tol * std::max(std::abs(s0[i]), std::abs(s1[i]));
    const double q = err[i] / sc;
    acc += q * q;
  }
  return std::sqrt(acc / 2.0);
}

bool finite(const Vec& v) {
  return std::isfinite(v[0]) && std::isfinite(v[1]);
}

}  // namespace

std::array<double, 2> DenseStep::eval(double x) const {
  const double th = (x - x0) / h;
  const double th1 = 1.0 - th;
  Vec out;
  for (int i = 0; i < 2; ++i) {
    out[i] = rcont[0][i] +
             th * (rcont[1][i] +
                   th1 * (rcont[2][i] + th * (rcont[3][i] + th1 * rcont[4][i])));
  }
  return out;
}

std::array<double, 2> IntegrationResult::interpolate(double y) const {
  if (dense.empty()) throw DomainError("interpolate on empty trajectory");
  const double x = in_log ? std::log(y) : y;
  const bool fwd = dense.front().h > 0.0;
  // Binary search for the segment whose [x0, x0+h] contains x.
  int lo = 0, hi = static_cast<int>(dense.size()) - 1;
  while (lo < hi) {
    const int mid = (lo + hi) / 2;
    const double xe = dense[mid].x0 + dense[mid].h;
    if (fwd ? (x > xe) : (x < xe)) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  const DenseStep& seg = dense[lo];
  const double lo_x = fwd ? seg.x0 : seg.x0 + seg.h;
  const double hi_x = fwd ? seg.x0 + seg.h : seg.x0;
  const double slack = 1e-9 * (std::abs(lo_x) + std::abs(hi_x) + 1.0);
  if (x < lo_x - slack || x > hi_x + slack) {
    throw DomainError("interpolation abscissa outside trajectory");
  }
  return seg.eval(x);
}

IntegrationResult integrate(const RhsFn& rhs, double y0, const Vec& s0,
                            double y1, const IntegrateOptions& opt) {
  if (!(opt.tol > 0.0)) throw DomainError("integrate requires tol > 0");
  if (y0 == y1) throw DomainError("integrate requires y0 != y1");
  if (opt.log_independent && (y0 <= 0.0 || y1 <= 0.0)) {
    throw DomainError("log-variable integration requires positive endpoints");
  }

  IntegrationResult res;
  res.in_log = opt.log_independent;
  const double x0 = opt.log_independent ? std::log(y0) : y0;
  const double x1 = opt.log_independent ? std::log(y1) : y1;
  auto to_y = [&](double x) { return opt.log_independent ? std::exp(x) : x; };
  auto f = [&](double x, const Vec& s) -> Vec {
    if (!opt.log_independent) return rhs(x, s);
    const double y = std::exp(x);
    Vec d = rhs(y, s);
    return {d[0] * y, d[1] * y};
  };

  const double dir = x1 > x0 ? 1.0 : -1.0;
  const double span = std::abs(x1 - x0);
  double x = x0;
  Vec s = s0;

  res.ys.push_back(y0);
  res.states.push_back(s);

  Vec k[7];
  bool have_k1 = false;
  try {
    k[0] = f(x, s);
    have_k1 = true;
  } catch (const SonicSingularError&) {
    res.termination = Termination::SonicCollision;
  }
  if (!have_k1 || !finite(k[0])) {
    if (res.termination != Termination::SonicCollision) {
      res.termination = Termination::Blowup;
      res.events.push_back({EventKind::Blowup, y0});
    } else {
      res.events.push_back({EventKind::SonicCrossing, y0});
    }
    res.y_end = y0;
    res.state_end = s;
    return res;
  }

  // Initial step from rhs magnitude, capped by the span.
  double h;
  {
    const double dn = std::max(std::hypot(s[0], s[1]), 1e-8);
    const double fn = std::hypot(k[0][0], k[0][1]);
    h = fn > 1e-12 * dn ? 0.01 * dn / fn : 1e-3 * span;
    h = std::min(h, span) * dir;
  }

  double err_old = 1.0;
  double g_prev = opt.sonic_event ? opt.sonic_event(to_y(x), s) : 0.0;
  const double h_min = 1e-14 * std::max(span, std::abs(x0));

  auto finish = [&](Termination t, double xe, const Vec& se) {
    res.termination = t;
    res.y_end = to_y(xe);
    res.state_end = se;
  };

  for (int step = 0; step < opt.max_steps; ++step) {
    if (dir * (x - x1) >= 0.0) {
      finish(Termination::ReachedEnd, x, s);
      return res;
    }
    if (dir * (x + h - x1) > 0.0) h = x1 - x;
    if (std::abs(h) < h_min) {
      throw StiffnessError("step size underflow at y = " +
                           std::to_string(to_y(x)));
    }

    bool singular = false;
    Vec s_new{}, err{};
    try {
      for (int i = 1; i < 7; ++i) {
        Vec si = s;
        for (int j = 0; j < i; ++j) {
          si[0] += h * kA[i][j] * k[j][0];
          si[1] += h * kA[i][j] * k[j][1];
        }
        if (i == 6) s_new = si;
        k[i] = f(x + kC[i] * h, si);
      }
      err = {0.0, 0.0};
      for (int i = 0; i < 7; ++i) {
        err[0] += h * kE[i] * k[i][0];
        err[1] += h * kE[i] * k[i][1];
      }
    } catch (const SonicSingularError&) {
      singular = true;
    }

    double en = singular || !finite(s_new) || !finite(err)
                    ? 2.0
                    : error_norm(err, s, s_new, opt.tol);
    if (!(en <= 1.0)) {
      if (singular && std::abs(h) < 16.0 * h_min) {
        res.events.push_back({EventKind::SonicCrossing, to_y(x)});
        finish(Termination::SonicCollision, x, s);
        return res;
      }
      if (!std::isfinite(en)) en = 2.0;
      const double fac =
          std::max(0.2, 0.9 * std::pow(en, -0.2));
      h *= std::min(fac, 0.9);
      err_old = std::max(en, 1e-4);
      // k[0] unchanged; retry.
      if (singular) h *= 0.5;
      continue;
    }

    // Accepted step: build dense output.
    DenseStep ds;
    ds.x0 = x;
    ds.h = h;
    for (int i = 0; i < 2; ++i) {
      const double dy = s_new[i] - s[i];
      ds.rcont[0][i] = s[i];
      ds.rcont[1][i] = dy;
      ds.rcont[2][i] = h * k[0][i] - dy;
      ds.rcont[3][i] = dy - h * k[6][i] - ds.rcont[2][i];
      double acc = 0.0;
      for (int j = 0; j < 7; ++j) acc += kD[j] * k[j][i];
      ds.rcont[4][i] = h * acc;
    }
    res.dense.push_back(ds);

    const double x_new = x + h;

    auto bisect = [&](auto&& gfn) -> double {
      double a = x, b = x_new;
      double ga = gfn(a);
      for (int it = 0; it < 200; ++it) {
        const double m = 0.5 * (a + b);
        const double gm = gfn(m);
        if (ga * gm <= 0.0) {
          b = m;
        } else {
          a = m;
          ga = gm;
        }
        const double ytol = opt.log_independent
                                ? std::abs(b - a) * std::max(to_y(a), to_y(b))
                                : std::abs(b - a);
        if (ytol < 1e-12) break;
      }
      return 0.5 * (a + b);
    };

    if (opt.track_density && s_new[0] <= opt.density_floor) {
      const double xe = bisect([&](double xx) {
        return ds.eval(xx)[0] - opt.density_floor;
      });
      const Vec se = ds.eval(xe);
      res.events.push_back({EventKind::DensityFloor, to_y(xe)});
      res.ys.push_back(to_y(xe));
      res.states.push_back(se);
      finish(Termination::DensityFloor, xe, se);
      return res;
    }
    if (std::max(std::abs(s_new[0]), std::abs(s_new[1])) > opt.overflow_guard) {
      res.events.push_back({EventKind::Blowup, to_y(x_new)});
      res.ys.push_back(to_y(x_new));
      res.states.push_back(s_new);
      finish(Termination::Blowup, x_new, s_new);
      return res;
    }
    if (opt.sonic_event) {
      const double g_new = opt.sonic_event(to_y(x_new), s_new);
      if (g_prev * g_new < 0.0) {
        const double xe = bisect([&](double xx) {
          return opt.sonic_event(to_y(xx), ds.eval(xx));
        });
        res.events.push_back({EventKind::SonicCrossing, to_y(xe)});
      }
      g_prev = g_new;
    }

    x = x_new;
    s = s_new;
    k[0] = k[6];  // FSAL
    res.ys.push_back(to_y(x));
    res.states.push_back(s);

    // PI controller.
    const double e = std::max(en, 1e-10);
    double fac = 0.9 * std::pow(e, -0.7 / 5.0) * std::pow(err_old, 0.4 / 5.0);
    fac = std::clamp(fac, 0.2, 10.0);
    h *= fac;
    err_old = e;
  }
  throw StiffnessError("maximum step count exceeded");
}

IntegrationResult integrate_rho_u(const GammaParams& params, double y0,
                                  const State& s0, double y1,
                                  const IntegrateOptions& opt,
                                  double tol_sonic) {
  IntegrateOptions o = opt;
  o.sonic_event = [params](double y, const Vec& s) {
    return sonic_discriminant(params, y, State{s[0], s[1]});
  };
  auto rhs = [params, tol_sonic](double y, const Vec& s) {
    return rhs_rho_u(params, y, State{s[0], s[1]}, tol_sonic);
  };
  return integrate(rhs, y0, {s0.rho, s0.u}, y1, o);
}

std::optional<double> detect_sonic(const GammaParams& params,
                                   const IntegrationResult& result) {
  (void)params;
  for (const Event& e : result.events) {
    if (e.kind == EventKind::SonicCrossing) return e.y;
  }
  return std::nullopt;
}

}  // namespace hunter
