#include "hunter/shoot.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>
#include <thread>

#include "hunter/errors.hpp"
#include "hunter/system.hpp"

namespace hunter {

namespace {

struct Resolved {
  double delta, y_min, y_max;
};

Resolved resolve(const GammaParams& params, const ShootOptions& opts) {
  Resolved r;
  r.delta = opts.delta > 0.0 ? opts.delta : 1e-3 * params.y_f;
  r.y_min = opts.y_min > 0.0 ? opts.y_min : 1e-3 * params.y_f;
  r.y_max = opts.y_max > 0.0 ? opts.y_max : 1e3 * params.y_f;
  if (!(r.y_min < params.y_f && params.y_f < r.y_max)) {
    throw DomainError("shoot window must straddle y_f");
  }
  return r;
}

// Series launch state at y, with the glue check against the ODE.
std::pair<State, std::array<double, 2>> launch_state(
    const GammaParams& params, const TaylorSolution& ts, double y,
    double glue_tol, double tol_sonic) {
  auto [s, ds] = ts.evaluate(y);
  const std::array<double, 2> f = rhs_rho_u(params, y, s, tol_sonic);
  const double mis =
      std::max(std::abs(f[0] - ds[0]) / (1.0 + std::abs(ds[0])),
               std::abs(f[1] - ds[1]) / (1.0 + std::abs(ds[1])));
  if (mis > glue_tol) {
    throw GlueMismatchError("series/ODE mismatch " + std::to_string(mis) +
                            " at launch y = " + std::to_string(y));
  }
  return {s, ds};
}

IntegrationResult run_leg(const GammaParams& params, double y0, const State& s0,
                          double y1, const ShootOptions& opts) {
  IntegrateOptions io;
  io.tol = opts.tol;
  io.log_independent = true;
  return integrate_rho_u(params, y0, s0, y1, io, opts.tol_sonic);
}

}  // namespace

ShotDiagnostics shoot_inward(const GammaParams& params, double eps,
                             const ShootOptions& opts) {
  const Resolved r = resolve(params, opts);
  const SonicPointData sp = solve_sonic(params, eps);
  const TaylorSolution ts = taylor_at_sonic(params, sp, opts.series_order);
  const double y0 = sp.y_star - r.delta;
  const auto [s0, ds0] =
      launch_state(params, ts, y0, opts.glue_tol, opts.tol_sonic);
  const IntegrationResult run = run_leg(params, y0, s0, r.y_min, opts);

  ShotDiagnostics d;
  d.eps = eps;
  d.termination = run.termination;
  d.y_end = run.y_end;
  d.state_end = {run.state_end[0], run.state_end[1]};
  d.defect = run.termination == Termination::ReachedEnd
                 ? run.state_end[1] / run.y_end + 2.0 / 3.0
                 : std::numeric_limits<double>::quiet_NaN();
  return d;
}

int scan_thread_cap() {
  int cap = static_cast<int>(std::thread::hardware_concurrency());
  if (cap < 1) cap = 1;
  if (const char* env = std::getenv("HUNTER_PROFILES_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1) {
      throw ConfigError("HUNTER_PROFILES_THREADS must be a positive integer");
    }
    cap = std::min<long>(v, cap);
  }
  return cap;
}

std::vector<ShotDiagnostics> scan_defects(const GammaParams& params,
                                          const std::vector<double>& eps_grid,
                                          const ShootOptions& opts) {
  std::vector<ShotDiagnostics> out(eps_grid.size());
  auto work = [&](size_t i) {
    try {
      out[i] = shoot_inward(params, eps_grid[i], opts);
    } catch (const Error&) {
      out[i].eps = eps_grid[i];
      out[i].defect = std::numeric_limits<double>::quiet_NaN();
      out[i].termination = Termination::SonicCollision;
      out[i].y_end = 0.0;
      out[i].state_end = {0.0, 0.0};
    }
  };
  const int threads =
      std::min<int>(scan_thread_cap(), static_cast<int>(eps_grid.size()));
  if (threads <= 1) {
    for (size_t i = 0; i < eps_grid.size(); ++i) work(i);
    return out;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (size_t i = next.fetch_add(1); i < eps_grid.size();
           i = next.fetch_add(1)) {
        work(i);
      }
    });
  }
  for (auto& th : pool) th.join();
  return out;
}

std::vector<double> log_grid(double lo, double hi, int per_decade) {
  if (!(0.0 < lo && lo < hi) || per_decade < 1) {
    throw DomainError("log_grid requires 0 < lo < hi and per_decade >= 1");
  }
  const double decades = std::log10(hi / lo);
  const int n = std::max(2, static_cast<int>(std::ceil(decades * per_decade)) + 1);
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i) {
    g[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1));
  }
  return g;
}

namespace {

double refine_root(const GammaParams& params, double a, double fa, double b,
                   double fb, const ShootOptions& opts) {
  for (int it = 0; it < 200; ++it) {
    const double m = 0.5 * (a + b);
    if ((b - a) / std::max(std::abs(a), std::abs(b)) < 1e-12) return m;
    double fm;
    try {
      fm = shoot_inward(params, m, opts).defect;
    } catch (const Error&) {
      fm = std::numeric_limits<double>::quiet_NaN();
    }
    if (!std::isfinite(fm)) {
      throw ConvergenceError("defect became undefined inside bracket at eps = " +
                             std::to_string(m));
    }
    if (fa * fm <= 0.0) {
      b = m;
      fb = fm;
    } else {
      a = m;
      fa = fm;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

HunterSolution assemble_profile(const GammaParams& params, double eps_root,
                                const ShootOptions& opts) {
  const Resolved r = resolve(params, opts);
  const SonicPointData sp = solve_sonic(params, eps_root);
  const TaylorSolution ts = taylor_at_sonic(params, sp, opts.series_order);
  const double yi = sp.y_star - r.delta;
  const double yo = sp.y_star + r.delta;
  const auto in0 = launch_state(params, ts, yi, opts.glue_tol, opts.tol_sonic);
  const auto out0 = launch_state(params, ts, yo, opts.glue_tol, opts.tol_sonic);

  const IntegrationResult inward = run_leg(params, yi, in0.first, r.y_min, opts);
  const IntegrationResult outward =
      run_leg(params, yo, out0.first, r.y_max, opts);

  HunterSolution sol;
  sol.eps = eps_root;
  sol.y_star = sp.y_star;
  sol.invariants_ok = true;
  sol.diagnostics.clear();
  auto flag = [&sol](const std::string& msg) {
    sol.invariants_ok = false;
    if (!sol.diagnostics.empty()) sol.diagnostics += "; ";
    sol.diagnostics += msg;
  };

  if (inward.termination != Termination::ReachedEnd) {
    flag("inward leg terminated before y_min");
  }
  if (outward.termination != Termination::ReachedEnd) {
    flag("outward leg terminated before y_max");
  }

  sol.profile.clear();
  for (size_t i = inward.ys.size(); i-- > 0;) {
    sol.profile.push_back(
        {inward.ys[i], inward.states[i][0], inward.states[i][1]});
  }
  const int n_series = 15;
  for (int i = 1; i < n_series; ++i) {
    const double y = yi + (yo - yi) * i / n_series;
    const auto [s, ds] = ts.evaluate(y);
    sol.profile.push_back({y, s.rho, s.u});
  }
  for (size_t i = 0; i < outward.ys.size(); ++i) {
    sol.profile.push_back(
        {outward.ys[i], outward.states[i][0], outward.states[i][1]});
  }

  // Structural invariants.
  if (!(sp.y_star > 0.0 && sp.y_star < 2.0 * params.y_f)) {
    flag("sonic point outside (0, 2 y_f)");
  }
  double prev_flow = 0.0;
  bool first_ext = true;
  for (const ProfilePoint& p : sol.profile) {
    if (!(p.rho > 0.0)) {
      flag("nonpositive density at y = " + std::to_string(p.y));
      break;
    }
    const double D = sonic_discriminant(params, p.y, {p.rho, p.u});
    if (p.y <= yi && D >= 0.0) {
      flag("interior discriminant sign violation at y = " + std::to_string(p.y));
      break;
    }
    if (p.y >= yo && D <= 0.0) {
      flag("exterior discriminant sign violation at y = " + std::to_string(p.y));
      break;
    }
    if (p.y >= yo) {
      const double flow = p.u + params.two_minus_gamma() * p.y;
      if (!first_ext && flow <= prev_flow) {
        flag("exterior monotonicity violation at y = " + std::to_string(p.y));
        break;
      }
      prev_flow = flow;
      first_ext = false;
    }
  }

  sol.sup_density_weight = 0.0;
  sol.sup_velocity_weight = 0.0;
  const double vel_exp = (params.gamma - 1.0) / params.two_minus_gamma();
  for (const ProfilePoint& p : sol.profile) {
    if (p.y < params.y_f) continue;
    sol.sup_density_weight = std::max(
        sol.sup_density_weight, std::pow(p.y, params.alpha()) * p.rho);
    sol.sup_velocity_weight = std::max(
        sol.sup_velocity_weight, std::pow(p.y, vel_exp) * std::abs(p.u));
  }

  sol.rho_center = sol.profile.empty() ? 0.0 : sol.profile.front().rho;
  sol.lambda_est = sol.rho_center > 0.0
                       ? std::pow(sol.rho_center, -params.two_minus_gamma() / 2.0)
                       : 0.0;
  try {
    sol.crossings = count_farfield_crossings(params, sol.profile);
  } catch (const Error& e) {
    sol.crossings = -1;
    flag(e.what());
  }
  sol.index = sol.crossings - 1;
  return sol;
}

std::vector<HunterSolution> find_hunter(const GammaParams& params,
                                        double eps_lo, double eps_hi,
                                        int grid_per_decade,
                                        const ShootOptions& opts) {
  const std::vector<double> grid = log_grid(eps_lo, eps_hi, grid_per_decade);
  const std::vector<ShotDiagnostics> shots = scan_defects(params, grid, opts);

  std::vector<HunterSolution> roots;
  for (size_t i = 0; i + 1 < shots.size(); ++i) {
    const double fa = shots[i].defect, fb = shots[i + 1].defect;
    if (!std::isfinite(fa) || !std::isfinite(fb) || fa * fb >= 0.0) continue;
    double eps_root;
    try {
      eps_root = refine_root(params, grid[i], fa, grid[i + 1], fb, opts);
    } catch (const Error&) {
      continue;
    }
    try {
      roots.push_back(assemble_profile(params, eps_root, opts));
    } catch (const Error& e) {
      HunterSolution bad;
      bad.index = -1;
      bad.eps = eps_root;
      bad.y_star = 0.0;
      bad.crossings = -1;
      bad.rho_center = 0.0;
      bad.lambda_est = 0.0;
      bad.sup_density_weight = 0.0;
      bad.sup_velocity_weight = 0.0;
      bad.invariants_ok = false;
      bad.diagnostics = e.what();
      roots.push_back(std::move(bad));
    }
  }
  std::sort(roots.begin(), roots.end(),
            [](const HunterSolution& x, const HunterSolution& y) {
              return x.eps > y.eps;
            });
  return roots;
}

int count_farfield_crossings(const GammaParams& params,
                             const std::vector<ProfilePoint>& profile) {
  if (profile.size() < 2) return 0;
  std::vector<double> g(profile.size()), f(profile.size());
  for (size_t i = 0; i < profile.size(); ++i) {
    g[i] = std::pow(profile[i].y, params.alpha()) * profile[i].rho;
    f[i] = g[i] - params.k;
  }
  int count = 0;
  for (size_t i = 0; i + 1 < profile.size(); ++i) {
    if (f[i] * f[i + 1] < 0.0) {
      const double slope =
          (g[i + 1] - g[i]) / (profile[i + 1].y - profile[i].y);
      if (std::abs(slope) <= 1e-8) {
        throw AmbiguousCrossingError("tangential far-field crossing near y = " +
                                     std::to_string(profile[i].y));
      }
      ++count;
    }
  }
  return count;
}

}  // namespace hunter
