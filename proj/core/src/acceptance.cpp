#include "hunter/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "hunter/errors.hpp"
#include "hunter/integrate.hpp"
#include "hunter/laneemden.hpp"
#include "hunter/linear.hpp"
#include "hunter/params.hpp"
#include "hunter/series.hpp"
#include "hunter/shoot.hpp"
#include "hunter/sonic.hpp"
#include "hunter/system.hpp"

namespace hunter {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kGammas[3] = {1.05, 1.1, 1.15};

double relerr(double a, double b) {
  return std::abs(a - b) / std::max(1e-300, std::abs(b));
}

struct Checker {
  bool ok = true;
  std::ostringstream os;
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      note("FAIL " + what);
    }
  }
  void note(const std::string& s) {
    if (os.tellp() > 0) os << "; ";
    os << s;
  }
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

void crit_constants(Checker& c) {
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const double g = 1.0 + 0.2 * (i + 1) / 201.0;
    const GammaParams p = derive_params(g);
    const double e1 = relerr(p.k * std::pow(p.y_f, -p.alpha()),
                             (4.0 - 3.0 * g) / (2.0 * kPi));
    const double e2 = relerr(g * std::pow(p.k, g - 2.0),
                             (2.0 - g) * (2.0 - g) *
                                 std::pow(p.y_f, p.alpha()) / p.k);
    const double e3 = relerr(std::sin(p.theta0),
                             -p.nu * std::sqrt(2.0 - g) / 2.0);
    worst = std::max({worst, e1, e2, e3});
  }
  c.expect(worst < 1e-12, "identity error " + fmt(worst));
  c.note("max identity error " + fmt(worst));
}

void crit_isothermal(Checker& c) {
  const GammaParams p1 = derive_params(1.0);
  c.expect(std::abs(p1.mu - 0.5) <= 1e-14, "mu(1) != 1/2");
  c.expect(std::abs(p1.nu - std::sqrt(7.0) / 2.0) <= 1e-14,
           "nu(1) != sqrt(7)/2");
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double g = 1.0 + 0.2 * (i + 1) / 51.0;
    const GammaParams p = derive_params(g);
    const ResidueMatrix rm = residue_matrix(p);
    worst = std::max(worst,
                     std::abs(rm.eig1 - std::complex<double>(-p.mu, p.nu)));
    worst = std::max(worst,
                     std::abs(rm.eig2 - std::complex<double>(-p.mu, -p.nu)));
  }
  c.expect(worst < 1e-10, "eigenvalue error " + fmt(worst));
}

void crit_explicit(Checker& c) {
  double worst = 0.0;
  for (double g : kGammas) {
    const GammaParams p = derive_params(g);
    for (int i = 0; i < 50; ++i) {
      const double yf = 0.1 + (5.0 - 0.1) * i / 49.0;
      const State sf = explicit_solution(p, ExplicitKind::Friedman, yf);
      const auto df = explicit_solution_derivative(p, ExplicitKind::Friedman, yf);
      const auto rf = residual(p, yf, sf, df);
      worst = std::max({worst, std::abs(rf[0]), std::abs(rf[1])});

      const double yw = 0.5 * p.y_f * std::pow(20.0, i / 49.0);
      const State sw = explicit_solution(p, ExplicitKind::FarField, yw);
      const auto dw = explicit_solution_derivative(p, ExplicitKind::FarField, yw);
      const auto rw = residual(p, yw, sw, dw);
      worst = std::max({worst, std::abs(rw[0]), std::abs(rw[1])});
    }
  }
  c.expect(worst < 1e-10, "explicit residual " + fmt(worst));
  c.note("max residual " + fmt(worst));
}

void crit_sonic_eps0(Checker& c) {
  for (double g : kGammas) {
    const GammaParams p = derive_params(g);
    const SonicPointData sp = solve_sonic(p, 0.0);
    const NormalFormParams nf = characteristic_params_at_sonic(p, sp);
    const double tg = 2.0 - g;
    c.expect(relerr(sp.omega0, tg) < 1e-12, "omega0 at gamma " + fmt(g));
    c.expect(relerr(sp.p0, p.k) < 1e-12, "p0 at gamma " + fmt(g));
    c.expect(relerr(sp.y_star, p.y_f) < 1e-12, "y* at gamma " + fmt(g));
    c.expect(relerr(sp.R, -2.0 / tg) < 1e-10, "R at gamma " + fmt(g));
    c.expect(std::abs(sp.W) < 1e-10, "W at gamma " + fmt(g));
    c.expect(relerr(nf.a_plus_bU, 1.0 / (2.0 * tg * p.y_f)) < 1e-10,
             "a+bU at gamma " + fmt(g));
    c.expect(relerr(nf.kappa, 5.0 * (g - 1.0) / 2.0) < 1e-10,
             "kappa at gamma " + fmt(g));
  }
}

void crit_eps_slopes(Checker& c) {
  const double h = 1e-5;
  for (double g : kGammas) {
    const GammaParams p = derive_params(g);
    const SonicPointData sp_p = solve_sonic(p, h);
    const SonicPointData sp_m = solve_sonic(p, -h);
    const double tg = 2.0 - g;
    auto cd = [h](double a, double b) { return (a - b) / (2.0 * h); };
    const double s_om = cd(sp_p.omega0, sp_m.omega0);
    const double s_p0 = cd(sp_p.p0, sp_m.p0);
    const double s_ys = cd(sp_p.y_star, sp_m.y_star);
    const double s_R = cd(sp_p.R, sp_m.R);
    const double s_W = cd(sp_p.W, sp_m.W);
    c.expect(relerr(s_om, -tg) < 1e-5, "omega0 slope at gamma " + fmt(g));
    c.expect(relerr(s_p0, (3.0 * g - 1.0) * p.k / (2.0 * tg)) < 1e-5,
             "p0 slope at gamma " + fmt(g));
    c.expect(relerr(s_ys, (3.0 * g * g - 8.0 * g + 9.0) * p.y_f / 4.0) < 1e-5,
             "y* slope at gamma " + fmt(g));
    c.expect(relerr(s_R, (-9.0 * g * g + 9.0 * g + 2.0) /
                             ((5.0 * g - 3.0) * tg)) < 1e-5,
             "R slope at gamma " + fmt(g));
    c.expect(relerr(s_W, 2.0 * (7.0 - 3.0 * g) * (g - 1.0) /
                             (5.0 * g - 3.0)) < 1e-5,
             "W slope at gamma " + fmt(g));
  }
}

void crit_series(Checker& c) {
  // (a) far-field re-expansion about y_f.
  for (double g : kGammas) {
    const GammaParams p = derive_params(g);
    const SonicPointData sp = solve_sonic(p, 0.0);
    const TaylorSolution ts = taylor_at_sonic(p, sp, 10);
    double binom = 1.0;
    double worst = 0.0;
    for (int n = 0; n <= 10; ++n) {
      const double expect_rho =
          p.k * binom * std::pow(p.y_f, -p.alpha() - n);
      binom *= (-p.alpha() - n) / (n + 1);
      worst = std::max(worst, std::abs(ts.coeffs_rho[n] - expect_rho) /
                                  std::max(1.0, std::abs(expect_rho)));
      worst = std::max(worst, std::abs(ts.coeffs_u[n]));
    }
    c.expect(worst < 1e-9,
             "re-expansion error " + fmt(worst) + " at gamma " + fmt(g));
  }

  // (b) residual decay on eps = 0.05 data.
  {
    const GammaParams p = derive_params(1.1);
    const SonicPointData sp = solve_sonic(p, 0.05);
    const int N = 10;
    const TaylorSolution ts = taylor_at_sonic(p, sp, N);
    const SeriesPair s{TruncatedSeries(ts.coeffs_rho),
                       TruncatedSeries(ts.coeffs_u)};
    const SeriesPair res = euler_poisson_series_residual(p, sp.y_star, s);
    double low = 0.0, all = 1.0;
    for (int m = 0; m <= std::min(res.a.order(), res.b.order()); ++m) {
      const double mag = std::max(std::abs(res.a[m]), std::abs(res.b[m]));
      all = std::max(all, mag);
      if (m <= N - 1) low = std::max(low, mag);
    }
    c.expect(low < 1e-8 * all, "solved residual orders not small: " + fmt(low));
  }

  // (c) synthetic resonant system with kappa = -2.
  {
    auto res_fn = [](const SeriesPair& s) {
      const int n = s.a.order();
      const TruncatedSeries t = TruncatedSeries::variable(n);
      return SeriesPair{s.a.derivative(),
                        t * s.b.derivative() - s.b * 2.0 + t};
    };
    SeriesPair seed{TruncatedSeries::constant(1.0, 4),
                    TruncatedSeries::constant(0.0, 4)};
    seed.b.at(1) = 1.0;
    bool threw = false;
    try {
      solve_singular_series(res_fn, seed, 4);
    } catch (const Error& e) {
      threw = e.code() == ErrorCode::Resonant ||
              e.code() == ErrorCode::ResonantOrder;
    }
    c.expect(threw, "resonant system did not raise Resonant");
  }
}

void crit_laneemden(Checker& c) {
  const GammaParams p = derive_params(1.1);
  const LaneEmdenSolution le = solve_laneemden(p, 3e13, 1e-11);
  c.expect(le.Q0() == p.gamma / (p.gamma - 1.0), "Q(0) normalization");
  const double up0 = le.ustar(1e-4) / 1e-4;
  c.expect(std::abs(up0 + 2.0 / 3.0) < 1e-6, "u*'(0) = " + fmt(up0));

  // Density tail exponent by log-log regression.
  {
    const IntegrationResult& outer = le.outer();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (size_t i = 0; i < outer.ys.size(); ++i) {
      const double y = outer.ys[i];
      if (y < 1e2) continue;
      const double lr = std::log(le.density_from(outer.states[i][0]));
      const double ly = std::log(y);
      sx += ly;
      sy += lr;
      sxx += ly * ly;
      sxy += ly * lr;
      ++n;
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    c.expect(relerr(slope, -p.alpha()) < 0.01, "tail exponent " + fmt(slope));
  }

  const TailFit tf = fit_tail(p, le);
  c.expect(relerr(tf.freq_diag, p.nu) < 0.01,
           "tail frequency " + fmt(tf.freq_diag));
  const OscFit uf = fit_ustar_tail(p, le);
  const double off = wrap_phase(uf.d, tf.d2 + p.theta0);
  c.expect(std::abs(off) < 0.02 * 2.0 * kPi, "u* phase offset " + fmt(off));
  c.note("c2=" + fmt(tf.c2) + " d2=" + fmt(tf.d2));
}

void crit_linear(Checker& c) {
  const GammaParams p = derive_params(1.1);
  const double g = p.gamma;
  const double tg = 2.0 - g;
  const HomSolution hom(p);
  const HomValue v = hom.evaluate(p.y_f);
  c.expect(relerr(v.p, (3.0 * g - 1.0) * p.k / (2.0 * tg)) < 1e-8, "p(y_f)");
  c.expect(relerr(v.w, -tg) < 1e-8, "w(y_f)");
  c.expect(relerr(v.dp, (-9.0 * g * g + 9.0 * g + 2.0) /
                            ((5.0 * g - 3.0) * tg) * p.k / p.y_f) < 1e-8,
           "p'(y_f)");
  c.expect(relerr(v.dw, 2.0 * (g - 1.0) * (7.0 - 3.0 * g) /
                            (5.0 * g - 3.0) / p.y_f) < 1e-8,
           "w'(y_f)");

  double worst = 0.0;
  for (int i = 0; i < 40; ++i) {
    const double xi = -0.85 + 1.7 * i / 39.0;
    const double z = p.y_f * std::pow(1.0 - xi, -1.0 / p.alpha());
    const HomValue hv = hom.evaluate(z);
    const auto r = linear_residual(p, z, hv);
    const double zi = std::pow(z, -p.alpha());
    const double sc1 = std::abs(tg * z * hv.dp) + std::abs(p.k * z * hv.dw) +
                       std::abs((4.0 - 3.0 * g) * p.k / tg * hv.w);
    const double sc2 =
        std::abs(2.0 * kPi * tg * tg / (4.0 - 3.0 * g) * z * zi * hv.dp) +
        std::abs(tg * z * hv.dw) +
        std::abs(4.0 * kPi * tg * tg / (4.0 - 3.0 * g) * zi * hv.p) +
        std::abs((1.0 + 4.0 * kPi * p.k / (4.0 - 3.0 * g) * zi) * hv.w);
    worst = std::max({worst, std::abs(r[0]) / std::max(sc1, 1e-300),
                      std::abs(r[1]) / std::max(sc2, 1e-300)});
  }
  c.expect(worst < 1e-8, "linear residual " + fmt(worst));

  const AsymptoticConstants ac = extract_c1_d1(p, hom);
  c.expect(ac.c1 > 0.0, "c1 > 0");
  const double off = wrap_phase(ac.w_phase, ac.d1 + p.theta0);
  c.expect(std::abs(off) < 0.02 * 2.0 * kPi, "hom phase offset " + fmt(off));
  c.note("c1=" + fmt(ac.c1) + " d1=" + fmt(ac.d1));
}

const std::vector<HunterSolution>& hunter_roots() {
  static const std::vector<HunterSolution> roots = [] {
    const GammaParams p = derive_params(1.1);
    // y_min below the deepest resolvable core scale; the default 1e-3 y_f
    // only resolves the largest root.
    ShootOptions o;
    o.y_min = 1e-5 * p.y_f;
    return find_hunter(p, 1e-6, 0.5, 80, o);
  }();
  return roots;
}

void crit_hunter(Checker& c) {
  const GammaParams p = derive_params(1.1);
  const auto& roots = hunter_roots();
  std::vector<const HunterSolution*> good;
  for (const auto& r : roots) {
    if (r.invariants_ok) good.push_back(&r);
  }
  c.expect(good.size() >= 3,
           "only " + std::to_string(good.size()) + " clean roots");
  for (size_t i = 0; i + 1 < good.size(); ++i) {
    c.expect(good[i + 1]->crossings == good[i]->crossings + 1,
             "crossing counts not consecutive at root " + std::to_string(i));
  }
  if (!good.empty()) {
    c.note("crossings start at " + std::to_string(good.front()->crossings));
  }
  if (good.size() >= 2) {
    // Regress against the solution index (crossings - 1), not the position
    // in the positive-eps list.
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < good.size(); ++i) {
      const double x = static_cast<double>(good[i]->index);
      const double y = std::log(std::abs(good[i]->eps));
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    const double n = static_cast<double>(good.size());
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    const double expect = -kPi * p.mu / p.nu;
    c.expect(relerr(slope, expect) < 0.15,
             "eps spacing slope " + fmt(slope) + " vs " + fmt(expect));
    c.note("slope " + fmt(slope));
  }
}

void crit_bounds(Checker& c) {
  const auto& roots = hunter_roots();
  int reported = 0;
  for (const auto& r : roots) {
    if (!r.invariants_ok) continue;
    c.expect(std::isfinite(r.sup_density_weight) && r.sup_density_weight > 0.0,
             "density bound at eps " + fmt(r.eps));
    c.expect(std::isfinite(r.sup_velocity_weight),
             "velocity bound at eps " + fmt(r.eps));
    if (reported++ < 3) {
      c.note("eps " + fmt(r.eps) + ": sup_rho " + fmt(r.sup_density_weight) +
             ", sup_u " + fmt(r.sup_velocity_weight));
    }
  }
  c.expect(reported > 0, "no clean roots to bound");
}

std::string determinism_summary() {
  std::ostringstream os;
  char buf[96];
  auto put = [&](const char* key, double v) {
    std::snprintf(buf, sizeof buf, "%s=%.17g\n", key, v);
    os << buf;
  };
  const GammaParams p = derive_params(1.1);
  put("k", p.k);
  put("y_f", p.y_f);
  put("mu", p.mu);
  put("nu", p.nu);
  put("theta0", p.theta0);
  const SonicPointData sp = solve_sonic(p, 0.05);
  put("omega0", sp.omega0);
  put("p0", sp.p0);
  put("y_star", sp.y_star);
  put("R", sp.R);
  put("W", sp.W);
  const auto shots = scan_defects(p, log_grid(1e-3, 0.3, 10), ShootOptions{});
  for (const auto& s : shots) {
    std::snprintf(buf, sizeof buf, "defect[%.17g]=%.17g\n", s.eps, s.defect);
    os << buf;
  }
  return os.str();
}

void crit_determinism(Checker& c) {
  const std::string a = determinism_summary();
  const std::string b = determinism_summary();
  c.expect(a == b, "summaries differ between runs");
  c.note(std::to_string(a.size()) + " bytes compared");
}

struct Entry {
  const char* name;
  void (*fn)(Checker&);
  double limit_s;
};

constexpr Entry kEntries[] = {
    {"constant-identities", crit_constants, 1.0},
    {"isothermal-limit", crit_isothermal, 0.0},
    {"explicit-solutions", crit_explicit, 0.0},
    {"sonic-data-eps0", crit_sonic_eps0, 0.0},
    {"eps-expansion-slopes", crit_eps_slopes, 0.0},
    {"series-launcher", crit_series, 0.0},
    {"lane-emden", crit_laneemden, 30.0},
    {"linear-analysis", crit_linear, 0.0},
    {"hunter-enumeration", crit_hunter, 300.0},
    {"pointwise-bounds", crit_bounds, 0.0},
    {"determinism", crit_determinism, 0.0},
};

}  // namespace

CriterionResult run_criterion(int id) {
  if (id < 1 || id > 11) {
    throw DomainError("criterion id must be in [1, 11]");
  }
  const Entry& e = kEntries[id - 1];
  CriterionResult r{id, e.name, false, "", 0.0};
  Checker c;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    e.fn(c);
    r.pass = c.ok;
  } catch (const std::exception& ex) {
    r.pass = false;
    c.note(std::string("exception: ") + ex.what());
  }
  r.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  if (e.limit_s > 0.0 && r.seconds > e.limit_s) {
    r.pass = false;
    c.note("runtime " + fmt(r.seconds) + "s exceeds " + fmt(e.limit_s) + "s");
  }
  r.detail = c.os.str();
  return r;
}

std::vector<CriterionResult> run_acceptance() {
  std::vector<CriterionResult> out;
  out.reserve(11);
  for (int id = 1; id <= 11; ++id) out.push_back(run_criterion(id));
  return out;
}

}  // namespace hunter
