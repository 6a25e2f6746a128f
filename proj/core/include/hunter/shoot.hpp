#pragma once

#include <string>
#include <vector>

#include "hunter/integrate.hpp"
#include "hunter/params.hpp"
#include "hunter/series.hpp"
#include "hunter/sonic.hpp"

namespace hunter {

struct ShootOptions {
  double tol = 1e-10;
  int series_order = kDefaultSeriesOrder;
  double delta = 0.0;  // sonic launch offset; 0 selects 1e-3 * y_f
  double y_min = 0.0;  // 0 selects 1e-3 * y_f
  double y_max = 0.0;  // 0 selects 1e3 * y_f
  double glue_tol = 1e-6;
  double tol_sonic = 1e-11;
};

struct ShotDiagnostics {
  double eps;
  double defect;  // finite iff termination == ReachedEnd
  Termination termination;
  double y_end;
  State state_end;
};

struct ProfilePoint {
  double y, rho, u;
};

struct HunterSolution {
  int index;
  double eps;
  double y_star;
  std::vector<ProfilePoint> profile;  // ascending y on [y_min, y_max]
  int crossings;
  double rho_center;
  double lambda_est;
  double sup_density_weight;   // sup y^(2/(2-gamma)) rho over [y_f, y_max]
  double sup_velocity_weight;  // sup y^((gamma-1)/(2-gamma)) |u| over same
  bool invariants_ok;
  std::string diagnostics;
};

/// Launches from the sonic-point series at y* - delta and integrates inward
/// to y_min; the defect u(y_min)/y_min + 2/3 vanishes at Hunter candidates.
/// Throws GlueMismatch if the series and the ODE disagree at the launch
/// point; integrator events terminate the shot without throwing.
ShotDiagnostics shoot_inward(const GammaParams& params, double eps,
                             const ShootOptions& opts = {});

/// Defects over an explicit eps grid, computed concurrently (capped by
/// HUNTER_PROFILES_THREADS) with deterministic ordering. Failed shots carry a
/// NaN defect.
std::vector<ShotDiagnostics> scan_defects(const GammaParams& params,
                                          const std::vector<double>& eps_grid,
                                          const ShootOptions& opts = {});

/// Log-spaced grid over [lo, hi] with the given density per decade.
std::vector<double> log_grid(double lo, double hi, int per_decade);

/// Sign-scans the defect over a log-spaced grid, refines each bracket by
/// bisection to relative width 1e-12 and assembles the roots. Roots are
/// sorted by decreasing eps and indexed by crossing count - 1.
std::vector<HunterSolution> find_hunter(const GammaParams& params,
                                        double eps_lo, double eps_hi,
                                        int grid_per_decade,
                                        const ShootOptions& opts = {});

/// Glues inward and outward trajectories through the sonic series into a
/// global profile and checks the structural invariants.
HunterSolution assemble_profile(const GammaParams& params, double eps_root,
                                const ShootOptions& opts = {});

/// Sign changes of y^(2/(2-gamma)) rho(y) - k along the profile, with
/// simple-zero validation. Throws AmbiguousCrossing on a tangential crossing.
int count_farfield_crossings(const GammaParams& params,
                             const std::vector<ProfilePoint>& profile);

/// Thread cap for concurrent scans (HUNTER_PROFILES_THREADS, default
/// hardware concurrency).
int scan_thread_cap();

}  // namespace hunter
