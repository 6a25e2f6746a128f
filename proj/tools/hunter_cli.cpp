#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hunter/acceptance.hpp"
#include "hunter/config.hpp"
#include "hunter/errors.hpp"
#include "hunter/laneemden.hpp"
#include "hunter/linear.hpp"
#include "hunter/params.hpp"
#include "hunter/shoot.hpp"
#include "hunter/sonic.hpp"
#include "hunter/system.hpp"

namespace {

using hunter::RunConfig;
using json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

constexpr const char* kExitCodes =
    "Exit codes:\n"
    "  0  success\n"
    "  2  domain or configuration error\n"
    "  3  numerical failure (convergence, fit, resonance, stiffness)\n"
    "  4  file I/O error\n"
    "  5  verification failure\n";

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << content)) {
    throw std::ios_base::failure("cannot write " + path);
  }
}

std::string profile_csv(const hunter::GammaParams& p,
                        const std::vector<hunter::ProfilePoint>& profile) {
  std::ostringstream os;
  os << "y,rho,u,p,w,D\n";
  for (const auto& pt : profile) {
    const hunter::State s{pt.rho, pt.u};
    const hunter::PWState pw = hunter::to_pw(p, pt.y, s);
    const double D = hunter::sonic_discriminant(p, pt.y, s);
    os << fmt17(pt.y) << ',' << fmt17(pt.rho) << ',' << fmt17(pt.u) << ','
       << fmt17(pw.p) << ',' << fmt17(pw.w) << ',' << fmt17(D) << '\n';
  }
  return os.str();
}

json params_json(const hunter::GammaParams& p) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["gamma"] = p.gamma;
  j["k"] = p.k;
  j["y_f"] = p.y_f;
  j["mu"] = p.mu;
  j["nu"] = p.nu;
  j["theta0"] = p.theta0;
  j["identity_k_yf"] = p.k * std::pow(p.y_f, -p.alpha()) -
                       (4.0 - 3.0 * p.gamma) / (2.0 * M_PI);
  j["identity_sound"] =
      p.gamma * std::pow(p.k, p.gamma - 2.0) -
      (2.0 - p.gamma) * (2.0 - p.gamma) * std::pow(p.y_f, p.alpha()) / p.k;
  j["identity_theta0"] =
      std::sin(p.theta0) + p.nu * std::sqrt(2.0 - p.gamma) / 2.0;
  return j;
}

json solution_json(const hunter::HunterSolution& s) {
  json j;
  j["index"] = s.index;
  j["eps"] = s.eps;
  j["y_star"] = s.y_star;
  j["crossings"] = s.crossings;
  j["rho_center"] = s.rho_center;
  j["lambda_est"] = s.lambda_est;
  j["sup_density_weight"] = s.sup_density_weight;
  j["sup_velocity_weight"] = s.sup_velocity_weight;
  j["invariants_ok"] = s.invariants_ok;
  j["diagnostics"] = s.diagnostics;
  return j;
}

hunter::ShootOptions shoot_options(const RunConfig& cfg) {
  hunter::ShootOptions o;
  o.tol = cfg.tol;
  o.tol_sonic = cfg.sonic_tol;
  o.series_order = cfg.order;
  o.delta = cfg.delta;
  o.y_min = cfg.ymin;
  o.y_max = cfg.ymax;
  return o;
}

int cmd_params(const RunConfig& cfg) {
  const hunter::GammaParams p = hunter::derive_params(cfg.gamma);
  write_output(cfg.out, params_json(p).dump(2) + "\n");
  return 0;
}

int cmd_sonic(const RunConfig& cfg) {
  const hunter::GammaParams p = hunter::derive_params(cfg.gamma);
  const hunter::SonicPointData sp = hunter::solve_sonic(p, cfg.eps);
  const hunter::NormalFormParams nf =
      hunter::characteristic_params_at_sonic(p, sp);
  json j;
  j["schema_version"] = kSchemaVersion;
  j["eps"] = sp.eps;
  j["omega0"] = sp.omega0;
  j["p0"] = sp.p0;
  j["y_star"] = sp.y_star;
  j["rho0"] = sp.rho0;
  j["u0"] = sp.u0;
  j["R"] = sp.R;
  j["W"] = sp.W;
  j["rho1"] = sp.rho1;
  j["u1"] = sp.u1;
  j["normal_form"] = {{"a", nf.a},       {"b", nf.b},
                      {"c", nf.c},       {"d", nf.d},
                      {"U", nf.U},       {"kappa", nf.kappa},
                      {"a_plus_bU", nf.a_plus_bU},
                      {"kappa_admissible", nf.kappa_admissible}};
  write_output(cfg.out, j.dump(2) + "\n");
  return 0;
}

int cmd_shoot(const RunConfig& cfg) {
  const hunter::GammaParams p = hunter::derive_params(cfg.gamma);
  const auto roots = hunter::find_hunter(p, cfg.scan_lo, cfg.scan_hi,
                                         cfg.grid_per_decade,
                                         shoot_options(cfg));
  json j;
  j["schema_version"] = kSchemaVersion;
  j["gamma"] = cfg.gamma;
  j["scan_lo"] = cfg.scan_lo;
  j["scan_hi"] = cfg.scan_hi;
  j["solutions"] = json::array();
  for (const auto& r : roots) j["solutions"].push_back(solution_json(r));
  if (!cfg.out.empty()) {
    for (size_t i = 0; i < roots.size(); ++i) {
      if (roots[i].profile.empty()) continue;
      write_output(cfg.out + ".root" + std::to_string(i) + ".csv",
                   profile_csv(p, roots[i].profile));
    }
  }
  write_output(cfg.out, j.dump(2) + "\n");
  return 0;
}

int cmd_profile(const RunConfig& cfg) {
  const hunter::GammaParams p = hunter::derive_params(cfg.gamma);
  const hunter::HunterSolution sol =
      hunter::assemble_profile(p, cfg.eps, shoot_options(cfg));
  if (cfg.format == hunter::OutputFormat::Csv) {
    write_output(cfg.out, profile_csv(p, sol.profile));
  } else {
    json j = solution_json(sol);
    j["schema_version"] = kSchemaVersion;
    write_output(cfg.out, j.dump(2) + "\n");
  }
  return 0;
}

int cmd_laneemden(const RunConfig& cfg) {
  const hunter::GammaParams p = hunter::derive_params(cfg.gamma);
  const double y_max = cfg.ymax > 0.0 ? cfg.ymax : cfg.laneemden_ymax;
  const hunter::LaneEmdenSolution le =
      hunter::solve_laneemden(p, y_max, std::min(cfg.tol, 1e-11));
  const hunter::TailFit tf = hunter::fit_tail(p, le);

  if (!cfg.out.empty()) {
    std::ostringstream os;
    os << "y,Q,rho,ustar\n";
    const auto& outer = le.outer();
    for (size_t i = 0; i < outer.ys.size(); ++i) {
      const double y = outer.ys[i];
      os << fmt17(y) << ',' << fmt17(outer.states[i][0]) << ','
         << fmt17(le.density_from(outer.states[i][0])) << ','
         << fmt17(le.ustar_from(y, outer.states[i][0], outer.states[i][1]))
         << '\n';
    }
    write_output(cfg.out, os.str());
  }
  json j;
  j["schema_version"] = kSchemaVersion;
  j["gamma"] = cfg.gamma;
  j["y_max"] = y_max;
  j["Q0"] = le.Q0();
  j["c2"] = tf.c2;
  j["d2"] = tf.d2;
  j["fit_residual"] = tf.residual_rel;
  j["freq_diag"] = tf.freq_diag;
  j["decay_diag"] = tf.decay_diag;
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_linear(const RunConfig& cfg) {
  const hunter::GammaParams p = hunter::derive_params(cfg.gamma);
  const hunter::HomSolution hom(p);
  const hunter::HomValue v0 = hom.evaluate(p.y_f);
  const hunter::AsymptoticConstants ac =
      hunter::extract_c1_d1(p, hom, std::min(cfg.tol, 1e-11));

  if (!cfg.out.empty()) {
    std::ostringstream os;
    os << "z,p_hom,w_hom\n";
    for (int i = 0; i < 200; ++i) {
      const double xi = -0.85 + 1.7 * i / 199.0;
      const double z = p.y_f * std::pow(1.0 - xi, -1.0 / p.alpha());
      const hunter::HomValue v = hom.evaluate(z);
      os << fmt17(z) << ',' << fmt17(v.p) << ',' << fmt17(v.w) << '\n';
    }
    write_output(cfg.out, os.str());
  }
  json j;
  j["schema_version"] = kSchemaVersion;
  j["gamma"] = cfg.gamma;
  j["p_hom_yf"] = v0.p;
  j["w_hom_yf"] = v0.w;
  j["dp_hom_yf"] = v0.dp;
  j["dw_hom_yf"] = v0.dw;
  j["c1"] = ac.c1;
  j["d1"] = ac.d1;
  j["w_phase"] = ac.w_phase;
  j["fit_residual"] = ac.residual_rel;
  j["decay_diag"] = ac.decay_diag;
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_verify(const RunConfig& cfg) {
  const auto results = hunter::run_acceptance();
  std::ostringstream os;
  bool all_pass = true;
  for (const auto& r : results) {
    os << "criterion " << r.id << " " << r.name << ": "
       << (r.pass ? "PASS" : "FAIL");
    if (!r.detail.empty()) os << " [" << r.detail << "]";
    os << "\n";
    std::cerr << "criterion " << r.id << " took " << r.seconds << " s\n";
    all_pass = all_pass && r.pass;
  }
  write_output(cfg.out, os.str());
  if (!cfg.out.empty()) std::cout << os.str();
  return all_pass ? 0 : 5;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Self-similar Hunter-type blow-up profiles of the isentropic "
               "gravitational Euler-Poisson system (1 < gamma < 6/5)"};
  app.footer(kExitCodes);
  app.require_subcommand(1);

  std::string config_path;
  std::optional<double> gamma, eps, tol, ymin, ymax, scan_lo, scan_hi;
  std::optional<int> order, grid_per_decade;
  std::optional<std::string> out, format;

  app.add_option("--config", config_path, "key=value config file");
  app.add_option("--gamma", gamma, "polytropic index in (1, 6/5)");
  app.add_option("--eps", eps, "sonic shooting parameter");
  app.add_option("--order", order, "Taylor series order");
  app.add_option("--tol", tol, "integrator tolerance");
  app.add_option("--ymin", ymin, "inner profile endpoint");
  app.add_option("--ymax", ymax, "outer profile endpoint");
  app.add_option("--scan-lo", scan_lo, "eps scan lower bound");
  app.add_option("--scan-hi", scan_hi, "eps scan upper bound");
  app.add_option("--grid-per-decade", grid_per_decade,
                 "eps scan grid density per decade");
  app.add_option("--out", out, "output file path (default stdout)");
  app.add_option("--format", format, "output format: csv or json");
  app.fallthrough();

  auto* sc_params = app.add_subcommand("params", "gamma-derived constants");
  auto* sc_sonic = app.add_subcommand("sonic", "sonic point data");
  auto* sc_shoot = app.add_subcommand("shoot", "enumerate Hunter candidates");
  auto* sc_profile = app.add_subcommand("profile", "assemble one profile");
  auto* sc_le = app.add_subcommand("laneemden", "Lane-Emden tail constants");
  auto* sc_linear = app.add_subcommand("linear", "exterior linear analysis");
  auto* sc_verify = app.add_subcommand("verify", "run the acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    RunConfig cfg;
    if (!config_path.empty()) cfg = hunter::load_config(config_path);
    if (gamma) cfg.gamma = *gamma;
    if (eps) cfg.eps = *eps;
    if (order) cfg.order = *order;
    if (tol) cfg.tol = *tol;
    if (ymin) cfg.ymin = *ymin;
    if (ymax) cfg.ymax = *ymax;
    if (scan_lo) cfg.scan_lo = *scan_lo;
    if (scan_hi) cfg.scan_hi = *scan_hi;
    if (grid_per_decade) cfg.grid_per_decade = *grid_per_decade;
    if (out) cfg.out = *out;
    if (format) {
      if (*format == "csv") {
        cfg.format = hunter::OutputFormat::Csv;
      } else if (*format == "json") {
        cfg.format = hunter::OutputFormat::Json;
      } else {
        throw hunter::ConfigError("format must be csv or json");
      }
    }
    cfg.validate();

    if (sc_params->parsed()) return cmd_params(cfg);
    if (sc_sonic->parsed()) return cmd_sonic(cfg);
    if (sc_shoot->parsed()) return cmd_shoot(cfg);
    if (sc_profile->parsed()) return cmd_profile(cfg);
    if (sc_le->parsed()) return cmd_laneemden(cfg);
    if (sc_linear->parsed()) return cmd_linear(cfg);
    if (sc_verify->parsed()) return cmd_verify(cfg);
    return 2;
  } catch (const hunter::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    const auto code = e.code();
    return (code == hunter::ErrorCode::Domain ||
            code == hunter::ErrorCode::Config)
               ? 2
               : 3;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
