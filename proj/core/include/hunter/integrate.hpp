#pragma once

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "hunter/params.hpp"
#include "hunter/system.hpp"

namespace hunter {

enum class EventKind { SonicCrossing, DensityFloor, Blowup };

struct Event {
  EventKind kind;
  double y;
};

enum class Termination {
  ReachedEnd,
  DensityFloor,
  Blowup,
  SonicCollision,
};

/// Right-hand side in the integration variable: maps (x, state) to dstate/dx.
using RhsFn =
    std::function<std::array<double, 2>(double, const std::array<double, 2>&)>;

/// Scalar event function; a sign change across a step is located by bisection
/// on the dense output.
using EventFn = std::function<double(double, const std::array<double, 2>&)>;

struct IntegrateOptions {
  double tol = 1e-10;
  double density_floor = 1e-14;
  double overflow_guard = 1e12;
  /// Step in log(y) instead of y; requires positive y0, y1.
  bool log_independent = false;
  /// Treat component 0 as a density for the floor event. Disable for test
  /// problems whose components are not densities.
  bool track_density = true;
  EventFn sonic_event;  // optional; sign changes recorded as SonicCrossing
  int max_steps = 4000000;
};

/// One accepted step's continuous extension (stored in the integration
/// variable x, which is y or log y depending on the options).
struct DenseStep {
  double x0, h;
  std::array<std::array<double, 2>, 5> rcont;
  std::array<double, 2> eval(double x) const;
};

struct IntegrationResult {
  bool in_log = false;
  std::vector<double> ys;  // physical variable, strictly monotone
  std::vector<std::array<double, 2>> states;
  std::vector<DenseStep> dense;
  std::vector<Event> events;
  Termination termination = Termination::ReachedEnd;
  double y_end = 0.0;
  std::array<double, 2> state_end{};

  /// Dense-output interpolation at physical y within the covered range.
  std::array<double, 2> interpolate(double y) const;
};

/// Adaptive Dormand-Prince 5(4) with PI step control and dense output.
/// Integrates dstate/dy = rhs from y0 to y1 (either direction). SonicCollision
/// termination is triggered when rhs throws SonicSingular. Throws Stiffness
/// on step-size underflow.
IntegrationResult integrate(const RhsFn& rhs, double y0,
                            const std::array<double, 2>& s0, double y1,
                            const IntegrateOptions& opt = {});

/// Convenience wrapper for the self-similar system in (rho, u) with the sonic
/// discriminant wired as the crossing event.
IntegrationResult integrate_rho_u(const GammaParams& params, double y0,
                                  const State& s0, double y1,
                                  const IntegrateOptions& opt = {},
                                  double tol_sonic = kDefaultSonicTol);

/// First sonic-discriminant zero along the trajectory, if any.
std::optional<double> detect_sonic(const GammaParams& params,
                                   const IntegrationResult& result);

}  // namespace hunter
