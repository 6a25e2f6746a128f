#pragma once

#include <array>
#include <complex>

namespace hunter {

struct State;  // system.hpp

/// All gamma-derived constants of the self-similar problem.
///
/// Valid for polytropic index 1 <= gamma < 6/5. The far-field amplitude k,
/// the far-field sonic location y_f, the tail decay exponent mu, the
/// log-oscillation frequency nu and the phase angle theta0 are all explicit
/// closed forms in gamma.
struct GammaParams {
  double gamma;
  double k;
  double y_f;
  double mu;
  double nu;
  double theta0;

  // Frequently used combinations.
  double two_minus_gamma() const { return 2.0 - gamma; }
  // Exponent of the far-field density decay, 2/(2-gamma).
  double alpha() const { return 2.0 / (2.0 - gamma); }
};

/// Computes all constants from gamma. Throws DomainError outside [1, 6/5).
GammaParams derive_params(double gamma);

enum class ExplicitKind { Friedman, FarField };

/// Evaluates one of the two explicit solutions at y.
/// Friedman: (1/(6*pi), -2y/3). FarField: (k*y^(-2/(2-gamma)), 0).
State explicit_solution(const GammaParams& params, ExplicitKind kind, double y);

/// Derivative (rho', u') of an explicit solution at y (closed form).
std::array<double, 2> explicit_solution_derivative(const GammaParams& params,
                                                   ExplicitKind kind, double y);

struct ResidueMatrix {
  // Row-major 2x2 entries of the negated residue of the linearized
  // far-field system at y = 0.
  std::array<std::array<double, 2>, 2> m;
  std::complex<double> eig1;  // -mu + i nu
  std::complex<double> eig2;  // -mu - i nu
};

/// Negated residue matrix at the origin of the (p, v) linearized system and
/// its eigenvalues -mu +- i nu.
ResidueMatrix residue_matrix(const GammaParams& params);

}  // namespace hunter
