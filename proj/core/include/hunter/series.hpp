#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "hunter/params.hpp"
#include "hunter/system.hpp"

namespace hunter {

/// Univariate truncated power series c_0 + c_1 t + ... + c_N t^N.
/// All arithmetic is exact to the truncation order of the left operand;
/// mixed-order operations truncate to the shorter order.
class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  explicit TruncatedSeries(std::vector<double> coeffs)
      : c_(std::move(coeffs)) {}
  static TruncatedSeries constant(double value, int order);
  /// The series t (identity in the local variable), truncated at `order`.
  static TruncatedSeries variable(int order);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  double operator[](int i) const {
    return i < static_cast<int>(c_.size()) ? c_[i] : 0.0;
  }
  double& at(int i) { return c_[i]; }
  const std::vector<double>& coeffs() const { return c_; }

  TruncatedSeries operator+(const TruncatedSeries& o) const;
  TruncatedSeries operator-(const TruncatedSeries& o) const;
  TruncatedSeries operator*(const TruncatedSeries& o) const;
  TruncatedSeries operator*(double s) const;
  TruncatedSeries operator+(double s) const;
  /// Requires a nonzero constant term in the divisor.
  TruncatedSeries operator/(const TruncatedSeries& o) const;
  TruncatedSeries reciprocal() const;
  /// Real power; requires a positive constant term.
  TruncatedSeries pow(double alpha) const;
  /// Termwise derivative (order drops by one).
  TruncatedSeries derivative() const;
  /// Divides by t; requires a zero constant term.
  TruncatedSeries shift_down() const;

  double eval(double t) const;
  double eval_derivative(double t) const;

 private:
  std::vector<double> c_;
};

/// A pair of truncated series (first, second) representing the two unknowns
/// of a 2x2 singular system near its expansion point.
struct SeriesPair {
  TruncatedSeries a;
  TruncatedSeries b;
};

/// Residual functor of a 2-component ODE system in local series form: maps
/// candidate series for the unknowns to the residual series of the equation.
using SeriesResidualFn = std::function<SeriesPair(const SeriesPair&)>;

/// Taylor solution of the self-similar system at a singular expansion point.
struct TaylorSolution {
  double center;
  std::vector<double> coeffs_rho;
  std::vector<double> coeffs_u;
  double radius_estimate;
  double trust_safety = 0.5;

  /// Value and derivative at y; throws TrustRegionExceeded outside
  /// |y - center| < radius_estimate * trust_safety.
  std::pair<State, std::array<double, 2>> evaluate(double y) const;
};

inline constexpr int kDefaultSeriesOrder = 10;
inline constexpr double kResonanceConditionThreshold = 1e12;

/// Determines coefficients 2..N of a 2-component singular system by
/// order-by-order linear solves against the residual series. Coefficients of
/// orders 0 and 1 must already be set in `seed` (seed series must have order
/// >= N). The residual at order m is projected onto a direction transverse to
/// the left null vector of the leading coefficient matrix, paired with the
/// null-vector projection of the order m+1 residual; the resulting 2x2 system
/// is solved with partial pivoting. Throws ResonantOrder when its condition
/// number exceeds kResonanceConditionThreshold.
SeriesPair solve_singular_series(const SeriesResidualFn& residual_fn,
                                 SeriesPair seed, int order);

/// Taylor data at a sonic point with Larson-Penston-Hunter boundary data.
struct SonicPointData;  // sonic.hpp
TaylorSolution taylor_at_sonic(const GammaParams& params,
                               const SonicPointData& sp,
                               int order = kDefaultSeriesOrder);

/// Taylor data at the regular center: rho(0) = rho_center, u'(0) = -2/3.
TaylorSolution taylor_at_origin(const GammaParams& params, double rho_center,
                                int order = kDefaultSeriesOrder);

/// Residual series of the self-similar system for candidate series about
/// y_c > 0 (sonic form) or y_c = 0 (origin form, first equation cleared of
/// the 1/y pole). Exposed for residual-decay tests.
SeriesPair euler_poisson_series_residual(const GammaParams& params,
                                         double center, const SeriesPair& s);

}  // namespace hunter
