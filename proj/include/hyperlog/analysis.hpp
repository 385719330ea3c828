#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "hyperlog/logtype.hpp"

namespace hyperlog {

using RealFn = std::function<double(double)>;

// ---------------------------------------------------------------------------
// Root finding

inline constexpr int kRootMaxIterations = 200;

/// Root of f in [lo, hi] given a sign change. Secant steps, with a bisection
/// step whenever the previous step failed to halve the bracket. Stops when
/// |f(r)| <= tol or the bracket width is <= tol. Deterministic.
///
/// Throws BracketError without a sign change and EvaluationError when f
/// returns a non-finite value.
double bracket_root(const RealFn& f, double lo, double hi, double tol);

/// Unique s > 1 with g(s / (1 + s)) = 1. The bracket search starts at s = 1,
/// so it fails (BracketError, message carries g(1/2)) when g(1/2) >= 1.
double gamma_root(const ZeroBalancedPair& pair);

/// Unique x in (0, 1) with g(u / (1 + u)) = 1, u = phi^{-1}(x / (1 - x)).
double beta_root(const ZeroBalancedPair& pair, const PhiExponents& e);

/// Unique positive root of s(x) = log(1+x) log(1 + log(1+x)) = 1.
double x0_root();

// ---------------------------------------------------------------------------
// Grids and shape checks

enum class Spacing { Linear, Log };

const char* to_string(Spacing s);

struct GridSpec {
  double lo = 0.0;
  double hi = 1.0;
  int n_points = 2048;
  Spacing spacing = Spacing::Linear;

  /// Throws DomainError unless lo < hi, n_points >= 3, and lo > 0 for Log.
  void validate() const;
  double at(int i) const;
  std::vector<double> points() const;
};

inline constexpr int kDefaultGridPoints = 2048;

/// Default sweep over s in (1e-4, 1e4), log spaced.
GridSpec default_s_grid(int n = kDefaultGridPoints);
/// Default sweep over x in (1e-6, 1 - 1e-6), linearly spaced.
GridSpec default_x_grid(int n = kDefaultGridPoints);

/// Absolute slack for finite-difference shape checks.
inline constexpr double kShapeSlack = 1e-9;

enum class Direction { Increasing, Decreasing, Either };
enum class MonotoneKind { Increasing, Decreasing, NonMonotone };

const char* to_string(MonotoneKind k);

struct MonotonicityVerdict {
  MonotoneKind kind = MonotoneKind::NonMonotone;
  /// Most negative consecutive difference measured in the verdict's
  /// direction (or in the requested direction when NonMonotone).
  double worst_violation = 0.0;
  /// Left end of the worst step; always set for NonMonotone.
  std::optional<double> witness;
};

MonotonicityVerdict check_monotone(const RealFn& f, const GridSpec& grid,
                                   Direction direction,
                                   double slack = kShapeSlack);

/// Same check on values already sampled at xs.
MonotonicityVerdict check_monotone(const std::vector<double>& xs,
                                   const std::vector<double>& values,
                                   Direction direction,
                                   double slack = kShapeSlack);

enum class CurvatureKind { Concave, Convex, Neither };

const char* to_string(CurvatureKind k);

struct ConcavityVerdict {
  CurvatureKind kind = CurvatureKind::Neither;
  double max_second_diff = 0.0;
  double min_second_diff = 0.0;
  std::optional<double> witness_positive;  // point of the largest 2nd diff
  std::optional<double> witness_negative;  // point of the smallest 2nd diff
};

/// Second differences f(x-) - 2 f(x) + f(x+) (normalised for uneven
/// spacing so they coincide with the plain form on uniform grids). The two
/// outermost points at each end are not used as centres.
ConcavityVerdict check_concavity(const RealFn& f, const GridSpec& grid,
                                 double slack = kShapeSlack);
ConcavityVerdict check_concavity(const std::vector<double>& xs,
                                 const std::vector<double>& values,
                                 double slack = kShapeSlack);

/// Normalised second differences at centres 1..n-2 (entry i-1 for centre i).
std::vector<double> second_differences(const std::vector<double>& xs,
                                       const std::vector<double>& values);

// ---------------------------------------------------------------------------
// Closed-form predictions

enum class LogConvexity { Convex, Concave };
enum class Region { UnitInterval, AboveOne };

/// Monotonicity of x -> f(x^c) / f(x)^c on the given region, predicted from
/// the convexity of log f(e^x). For c = 1 the ratio is constant and the
/// result is Increasing (non-strict). Throws DomainError for c = 0.
MonotoneKind classify_power_ratio(LogConvexity h, double c, Region region);

enum class BetaSide { PredictGT, PredictLT, Inconclusive };

const char* to_string(BetaSide s);

/// Thresholds on (a0 - 1) / h deciding beta > 1/2 or beta < 1/2.
double beta_threshold_c0();  // 1 - 1/(2 log 2)
double beta_threshold_c1();  // 1/log 2 - 1

/// PredictGT when (a0-1)/h <= c0, PredictLT when >= c1, else Inconclusive.
BetaSide predict_beta_side(const ZeroBalancedPair& pair);

}  // namespace hyperlog
