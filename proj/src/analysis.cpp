#include "hyperlog/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hyperlog/errors.hpp"

namespace hyperlog {

namespace {

double eval_checked(const RealFn& f, double x) {
  const double v = f(x);
  if (!std::isfinite(v)) {
    throw EvaluationError("function returned a non-finite value at x=" +
                              std::to_string(x),
                          x);
  }
  return v;
}

std::vector<double> sample(const RealFn& f, const std::vector<double>& xs) {
  std::vector<double> out;
  out.reserve(xs.size());
  for (double x : xs) out.push_back(eval_checked(f, x));
  return out;
}

}  // namespace

double bracket_root(const RealFn& f, double lo, double hi, double tol) {
  if (!(tol > 0.0)) throw DomainError("bracket_root: tol must be positive");
  if (!(lo < hi)) std::swap(lo, hi);
  double f_lo = eval_checked(f, lo);
  double f_hi = eval_checked(f, hi);
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  if ((f_lo < 0.0) == (f_hi < 0.0)) {
    throw BracketError("bracket_root: no sign change on [" + std::to_string(lo) +
                       ", " + std::to_string(hi) + "]");
  }

  double prev_width = hi - lo;
  bool force_bisect = false;
  for (int iter = 0; iter < kRootMaxIterations; ++iter) {
    double x = hi - f_hi * (hi - lo) / (f_hi - f_lo);
    if (force_bisect || !(x > lo && x < hi)) x = lo + 0.5 * (hi - lo);
    const double fx = eval_checked(f, x);
    if (std::abs(fx) <= tol) return x;
    if ((fx < 0.0) == (f_lo < 0.0)) {
      lo = x;
      f_lo = fx;
    } else {
      hi = x;
      f_hi = fx;
    }
    const double width = hi - lo;
    if (width <= tol) return std::abs(f_lo) <= std::abs(f_hi) ? lo : hi;
    force_bisect = width > 0.5 * prev_width;
    prev_width = width;
  }
  return lo + 0.5 * (hi - lo);
}

double gamma_root(const ZeroBalancedPair& pair) {
  const double g_half = g_fn(pair, 0.5);
  if (!(g_half < 1.0)) {
    throw BracketError("gamma root: g(1/2) = " + std::to_string(g_half) +
                       " >= 1, no root with s > 1");
  }
  // Work in u = log s; g(e^u/(1+e^u)) is increasing in u.
  auto f = [&](double u) { return g_logistic(pair, u) - 1.0; };
  double hi = 1.0;
  while (f(hi) <= 0.0) {
    hi *= 2.0;
    if (hi > 700.0) throw BracketError("gamma root: bracket search failed");
  }
  const double u = bracket_root(f, 0.0, hi, 1e-15);
  return std::exp(u);
}

double beta_root(const ZeroBalancedPair& pair, const PhiExponents& e) {
  // In logit coordinates v = log(x/(1-x)), log phi^{-1}(e^v) = v/a or v/b.
  auto f = [&](double v) {
    const double log_u = v <= 0.0 ? v / e.a() : v / e.b();
    return g_logistic(pair, log_u) - 1.0;
  };
  double lo = -1.0;
  double hi = 1.0;
  while (f(lo) >= 0.0) {
    lo *= 2.0;
    if (lo < -700.0) throw BracketError("beta root: lower bracket failed");
  }
  while (f(hi) <= 0.0) {
    hi *= 2.0;
    if (hi > 700.0) throw BracketError("beta root: upper bracket failed");
  }
  const double v = bracket_root(f, lo, hi, 1e-15);
  return 1.0 / (1.0 + std::exp(-v));
}

double x0_root() {
  return bracket_root([](double x) { return s_fn(x) - 1.0; }, 1.0, 10.0, 1e-15);
}

const char* to_string(Spacing s) {
  return s == Spacing::Linear ? "linear" : "log";
}

void GridSpec::validate() const {
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw DomainError("grid needs finite lo < hi");
  }
  if (n_points < 3) throw DomainError("grid needs at least 3 points");
  if (spacing == Spacing::Log && !(lo > 0.0)) {
    throw DomainError("log grid needs lo > 0");
  }
}

double GridSpec::at(int i) const {
  if (i == 0) return lo;
  if (i == n_points - 1) return hi;
  const double frac = static_cast<double>(i) / (n_points - 1);
  if (spacing == Spacing::Linear) return lo + frac * (hi - lo);
  return std::exp(std::log(lo) + frac * (std::log(hi) - std::log(lo)));
}

std::vector<double> GridSpec::points() const {
  validate();
  std::vector<double> out(static_cast<std::size_t>(n_points));
  for (int i = 0; i < n_points; ++i) out[static_cast<std::size_t>(i)] = at(i);
  return out;
}

GridSpec default_s_grid(int n) { return {1e-4, 1e4, n, Spacing::Log}; }

GridSpec default_x_grid(int n) { return {1e-6, 1.0 - 1e-6, n, Spacing::Linear}; }

const char* to_string(MonotoneKind k) {
  switch (k) {
    case MonotoneKind::Increasing:
      return "Increasing";
    case MonotoneKind::Decreasing:
      return "Decreasing";
    case MonotoneKind::NonMonotone:
      return "NonMonotone";
  }
  return "unknown";
}

MonotonicityVerdict check_monotone(const RealFn& f, const GridSpec& grid,
                                   Direction direction, double slack) {
  const auto xs = grid.points();
  return check_monotone(xs, sample(f, xs), direction, slack);
}

MonotonicityVerdict check_monotone(const std::vector<double>& xs,
                                   const std::vector<double>& values,
                                   Direction direction, double slack) {
  if (xs.size() != values.size() || xs.size() < 2) {
    throw DomainError("check_monotone: need matching samples, at least 2");
  }
  // Worst step in each direction.
  double worst_up = std::numeric_limits<double>::infinity();
  double worst_down = std::numeric_limits<double>::infinity();
  std::size_t at_up = 0;
  std::size_t at_down = 0;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    const double diff = values[i + 1] - values[i];
    if (diff < worst_up) {
      worst_up = diff;
      at_up = i;
    }
    if (-diff < worst_down) {
      worst_down = -diff;
      at_down = i;
    }
  }
  const bool up_ok = worst_up >= -slack;
  const bool down_ok = worst_down >= -slack;

  MonotonicityVerdict v;
  auto set = [&](MonotoneKind kind, double worst, std::size_t at) {
    v.kind = kind;
    v.worst_violation = worst;
    if (kind == MonotoneKind::NonMonotone) v.witness = xs[at];
  };
  switch (direction) {
    case Direction::Increasing:
      set(up_ok ? MonotoneKind::Increasing : MonotoneKind::NonMonotone,
          worst_up, at_up);
      break;
    case Direction::Decreasing:
      set(down_ok ? MonotoneKind::Decreasing : MonotoneKind::NonMonotone,
          worst_down, at_down);
      break;
    case Direction::Either:
      if (up_ok) {
        set(MonotoneKind::Increasing, worst_up, at_up);
      } else if (down_ok) {
        set(MonotoneKind::Decreasing, worst_down, at_down);
      } else {
        // Report the direction that came closer.
        if (worst_up >= worst_down) {
          set(MonotoneKind::NonMonotone, worst_up, at_up);
        } else {
          set(MonotoneKind::NonMonotone, worst_down, at_down);
        }
      }
      break;
  }
  return v;
}

const char* to_string(CurvatureKind k) {
  switch (k) {
    case CurvatureKind::Concave:
      return "Concave";
    case CurvatureKind::Convex:
      return "Convex";
    case CurvatureKind::Neither:
      return "Neither";
  }
  return "unknown";
}

std::vector<double> second_differences(const std::vector<double>& xs,
                                       const std::vector<double>& values) {
  if (xs.size() != values.size() || xs.size() < 3) {
    throw DomainError("second_differences: need matching samples, at least 3");
  }
  std::vector<double> out;
  out.reserve(xs.size() - 2);
  for (std::size_t i = 1; i + 1 < xs.size(); ++i) {
    const double h_left = xs[i] - xs[i - 1];
    const double h_right = xs[i + 1] - xs[i];
    const double slope_jump = (values[i + 1] - values[i]) / h_right -
                              (values[i] - values[i - 1]) / h_left;
    out.push_back(2.0 * slope_jump * h_left * h_right / (h_left + h_right));
  }
  return out;
}

ConcavityVerdict check_concavity(const RealFn& f, const GridSpec& grid,
                                 double slack) {
  const auto xs = grid.points();
  return check_concavity(xs, sample(f, xs), slack);
}

ConcavityVerdict check_concavity(const std::vector<double>& xs,
                                 const std::vector<double>& values,
                                 double slack) {
  if (xs.size() < 5) throw DomainError("check_concavity: need at least 5 points");
  const auto d2 = second_differences(xs, values);
  ConcavityVerdict v;
  v.max_second_diff = -std::numeric_limits<double>::infinity();
  v.min_second_diff = std::numeric_limits<double>::infinity();
  std::size_t at_max = 0;
  std::size_t at_min = 0;
  // d2[k] is centred at xs[k + 1]; skip centres 1 and n-2.
  for (std::size_t k = 1; k + 1 < d2.size(); ++k) {
    if (d2[k] > v.max_second_diff) {
      v.max_second_diff = d2[k];
      at_max = k + 1;
    }
    if (d2[k] < v.min_second_diff) {
      v.min_second_diff = d2[k];
      at_min = k + 1;
    }
  }
  v.witness_positive = xs[at_max];
  v.witness_negative = xs[at_min];
  if (v.max_second_diff <= slack) {
    v.kind = CurvatureKind::Concave;
  } else if (v.min_second_diff >= -slack) {
    v.kind = CurvatureKind::Convex;
  } else {
    v.kind = CurvatureKind::Neither;
  }
  return v;
}

MonotoneKind classify_power_ratio(LogConvexity h, double c, Region region) {
  if (c == 0.0 || !std::isfinite(c)) {
    throw DomainError("classify_power_ratio: c must be finite and nonzero");
  }
  if (c == 1.0) return MonotoneKind::Increasing;
  const bool unit = region == Region::UnitInterval;
  // Convex table; the concave table is its mirror image.
  bool increasing;
  if (c < 0.0) {
    increasing = !unit;
  } else if (c < 1.0) {
    increasing = unit;
  } else {
    increasing = !unit;
  }
  if (h == LogConvexity::Concave) increasing = !increasing;
  return increasing ? MonotoneKind::Increasing : MonotoneKind::Decreasing;
}

const char* to_string(BetaSide s) {
  switch (s) {
    case BetaSide::PredictGT:
      return "PredictGT";
    case BetaSide::PredictLT:
      return "PredictLT";
    case BetaSide::Inconclusive:
      return "Inconclusive";
  }
  return "unknown";
}

double beta_threshold_c0() { return 1.0 - 1.0 / (2.0 * std::log(2.0)); }

double beta_threshold_c1() { return 1.0 / std::log(2.0) - 1.0; }

BetaSide predict_beta_side(const ZeroBalancedPair& pair) {
  const double q = (pair.a0() - 1.0) / pair.h();
  if (q <= beta_threshold_c0()) return BetaSide::PredictGT;
  if (q >= beta_threshold_c1()) return BetaSide::PredictLT;
  return BetaSide::Inconclusive;
}

}  // namespace hyperlog
