#pragma once

// Shared plumbing for the check and sweep implementations.

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "hyperlog/analysis.hpp"
#include "hyperlog/checks.hpp"
#include "hyperlog/logtype.hpp"
#include "hyperlog/parallel.hpp"
#include "hyperlog/report.hpp"

namespace hyperlog::detail {

struct Pair {
  double c;
  double d;
  ZeroBalancedPair zb() const { return {c, d}; }
  double a0() const { return c * d / (c + d); }
};

struct Exps {
  double a;
  double b;
};

struct Triple {
  double a;
  double b;
  double c;
};

// Default families.
const std::vector<Pair>& admissible_pairs();      // 50 pairs, 1/c + 1/d >= 1
const std::vector<Pair>& product_le_one_pairs();  // 10 pairs, cd <= 1
const std::vector<Pair>& non_admissible_pairs();  // 10 pairs, a0 >= 1.5
const std::vector<Exps>& phi_exponent_family();   // 0 < a < 1 < b
struct PairExps {
  Pair pair;
  Exps exps;
};
const std::vector<PairExps>& power_odds_combos();  // 20 combos, cd <= 1

/// Overridden pair when both c and d are given, else the family. Throws
/// UsageError when only one of c, d is given.
std::vector<Pair> pairs_or(const CheckOptions& o, const std::vector<Pair>& family);
/// Overridden exponents when both a and b are given, else the family.
std::vector<Exps> exps_or(const CheckOptions& o, const std::vector<Exps>& family);

int grid_n_or(const CheckOptions& o, int fallback);
double tol_or(const CheckOptions& o, double fallback = kDefaultTolerance);

/// Unit-interval grid honouring x_lo / x_hi.
GridSpec unit_grid(const CheckOptions& o, int n, double lo = 1e-6,
                   double hi = 1.0 - 1e-6);
/// Log-spaced positive grid honouring s_lo / s_hi.
GridSpec positive_grid(const CheckOptions& o, int n, double lo = 1e-4,
                       double hi = 1e4);

Json to_json(const Pair& p);
Json to_json(const Exps& e);
Json pairs_json(const std::vector<Pair>& pairs);

struct ItemResult {
  MarginTally tally;
  Json detail;
};

/// Runs n independent items across workers and folds them in index order.
/// Details are collected into an array.
struct Folded {
  MarginTally tally;
  Json details;
};
Folded run_items(std::size_t n, double tol,
                 const std::function<ItemResult(std::size_t)>& item);

/// Records consecutive-step claims for a monotone direction. errs (may be
/// empty) widen the allowance by 10x the summed neighbour errors.
void record_monotone(MarginTally& tally, const std::vector<Coord>& base,
                     const std::string& var, const std::vector<double>& xs,
                     const std::vector<double>& vals,
                     const std::vector<double>& errs, bool increasing);

/// Records second differences (uneven spacing normalised) as claims that
/// they are <= 0 (concave) or >= 0 (convex), skipping the outermost two
/// points at each end.
void record_curvature(MarginTally& tally, const std::vector<Coord>& base,
                      const std::string& var, const std::vector<double>& xs,
                      const std::vector<double>& vals, bool concave);

std::vector<Coord> with(std::vector<Coord> base, std::vector<Coord> extra);

/// Logistic pair (x, 1 - x) for x = e^t / (1 + e^t).
struct UnitPoint {
  double x;
  double omx;
};
UnitPoint logistic_point(double t);

}  // namespace hyperlog::detail
