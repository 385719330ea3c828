#pragma once

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hyperlog/report.hpp"

namespace hyperlog {

/// Bad command-line input: unknown ID, malformed flag, bad config file.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Overrides shared by all checks and sweeps. Unset fields fall back to
/// the per-check defaults.
///
/// c, d   zero-balanced pair (c, d); replaces the default pair family
/// a, b   exponents (phi, or the power pair in logcor); replaces defaults
/// p      power parameter where a check has one
/// tol    absolute slack on margins
/// grid_n points on the primary grid of a check
/// x_lo, x_hi  range of unit-interval grids
/// s_lo, s_hi  range of positive half-line (log spaced) grids
struct CheckOptions {
  std::optional<double> c, d, a, b, p;
  std::optional<int> grid_n;
  std::optional<double> tol;  // default kDefaultTolerance unless a check says otherwise
  std::optional<double> x_lo, x_hi, s_lo, s_hi;
};

struct CheckInfo {
  std::string id;
  std::string title;
  bool exploratory;
};

/// Registered checks in `check all` order. Aliases are not listed.
const std::vector<CheckInfo>& check_catalog();

/// Canonical ID for a name or alias; nullopt when unknown.
std::optional<std::string> canonical_check_id(std::string_view id);

/// Runs one check. Throws UsageError for an unknown ID. Exceptions raised
/// while checking are caught and turned into a Fail report that carries the
/// message under details.error. runtime_ms is left at 0.
VerificationReport run_check(std::string_view id, const CheckOptions& opts);

/// Every catalog entry, in catalog order.
std::vector<VerificationReport> run_all_checks(const CheckOptions& opts);

// ---------------------------------------------------------------------------
// Sweeps: tabulated lhs/rhs pairs for the open questions.

struct SweepRow {
  std::vector<Coord> point;
  double lhs;
  double rhs;
  double gap;
};

struct SweepResult {
  VerificationReport report;
  std::vector<SweepRow> rows;
};

/// Names accepted by run_sweep.
const std::vector<CheckInfo>& sweep_catalog();

/// Runs a named sweep. Throws UsageError for an unknown name. Row order is
/// deterministic.
SweepResult run_sweep(std::string_view name, const CheckOptions& opts);

/// CSV: coordinate names of the first row, then lhs, rhs, gap. All rows of
/// a sweep share one layout. Numbers use %.17g.
void write_csv(const SweepResult& result, std::ostream& out);

}  // namespace hyperlog
