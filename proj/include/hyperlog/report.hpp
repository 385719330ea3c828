#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyperlog/analysis.hpp"

namespace hyperlog {

using Json = nlohmann::ordered_json;

enum class Status { Pass, Fail, Exploratory };

const char* to_string(Status s);

/// Default absolute tolerance on inequality margins.
inline constexpr double kDefaultTolerance = 1e-9;
/// Longest violation list kept in a report (worst first).
inline constexpr std::size_t kMaxListedViolations = 25;

struct Coord {
  std::string name;
  double value;
};

/// One checked instance of a claim "lhs <= rhs". gap = rhs - lhs.
struct Violation {
  std::vector<Coord> point;
  double lhs = 0.0;
  double rhs = 0.0;
  double gap = 0.0;
};

/// Running summary of margins over many checked points.
///
/// A point with gap = rhs - lhs violates the claim when gap < -allowance,
/// where allowance = max(tol, extra) and extra is a per-point error
/// estimate. The recorded margin credits the part of the allowance above
/// tol, so a tally without violations always has worst_margin >= -tol.
///
/// merge() is associative and commutative: the kept violations are the
/// globally worst ones under a total order (margin, then point).
class MarginTally {
 public:
  explicit MarginTally(double tol = kDefaultTolerance);

  /// Claim lhs <= rhs up to the allowance.
  void record(std::vector<Coord> point, double lhs, double rhs,
              double extra_allowance = 0.0);
  /// Claim lhs < rhs with no allowance. Used for existence-type claims
  /// (a witness must clear a threshold), where slack would be meaningless.
  void record_strict(std::vector<Coord> point, double lhs, double rhs);
  /// A claim that could not be evaluated at all.
  void record_error(std::vector<Coord> point);

  void merge(const MarginTally& other);

  double tolerance() const noexcept { return tol_; }
  std::size_t checked() const noexcept { return checked_; }
  std::size_t violation_count() const noexcept { return violation_count_; }
  /// Smallest margin seen; +inf when nothing was checked.
  double worst_margin() const noexcept { return worst_margin_; }
  const std::optional<Violation>& worst() const noexcept { return worst_; }
  const std::vector<Violation>& violations() const noexcept {
    return violations_;
  }

 private:
  void add(Violation v, double margin, bool violated);

  double tol_;
  std::size_t checked_ = 0;
  std::size_t violation_count_ = 0;
  double worst_margin_;
  std::optional<Violation> worst_;
  std::vector<Violation> violations_;
  std::vector<double> violation_margins_;
};

struct NamedGrid {
  std::string name;
  GridSpec grid;
};

struct VerificationReport {
  std::string theorem_id;
  std::string title;
  Json params = Json::object();
  std::vector<NamedGrid> grids;
  double tolerance = kDefaultTolerance;
  Status status = Status::Pass;
  double worst_margin = 0.0;
  std::size_t checked = 0;
  std::size_t violation_count = 0;
  std::optional<Violation> worst;
  std::vector<Violation> violations;
  long long runtime_ms = 0;
  Json details = Json::object();

  /// Copies the tally and sets status: Exploratory when exploratory, else
  /// Fail iff the tally holds a violation.
  void apply(const MarginTally& tally, bool exploratory);
};

Json to_json(const Violation& v);
Json to_json(const NamedGrid& g);
Json to_json(const VerificationReport& r);

}  // namespace hyperlog
