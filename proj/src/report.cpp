#include "hyperlog/report.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>

namespace hyperlog {

namespace {

// Total order on (margin, point) so merges do not depend on arrival order.
bool worse(double ma, const Violation& a, double mb, const Violation& b) {
  if (ma != mb) {
    if (std::isnan(ma)) return !std::isnan(mb);
    if (std::isnan(mb)) return false;
    return ma < mb;
  }
  const std::size_t n = std::min(a.point.size(), b.point.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.point[i].name != b.point[i].name) {
      return a.point[i].name < b.point[i].name;
    }
    if (a.point[i].value != b.point[i].value) {
      return a.point[i].value < b.point[i].value;
    }
  }
  if (a.point.size() != b.point.size()) return a.point.size() < b.point.size();
  return std::tie(a.lhs, a.rhs) < std::tie(b.lhs, b.rhs);
}

Json number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

}  // namespace

const char* to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "Pass";
    case Status::Fail:
      return "Fail";
    case Status::Exploratory:
      return "Exploratory";
  }
  return "unknown";
}

MarginTally::MarginTally(double tol)
    : tol_(tol), worst_margin_(std::numeric_limits<double>::infinity()) {}

void MarginTally::add(Violation v, double margin, bool violated) {
  ++checked_;
  const bool new_worst = !worst_ || worse(margin, v, worst_margin_, *worst_);
  if (violated) {
    ++violation_count_;
    // Keep the list sorted worst first, bounded.
    std::size_t pos = 0;
    while (pos < violations_.size() &&
           !worse(margin, v, violation_margins_[pos], violations_[pos])) {
      ++pos;
    }
    if (pos < kMaxListedViolations) {
      violations_.insert(violations_.begin() + static_cast<std::ptrdiff_t>(pos), v);
      violation_margins_.insert(
          violation_margins_.begin() + static_cast<std::ptrdiff_t>(pos), margin);
      if (violations_.size() > kMaxListedViolations) {
        violations_.pop_back();
        violation_margins_.pop_back();
      }
    }
  }
  if (new_worst) {
    worst_margin_ = margin;
    worst_ = std::move(v);
  }
}

void MarginTally::record(std::vector<Coord> point, double lhs, double rhs,
                         double extra_allowance) {
  const double gap = rhs - lhs;
  const double allowance = std::max(tol_, extra_allowance);
  const double margin = gap + (allowance - tol_);
  const bool violated = !(gap >= -allowance);
  add({std::move(point), lhs, rhs, gap}, std::isnan(gap) ? -INFINITY : margin,
      violated);
}

void MarginTally::record_strict(std::vector<Coord> point, double lhs, double rhs) {
  const double gap = rhs - lhs;
  const bool violated = !(gap > 0.0);
  add({std::move(point), lhs, rhs, gap}, std::isnan(gap) ? -INFINITY : gap,
      violated);
}

void MarginTally::record_error(std::vector<Coord> point) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  add({std::move(point), nan, nan, nan}, -INFINITY, true);
}

void MarginTally::merge(const MarginTally& other) {
  checked_ += other.checked_;
  violation_count_ += other.violation_count_;
  if (other.worst_ &&
      (!worst_ || worse(other.worst_margin_, *other.worst_, worst_margin_, *worst_))) {
    worst_margin_ = other.worst_margin_;
    worst_ = other.worst_;
  }
  std::vector<std::size_t> order;
  std::vector<Violation> all = violations_;
  std::vector<double> margins = violation_margins_;
  all.insert(all.end(), other.violations_.begin(), other.violations_.end());
  margins.insert(margins.end(), other.violation_margins_.begin(),
                 other.violation_margins_.end());
  order.resize(all.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return worse(margins[i], all[i], margins[j], all[j]);
  });
  if (order.size() > kMaxListedViolations) order.resize(kMaxListedViolations);
  violations_.clear();
  violation_margins_.clear();
  for (std::size_t i : order) {
    violations_.push_back(all[i]);
    violation_margins_.push_back(margins[i]);
  }
}

void VerificationReport::apply(const MarginTally& tally, bool exploratory) {
  tolerance = tally.tolerance();
  checked = tally.checked();
  violation_count = tally.violation_count();
  worst_margin = tally.worst_margin();
  worst = tally.worst();
  violations = tally.violations();
  if (exploratory) {
    status = Status::Exploratory;
  } else {
    status = tally.violation_count() > 0 ? Status::Fail : Status::Pass;
  }
}

Json to_json(const Violation& v) {
  Json point = Json::object();
  for (const auto& c : v.point) point[c.name] = number(c.value);
  Json j = Json::object();
  j["point"] = std::move(point);
  j["lhs"] = number(v.lhs);
  j["rhs"] = number(v.rhs);
  j["gap"] = number(v.gap);
  return j;
}

Json to_json(const NamedGrid& g) {
  Json j = Json::object();
  j["name"] = g.name;
  j["lo"] = g.grid.lo;
  j["hi"] = g.grid.hi;
  j["n_points"] = g.grid.n_points;
  j["spacing"] = to_string(g.grid.spacing);
  return j;
}

Json to_json(const VerificationReport& r) {
  Json j = Json::object();
  j["theorem_id"] = r.theorem_id;
  j["title"] = r.title;
  j["status"] = to_string(r.status);
  j["params"] = r.params;
  Json grids = Json::array();
  for (const auto& g : r.grids) grids.push_back(to_json(g));
  j["grids"] = std::move(grids);
  j["tolerance"] = r.tolerance;
  j["worst_margin"] = number(r.worst_margin);
  j["checked"] = r.checked;
  j["violation_count"] = r.violation_count;
  j["worst"] = r.worst ? to_json(*r.worst) : Json(nullptr);
  Json vs = Json::array();
  for (const auto& v : r.violations) vs.push_back(to_json(v));
  j["violations"] = std::move(vs);
  j["runtime_ms"] = r.runtime_ms;
  j["details"] = r.details;
  return j;
}

}  // namespace hyperlog
