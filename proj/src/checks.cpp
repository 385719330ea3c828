// Check and sweep registry.

#include <cstdio>
#include <functional>

#include "check_impls.hpp"
#include "check_support.hpp"

namespace hyperlog {

namespace {

using CheckFn = std::function<VerificationReport(const CheckOptions&)>;

struct Entry {
  CheckInfo info;
  CheckFn fn;
};

CheckFn sweep_as_check(SweepResult (*fn)(const CheckOptions&)) {
  return [fn](const CheckOptions& o) { return fn(o).report; };
}

CheckFn part(int k) {
  return [k](const CheckOptions& o) { return detail::check_f_ratio_part(o, k); };
}

const std::vector<Entry>& entries() {
  using namespace detail;
  static const std::vector<Entry> e = {
      {{"bern", "log(1 + ct) <= c log(1 + t), c >= 1", false}, check_bern},
      {{"kmvthm", "log(1 + c phi(t)) <= c max{log^a(1+t), b log(1+t)}", false},
       check_kmvthm},
      {{"ssthm2", "lower bounds for the log-type power ratios f1, f2", false},
       check_ssthm2},
      {{"ssthm", "monotonicity of f(x^c)/f(x)^c from convexity of log f(e^x)",
        false},
       check_ssthm},
      {{"2ndmain", "omega(c, d, p, r) nondecreasing in p for r in (0, 1)", false},
       check_2ndmain},
      {{"finrmk1", "omega values at r = 4 and monotonicity for general 2F1",
        false},
       check_finrmk1},
      {{"1.57-1", "f1 increasing from a0 to 1/B", false}, part(1)},
      {{"1.57-2", "f2 decreasing from B to R", false}, part(2)},
      {{"1.57-3", "f3 increasing from B - 1 to R for c, d in (0, 1)", false},
       part(3)},
      {{"1.57-4", "f3 decreasing from B - 1 to R for c, d > 1", false}, part(4)},
      {{"1.57-5", "f4 decreasing from 1 to 1/B for c, d in (0, 1)", false},
       part(5)},
      {{"1.57-6", "f4 increasing from 1 to 1/B for c, d > 1", false}, part(6)},
      {{"1.57-7", "f4 identically 1 for c = d = 1", false}, part(7)},
      {{"pvlem", "monotonicity of x F(c, d; c + d; x) / log(1/(1-x))", false},
       check_pvlem},
      {{"kuLemma", "ratio of power series with decreasing coefficient ratios",
        false},
       check_kulemma},
      {{"mylemma1", "w > 0 and log v concave", false}, check_mylemma1},
      {{"mylemma2", "power substitution bounds for F(c, d; c + d; x)", false},
       check_mylemma2},
      {{"ssthm5", "G(u) = log g(e^u/(1+e^u)) concave iff 1/c + 1/d >= 1", false},
       check_ssthm5},
      {{"myrmk43", "G has an inflection point when cd/(c+d) > 1", false},
       check_myrmk43},
      {{"ssthm55", "side of beta relative to 1/2 from (a0 - 1)/h", false},
       check_ssthm55},
      {{"my49", "g(1/2) < 1 when 1/c + 1/d >= 1; gamma root above 1", false},
       check_my49},
      {{"logconlemma", "g(s^p/(1+s^p))/p nonincreasing in p for cd <= 1", false},
       check_logconlemma},
      {{"logcor", "1 <= g(x_b)/g(x_a) <= b/a for s >= 1, cd <= 1", false},
       check_logcor},
      {{"logcor1", "g(x_p) + g(x_q) >= g(x_(p+q)) for cd <= 1", false},
       check_logcor1},
      {{"logconcave", "log g(x^p/(1+x^p)) midpoint concave in p", false},
       check_logconcave},
      {{"T-bound", "T(s) <= b/a for cd <= 1", false}, check_t_bound},
      {{"ssthm7", "t(s) <= b for cd <= 1", false}, check_ssthm7},
      {{"myq3", "h(x, y) = (g(x) + g(y))/g(x + y - xy) against 1", true},
       sweep_as_check(sweep_myq3)},
      {{"my44", "smallest constant K with T(s) <= K", true},
       sweep_as_check(sweep_my44)},
      {{"my46", "shape of t(x) on (0, 1)", true}, sweep_as_check(sweep_my46)},
  };
  return e;
}

struct SweepEntry {
  CheckInfo info;
  SweepResult (*fn)(const CheckOptions&);
};

const std::vector<SweepEntry>& sweep_entries() {
  using namespace detail;
  static const std::vector<SweepEntry> e = {
      {{"myq3", "h(x, y) on a square grid", true}, sweep_myq3},
      {{"my44", "T(s) against b/a and b^2/a", true}, sweep_my44},
      {{"my46", "g(x) against b(1+b-a) phi(g(u/(1+u)))", true}, sweep_my46},
      {{"omega", "omega(c, d, p, r) along p", true}, sweep_omega},
  };
  return e;
}

const Entry* find_entry(std::string_view id) {
  const auto canon = canonical_check_id(id);
  if (!canon) return nullptr;
  for (const auto& e : entries()) {
    if (e.info.id == *canon) return &e;
  }
  return nullptr;
}

VerificationReport failed_report(std::string_view id, const char* what) {
  VerificationReport r;
  r.theorem_id = std::string(id);
  MarginTally t(kDefaultTolerance);
  t.record_error({});
  r.details["error"] = what;
  r.apply(t, false);
  return r;
}

}  // namespace

const std::vector<CheckInfo>& check_catalog() {
  static const std::vector<CheckInfo> c = [] {
    std::vector<CheckInfo> out;
    for (const auto& e : entries()) out.push_back(e.info);
    return out;
  }();
  return c;
}

std::optional<std::string> canonical_check_id(std::string_view id) {
  if (id == "ssthm4") return std::string("2ndmain");
  for (const auto& e : entries()) {
    if (e.info.id == id) return e.info.id;
  }
  return std::nullopt;
}

VerificationReport run_check(std::string_view id, const CheckOptions& opts) {
  const Entry* e = find_entry(id);
  if (!e) throw UsageError("unknown check id: " + std::string(id));
  VerificationReport r;
  try {
    r = e->fn(opts);
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& ex) {
    r = failed_report(id, ex.what());
  }
  r.theorem_id = std::string(id);
  r.title = e->info.title;
  if (id != e->info.id) r.details["alias_of"] = e->info.id;
  return r;
}

std::vector<VerificationReport> run_all_checks(const CheckOptions& opts) {
  std::vector<VerificationReport> out;
  for (const auto& info : check_catalog()) out.push_back(run_check(info.id, opts));
  return out;
}

const std::vector<CheckInfo>& sweep_catalog() {
  static const std::vector<CheckInfo> c = [] {
    std::vector<CheckInfo> out;
    for (const auto& e : sweep_entries()) out.push_back(e.info);
    return out;
  }();
  return c;
}

SweepResult run_sweep(std::string_view name, const CheckOptions& opts) {
  for (const auto& e : sweep_entries()) {
    if (e.info.id != name) continue;
    SweepResult res;
    try {
      res = e.fn(opts);
    } catch (const UsageError&) {
      throw;
    } catch (const std::exception& ex) {
      res.report = failed_report(name, ex.what());
    }
    res.report.theorem_id = e.info.id;
    res.report.title = e.info.title;
    return res;
  }
  throw UsageError("unknown sweep: " + std::string(name));
}

void write_csv(const SweepResult& result, std::ostream& out) {
  char buf[32];
  auto num = [&](double v) -> const char* {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
  };
  if (!result.rows.empty()) {
    for (const auto& c : result.rows.front().point) out << c.name << ',';
  }
  out << "lhs,rhs,gap\n";
  for (const auto& row : result.rows) {
    for (const auto& c : row.point) out << num(c.value) << ',';
    out << num(row.lhs) << ',';
    out << num(row.rhs) << ',';
    out << num(row.gap) << '\n';
  }
}

}  // namespace hyperlog
