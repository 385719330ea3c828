// Acceptance run: one line per criterion, non-zero exit if a gating
// criterion fails. Criterion 12 is reported but never gates.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>

#include "hyperlog/analysis.hpp"
#include "hyperlog/checks.hpp"
#include "hyperlog/hyp2f1.hpp"
#include "hyperlog/logtype.hpp"

using namespace hyperlog;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool ok;
  std::string note;
};

bool passed(const VerificationReport& r) { return r.status == Status::Pass; }

std::string summary(const VerificationReport& r) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%s %s checked=%zu worst_margin=%.3g",
                r.theorem_id.c_str(), to_string(r.status), r.checked, r.worst_margin);
  return buf;
}

Outcome c1() {
  const double r = r_constant(0.5, 0.5);
  const double b = beta(0.5, 0.5);
  const bool ok = std::abs(r - std::log(16.0)) <= 1e-12 &&
                  std::abs(b - std::numbers::pi) <= 1e-12 &&
                  std::abs(kEulerGamma - 0.577215) < 1e-6 &&
                  std::abs(-digamma(1.0) - 0.577215) < 1e-6;
  char buf[128];
  std::snprintf(buf, sizeof buf, "R=%.15g B=%.15g gamma=%.10f", r, b, -digamma(1.0));
  return {ok, buf};
}

Outcome c2() {
  const auto t0 = Clock::now();
  const HypParams p(1.0, 1.0, 2.0);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double x = 1e-6 + (1.0 - 1e-4 - 1e-6) * i / 999.0;
    const double l = -std::log1p(-x);
    worst = std::max(worst, std::abs(x * f21(p, x).value - l) / l);
  }
  const double secs = seconds_since(t0);
  char buf[96];
  std::snprintf(buf, sizeof buf, "worst relative=%.3g time=%.3fs", worst, secs);
  return {worst <= 1e-10 && secs < 1.0, buf};
}

Outcome c3() {
  const auto r = run_check("finrmk1", {});
  return {passed(r), summary(r)};
}

Outcome c4() {
  const double x0 = x0_root();
  const double g = gamma_root(ZeroBalancedPair(1.0, 1.0));
  const double b = beta_root(ZeroBalancedPair(1.0, 1.0), PhiExponents(1.0, 1.0));
  const bool ok = std::abs(x0 - 2.4555) <= 5e-4 &&
                  std::abs(g - (std::numbers::e - 1.0)) <= 1e-9 &&
                  std::abs(b - (1.0 - std::exp(-1.0))) <= 1e-9;
  char buf[128];
  std::snprintf(buf, sizeof buf, "x0=%.10f gamma=%.10f beta=%.10f", x0, g, b);
  return {ok, buf};
}

Outcome c5() {
  const auto t0 = Clock::now();
  const auto r = run_check("2ndmain", {});
  const double secs = seconds_since(t0);
  const bool shape = r.params["pairs"].size() == 50 && r.grids.size() == 2 &&
                     r.grids[0].grid.n_points == 64 && r.grids[1].grid.n_points == 20;
  return {passed(r) && shape && secs < 60.0,
          summary(r) + " time=" + std::to_string(secs) + "s"};
}

Outcome c6() {
  const auto r = run_check("ssthm5", {});
  int concave = 0, neither = 0;
  for (const auto& item : r.details["items"]) {
    const auto kind = item["verdict"]["kind"].get<std::string>();
    const auto expected = item["expected"].get<std::string>();
    if (expected == "Concave" && kind == "Concave") ++concave;
    if (expected == "Neither" && kind == "Neither" &&
        !item["verdict"]["witness_positive"].is_null()) {
      ++neither;
    }
  }
  return {passed(r) && concave == 25 && neither == 10,
          summary(r) + " concave=" + std::to_string(concave) +
              " neither=" + std::to_string(neither)};
}

Outcome c7() {
  const auto r = run_check("kuLemma", {});
  return {passed(r) && r.params["triples"].size() == 20 && r.params["n_max"] == 50 &&
              r.tolerance == 1e-12,
          summary(r)};
}

Outcome c8() {
  bool ok = true;
  std::string note;
  for (int k = 1; k <= 7; ++k) {
    const auto r = run_check("1.57-" + std::to_string(k), {});
    ok = ok && passed(r);
    note += std::string(k > 1 ? "; " : "") + r.theorem_id + " " + to_string(r.status);
  }
  return {ok, note};
}

Outcome c9() {
  const auto r = run_check("ssthm2", {});
  return {passed(r), summary(r)};
}

Outcome c10() {
  const auto t = run_check("T-bound", {});
  const auto s = run_check("ssthm7", {});
  const bool ok = passed(t) && passed(s) && t.params["combos"].size() == 20 &&
                  s.params["combos"].size() == 20;
  return {ok, summary(t) + "; " + summary(s)};
}

Outcome c11() {
  bool ok = true;
  std::string note;
  for (const char* id : {"logcor", "logcor1", "logconlemma", "mylemma1", "mylemma2"}) {
    const auto r = run_check(id, {});
    ok = ok && passed(r);
    note += (note.empty() ? "" : "; ") + r.theorem_id + " " + to_string(r.status);
  }
  return {ok, note};
}

Outcome c12() {
  const auto res = run_sweep("myq3", {});
  bool holds = true;
  double min_le = INFINITY, max_gt = -INFINITY;
  for (const auto& item : res.report.details["items"]) {
    const auto side = item["conjectured"].get<std::string>();
    if (side == "h >= 1") {
      min_le = std::min(min_le, item["min_h"].get<double>());
      holds = holds && item["min_h"].get<double>() >= 1.0 - 1e-6;
    }
    if (side == "h <= 1") {
      max_gt = std::max(max_gt, item["max_h"].get<double>());
      holds = holds && item["max_h"].get<double>() <= 1.0 + 1e-6;
    }
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "min h (cd<=1)=%.12g max h (c,d>1)=%.12g", min_le, max_gt);
  return {holds, buf};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"golden constants", c1},
      {"x F(1,1;2;x) = log(1/(1-x))", c2},
      {"omega values at r = 4", c3},
      {"roots x0, gamma, beta", c4},
      {"omega monotone in p (50 pairs x 20 r x 64 p)", c5},
      {"G concave iff admissible", c6},
      {"F'/F coefficient lemma", c7},
      {"f1..f4 monotonicity and limits", c8},
      {"lower bounds f1, f2", c9},
      {"T <= b/a and t <= b", c10},
      {"corollaries and lemmas", c11},
      {"h(x, y) against 1 (exploratory)", c12},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const bool gating = i + 1 != 12;
    Outcome o{false, ""};
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    const char* verdict = o.ok ? "PASS" : (gating ? "FAIL" : "NOT OBSERVED");
    if (!gating) verdict = o.ok ? "OBSERVED (non-gating)" : "NOT OBSERVED (non-gating)";
    std::printf("criterion %2zu: %-26s %s | %s\n", i + 1, verdict, criteria[i].first,
                o.note.c_str());
    if (gating && !o.ok) ++failures;
  }
  std::printf("%d gating criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
