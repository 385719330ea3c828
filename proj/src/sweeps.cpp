// Tabulated sweeps for the open questions. Every sweep is Exploratory:
// margins are recorded but never gate the exit code.

#include <algorithm>
#include <cmath>
#include <limits>

#include "check_impls.hpp"
#include "check_support.hpp"
#include "hyperlog/errors.hpp"

namespace hyperlog::detail {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Rows {
  std::vector<SweepRow> rows;
  void add(std::vector<Coord> pt, double lhs, double rhs) {
    rows.push_back({std::move(pt), lhs, rhs, rhs - lhs});
  }
};

struct SweepItem {
  MarginTally tally;
  Json detail;
  std::vector<SweepRow> rows;
};

struct SweepFold {
  MarginTally tally;
  Json details;
  std::vector<SweepRow> rows;
};

SweepFold run_sweep_items(std::size_t n, double tol,
                          const std::function<SweepItem(std::size_t)>& item) {
  auto parts = parallel_map<SweepItem>(n, item);
  SweepFold out{MarginTally(tol), Json::array(), {}};
  for (auto& p : parts) {
    out.tally.merge(p.tally);
    if (!p.detail.is_null()) out.details.push_back(std::move(p.detail));
    for (auto& r : p.rows) out.rows.push_back(std::move(r));
  }
  return out;
}

std::vector<PairExps> combos_or(const CheckOptions& o,
                                const std::vector<PairExps>& fallback) {
  if (!(o.c || o.d || o.a || o.b)) return fallback;
  std::vector<PairExps> out;
  for (const auto& p : pairs_or(o, {{1.0, 1.0}})) {
    for (const auto& e : exps_or(o, {{0.5, 2.0}})) out.push_back({p, e});
  }
  return out;
}

Json combos_json(const std::vector<PairExps>& combos) {
  Json j = Json::array();
  for (const auto& cb : combos) {
    j.push_back({{"pair", to_json(cb.pair)}, {"exponents", to_json(cb.exps)}});
  }
  return j;
}

void check_exps(const std::vector<PairExps>& combos) {
  for (const auto& cb : combos) {
    if (!(cb.exps.a > 0.0 && cb.exps.a <= 1.0 && cb.exps.b >= 1.0)) {
      throw UsageError("exponents must satisfy 0 < a <= 1 <= b");
    }
  }
}

}  // namespace

SweepResult sweep_myq3(const CheckOptions& o) {
  const double tol = tol_or(o);
  const auto pairs = pairs_or(
      o, {{1.0, 1.0}, {0.5, 0.5}, {0.5, 2.0}, {0.25, 1.0}, {0.8, 1.2},
          {2.0, 2.0}, {1.5, 3.0}, {3.0, 3.0}, {0.5, 3.0}, {2.0, 0.75}});
  const GridSpec grid = unit_grid(o, grid_n_or(o, 64), 0.01, 0.99);
  const auto xs = grid.points();
  constexpr double kSideSlack = 1e-6;

  auto folded = run_sweep_items(pairs.size(), tol, [&](std::size_t i) {
    SweepItem out{MarginTally(tol), Json::object(), {}};
    const Pair pr = pairs[i];
    const auto zb = pr.zb();
    // +1: h >= 1 expected; -1: h <= 1 expected; 0: no conjecture.
    const int side = pr.c * pr.d <= 1.0 ? 1 : (pr.c > 1.0 && pr.d > 1.0 ? -1 : 0);
    std::vector<double> gx;
    for (double x : xs) gx.push_back(g_fn(zb, x, 1.0 - x));
    double min_h = kInf, max_h = -kInf, min_d = kInf, max_d = -kInf;
    double arg_min[2] = {0, 0}, arg_max[2] = {0, 0};
    Rows rows;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      for (std::size_t k = 0; k < xs.size(); ++k) {
        const double x = xs[j], y = xs[k];
        // 1 - (x + y - xy) = (1 - x)(1 - y).
        const double omz = (1.0 - x) * (1.0 - y);
        const double gz = g_fn(zb, 1.0 - omz, omz);
        const double h = (gx[j] + gx[k]) / gz;
        const double d = gx[j] + gx[k] - gz;
        const std::vector<Coord> pt = {{"c", pr.c}, {"d", pr.d}, {"x", x}, {"y", y}};
        if (side > 0) out.tally.record(pt, 1.0, h, kSideSlack);
        if (side < 0) out.tally.record(pt, h, 1.0, kSideSlack);
        if (h < min_h) {
          min_h = h;
          arg_min[0] = x;
          arg_min[1] = y;
        }
        if (h > max_h) {
          max_h = h;
          arg_max[0] = x;
          arg_max[1] = y;
        }
        min_d = std::min(min_d, d);
        max_d = std::max(max_d, d);
        rows.add(pt, h, 1.0);
      }
    }
    out.rows = std::move(rows.rows);
    out.detail["pair"] = to_json(pr);
    out.detail["conjectured"] = side > 0 ? "h >= 1" : (side < 0 ? "h <= 1" : "none");
    out.detail["min_h"] = min_h;
    out.detail["argmin_h"] = Json::array({arg_min[0], arg_min[1]});
    out.detail["max_h"] = max_h;
    out.detail["argmax_h"] = Json::array({arg_max[0], arg_max[1]});
    out.detail["min_d"] = min_d;
    out.detail["max_d"] = max_d;
    if (side > 0) out.detail["observed"] = min_h >= 1.0 - kSideSlack;
    if (side < 0) out.detail["observed"] = max_h <= 1.0 + kSideSlack;
    return out;
  });

  SweepResult res;
  auto& r = res.report;
  r.params["pairs"] = pairs_json(pairs);
  r.grids = {{"x", grid}, {"y", grid}};
  r.details["side_slack"] = kSideSlack;
  r.details["items"] = std::move(folded.details);
  r.apply(folded.tally, true);
  res.rows = std::move(folded.rows);
  return res;
}

SweepResult sweep_my44(const CheckOptions& o) {
  const double tol = tol_or(o);
  auto defaults = power_odds_combos();
  // Pairs outside cd <= 1, for comparison.
  defaults.push_back({{2.0, 2.0}, {0.5, 2.0}});
  defaults.push_back({{3.0, 3.0}, {0.5, 2.0}});
  const auto combos = combos_or(o, defaults);
  check_exps(combos);
  const GridSpec sgrid = positive_grid(o, grid_n_or(o, 512));
  const auto ss = sgrid.points();

  auto folded = run_sweep_items(combos.size(), tol, [&](std::size_t i) {
    SweepItem out{MarginTally(tol), Json::object(), {}};
    const auto cb = combos[i];
    const auto zb = cb.pair.zb();
    const double a = cb.exps.a, b = cb.exps.b;
    double sup = -kInf, arg = 0.0;
    Rows rows;
    for (double s : ss) {
      const double ls = std::log(s);
      // Direct form: g(phi(s)/(1+phi(s))) / max{g^a, g} at s/(1+s).
      const double num = g_logistic(zb, ls <= 0.0 ? a * ls : b * ls);
      const double g = g_logistic(zb, ls);
      const double t = num / std::max(std::pow(g, a), g);
      const std::vector<Coord> pt = {
          {"c", cb.pair.c}, {"d", cb.pair.d}, {"a", a}, {"b", b}, {"s", s}};
      if (cb.pair.c * cb.pair.d <= 1.0) out.tally.record(pt, t, b / a);
      rows.add(pt, t, b / a);
      if (t > sup) {
        sup = t;
        arg = s;
      }
    }
    out.rows = std::move(rows.rows);
    out.detail["pair"] = to_json(cb.pair);
    out.detail["exponents"] = to_json(cb.exps);
    out.detail["sup_T"] = sup;
    out.detail["argsup"] = arg;
    out.detail["b_over_a"] = b / a;
    out.detail["b2_over_a"] = b * b / a;
    out.detail["within_b_over_a"] = sup <= b / a + tol;
    out.detail["within_b2_over_a"] = sup <= b * b / a + tol;
    return out;
  });

  SweepResult res;
  auto& r = res.report;
  r.params["combos"] = combos_json(combos);
  r.grids = {{"s", sgrid}};
  r.details["items"] = std::move(folded.details);
  r.apply(folded.tally, true);
  res.rows = std::move(folded.rows);
  return res;
}

SweepResult sweep_my46(const CheckOptions& o) {
  const double tol = tol_or(o);
  const auto combos = combos_or(o, power_odds_combos());
  check_exps(combos);
  const GridSpec xgrid = unit_grid(o, grid_n_or(o, 1024), 1e-4, 1.0 - 1e-4);
  const auto xs = xgrid.points();

  auto folded = run_sweep_items(combos.size(), tol, [&](std::size_t i) {
    SweepItem out{MarginTally(tol), Json::object(), {}};
    const auto cb = combos[i];
    const auto zb = cb.pair.zb();
    const double a = cb.exps.a, b = cb.exps.b;
    const PhiExponents e(a, b);
    out.detail["pair"] = to_json(cb.pair);
    out.detail["exponents"] = to_json(cb.exps);
    double beta_v = NAN;
    try {
      beta_v = beta_root(zb, e);
    } catch (const BracketError& err) {
      out.detail["error"] = err.what();
      return out;
    }
    // t(x) = g(x) / (b phi(g(u/(1+u)))), u = phi^{-1}(x/(1-x)).
    auto t_of = [&](double x, double omx, double* g_out, double* rhs_out) {
      const double lo = std::log(x) - std::log(omx);
      const double lu = lo <= 0.0 ? lo / a : lo / b;
      const double gu = g_logistic(zb, lu);
      const double ph = phi(e, gu);
      const double gx = g_fn(zb, x, omx);
      if (g_out) *g_out = gx;
      if (rhs_out) *rhs_out = b * (1.0 + b - a) * ph;
      return gx / (b * ph);
    };
    std::vector<double> tv;
    Rows rows;
    for (double x : xs) {
      double gx = 0.0, rhs = 0.0;
      tv.push_back(t_of(x, 1.0 - x, &gx, &rhs));
      const std::vector<Coord> pt = {
          {"c", cb.pair.c}, {"d", cb.pair.d}, {"a", a}, {"b", b}, {"x", x}};
      out.tally.record(pt, gx, rhs);
      rows.add(pt, gx, rhs);
    }
    out.rows = std::move(rows.rows);
    const double t_half = t_of(0.5, 0.5, nullptr, nullptr);
    const double t_beta = t_of(beta_v, 1.0 - beta_v, nullptr, nullptr);
    const double t_end = tv.back();
    // Monotonicity on (0, 1/2), (1/2, beta), (beta, 1) or the mirror order.
    const double lo_mid = std::min(0.5, beta_v), hi_mid = std::max(0.5, beta_v);
    Json pieces = Json::array();
    const double cuts[4] = {0.0, lo_mid, hi_mid, 1.0};
    for (int k = 0; k < 3; ++k) {
      std::vector<double> px, pv;
      for (std::size_t j = 0; j < xs.size(); ++j) {
        if (xs[j] > cuts[k] && xs[j] < cuts[k + 1]) {
          px.push_back(xs[j]);
          pv.push_back(tv[j]);
        }
      }
      Json pj = {{"from", cuts[k]}, {"to", cuts[k + 1]}};
      pj["kind"] = px.size() >= 2
                       ? to_string(check_monotone(px, pv, Direction::Either, tol).kind)
                       : "too few points";
      pieces.push_back(pj);
    }
    const auto [mn, mx] = std::minmax_element(tv.begin(), tv.end());
    out.detail["beta"] = beta_v;
    out.detail["alpha"] = 0.5;
    out.detail["beta_side_predicted"] = to_string(predict_beta_side(zb));
    out.detail["t_half"] = t_half;
    out.detail["t_beta"] = t_beta;
    out.detail["t_right_end"] = t_end;
    out.detail["min_t"] = *mn;
    out.detail["max_t"] = *mx;
    out.detail["monotone_pieces"] = pieces;
    out.detail["min_above_lower"] = *mn >= std::min(t_half, t_end) - tol;
    out.detail["max_below_t_beta"] = *mx <= t_beta + tol;
    return out;
  });

  SweepResult res;
  auto& r = res.report;
  r.params["combos"] = combos_json(combos);
  r.grids = {{"x", xgrid}};
  r.details["rows"] = "lhs = g(x), rhs = b(1+b-a) phi(g(u/(1+u)))";
  r.details["items"] = std::move(folded.details);
  r.apply(folded.tally, true);
  res.rows = std::move(folded.rows);
  return res;
}

SweepResult sweep_omega(const CheckOptions& o) {
  const double tol = tol_or(o);
  const auto pairs = pairs_or(o, {{1.0, 1.0}});
  const std::vector<double> rs = {0.25, 0.5, 0.9, 2.0, 4.0};
  const GridSpec pgrid{0.1, 10.0, grid_n_or(o, 64), Spacing::Log};
  const auto ps = pgrid.points();

  const std::size_t n = pairs.size() * rs.size();
  auto folded = run_sweep_items(n, tol, [&](std::size_t i) {
    SweepItem out{MarginTally(tol), Json::object(), {}};
    const Pair pr = pairs[i / rs.size()];
    const double r = rs[i % rs.size()];
    const auto zb = pr.zb();
    std::vector<double> w;
    bool domain = true;
    for (double p : ps) {
      const auto om = omega(zb, p, r);
      w.push_back(om.value);
      domain = om.theorem_domain;
    }
    Rows rows;
    for (std::size_t k = 0; k + 1 < ps.size(); ++k) {
      const std::vector<Coord> pt = {{"c", pr.c}, {"d", pr.d}, {"r", r}, {"p", ps[k]}};
      if (domain && pr.c + pr.d >= pr.c * pr.d) out.tally.record(pt, w[k], w[k + 1]);
      rows.add(pt, w[k], w[k + 1]);
    }
    out.rows = std::move(rows.rows);
    out.detail["pair"] = to_json(pr);
    out.detail["r"] = r;
    out.detail["theorem_domain"] = domain;
    out.detail["observed"] = to_string(check_monotone(ps, w, Direction::Either, tol).kind);
    return out;
  });

  SweepResult res;
  auto& r = res.report;
  r.params["pairs"] = pairs_json(pairs);
  r.params["r"] = rs;
  r.grids = {{"p", pgrid}};
  r.details["rows"] = "lhs = omega(p_k), rhs = omega(p_k+1)";
  r.details["items"] = std::move(folded.details);
  r.apply(folded.tally, true);
  res.rows = std::move(folded.rows);
  return res;
}

}  // namespace hyperlog::detail
