// Checks on g(x) = x F(c, d; c + d; x) under logistic substitutions:
// omega, G, the beta / gamma roots, and the power-odds ratios T and t.

#include <algorithm>
#include <cmath>
#include <limits>

#include "check_impls.hpp"
#include "check_support.hpp"
#include "hyperlog/errors.hpp"

namespace hyperlog::detail {

namespace {

bool all_admissible(const std::vector<Pair>& pairs) {
  return std::all_of(pairs.begin(), pairs.end(),
                     [](const Pair& p) { return p.c + p.d >= p.c * p.d; });
}

bool all_product_le_one(const std::vector<Pair>& pairs) {
  return std::all_of(pairs.begin(), pairs.end(),
                     [](const Pair& p) { return p.c * p.d <= 1.0; });
}

std::vector<Pair> every_other(const std::vector<Pair>& v) {
  std::vector<Pair> out;
  for (std::size_t i = 0; i < v.size(); i += 2) out.push_back(v[i]);
  return out;
}

// G(u) samples with second-difference verdict.
struct GSamples {
  std::vector<double> us;
  std::vector<double> vals;
  ConcavityVerdict verdict;
};

GSamples sample_big_g(const Pair& pr, const GridSpec& grid, double tol) {
  GSamples s;
  s.us = grid.points();
  const auto zb = pr.zb();
  for (double u : s.us) s.vals.push_back(big_g(zb, u));
  s.verdict = check_concavity(s.us, s.vals, tol);
  return s;
}

Json verdict_json(const ConcavityVerdict& v) {
  Json j = Json::object();
  j["kind"] = to_string(v.kind);
  j["max_second_diff"] = v.max_second_diff;
  j["min_second_diff"] = v.min_second_diff;
  j["witness_positive"] = v.witness_positive.value_or(NAN);
  j["witness_negative"] = v.witness_negative.value_or(NAN);
  return j;
}

}  // namespace

VerificationReport check_2ndmain(const CheckOptions& o) {
  const double tol = tol_or(o);
  const auto pairs = pairs_or(o, admissible_pairs());
  const bool hyp = all_admissible(pairs);
  const GridSpec pgrid{0.1, 10.0, grid_n_or(o, 64), Spacing::Log};
  const GridSpec rgrid = unit_grid(o, 20, 0.05, 0.95);
  const auto ps = pgrid.points();
  const auto rs = rgrid.points();

  auto folded = run_items(pairs.size(), tol, [&](std::size_t i) {
    ItemResult out{MarginTally(tol), Json::object()};
    const Pair pr = pairs[i];
    const auto zb = pr.zb();
    double min_step = std::numeric_limits<double>::infinity();
    for (double r : rs) {
      std::vector<double> w;
      for (double p : ps) w.push_back(omega(zb, p, r).value);
      for (std::size_t k = 0; k + 1 < w.size(); ++k) {
        min_step = std::min(min_step, w[k + 1] - w[k]);
      }
      record_monotone(out.tally, {{"c", pr.c}, {"d", pr.d}, {"r", r}}, "p", ps, w,
                      {}, true);
      // The p = 1/2 versus p = 1 special case, written out directly.
      const double lhs = g_logistic(zb, 0.5 * std::log(r));
      const double rhs = std::sqrt(g_logistic(zb, std::log(r)));
      out.tally.record({{"c", pr.c}, {"d", pr.d}, {"r", r}, {"p", 0.5}}, lhs, rhs);
    }
    out.detail["pair"] = to_json(pr);
    out.detail["min_forward_difference"] = min_step;
    return out;
  });

  VerificationReport r;
  r.params["pairs"] = pairs_json(pairs);
  r.grids = {{"p", pgrid}, {"r", rgrid}};
  r.details["items"] = std::move(folded.details);
  if (!hyp) r.details["note"] = "hypotheses not met (needs 1/c + 1/d >= 1)";
  r.apply(folded.tally, !hyp);
  return r;
}

VerificationReport check_finrmk1(const CheckOptions& o) {
  const double tol = tol_or(o);
  MarginTally tally(tol);
  const ZeroBalancedPair unit(1.0, 1.0);
  const double ps[] = {1.0, 2.0, 4.0};
  const double rounded[] = {1.61, 1.68, 1.53};
  const double exact[] = {std::log(5.0), std::sqrt(std::log(17.0)),
                          std::pow(std::log(257.0), 0.25)};
  double w[3];
  Json values = Json::array();
  for (int k = 0; k < 3; ++k) {
    const auto om = omega(unit, ps[k], 4.0);
    w[k] = om.value;
    const std::vector<Coord> pt = {{"p", ps[k]}, {"r", 4.0}};
    tally.record(pt, std::abs(w[k] - rounded[k]), 5e-3);
    tally.record(pt, std::abs(w[k] - exact[k]), 0.0);
    Json v = Json::object();
    v["p"] = ps[k];
    v["omega"] = w[k];
    v["closed_form"] = exact[k];
    v["theorem_domain"] = om.theorem_domain;
    values.push_back(v);
  }
  // Not monotone in p once r > 1: up from p = 1 to 2, down from 2 to 4.
  tally.record_strict({{"p", 1.0}, {"r", 4.0}}, w[0], w[1]);
  tally.record_strict({{"p", 4.0}, {"r", 4.0}}, w[2], w[1]);

  // Monotone in p for x F(a, b; c; x) with ab <= c, max{a, b} <= c, r < 1.
  struct T3 {
    double a, b, c;
  };
  const std::vector<T3> triples = {
      {0.5, 0.5, 1.0}, {1.0, 1.0, 3.0}, {2.0, 2.0, 4.0},
      {0.5, 2.0, 2.0}, {1.0, 1.0, 1.0}, {3.0, 2.0, 6.0}};
  const GridSpec pgrid{0.1, 10.0, grid_n_or(o, 64), Spacing::Log};
  const GridSpec rgrid{0.05, 0.95, 10, Spacing::Linear};
  const auto pv = pgrid.points();
  for (const auto& t : triples) {
    const HypParams hp(t.a, t.b, t.c);
    for (double r : rgrid.points()) {
      std::vector<double> om;
      for (double p : pv) {
        const auto x = logistic_point(p * std::log(r));
        om.push_back(std::pow(x.x * f21(hp, x.x, x.omx).value, 1.0 / p));
      }
      record_monotone(tally, {{"a", t.a}, {"b", t.b}, {"c", t.c}, {"r", r}}, "p",
                      pv, om, {}, true);
    }
  }

  VerificationReport r;
  r.params["pair"] = Json::array({1.0, 1.0});
  r.params["r"] = 4.0;
  Json tj = Json::array();
  for (const auto& t : triples) tj.push_back(Json::array({t.a, t.b, t.c}));
  r.params["general_triples"] = tj;
  r.grids = {{"p", pgrid}, {"r", rgrid}};
  r.details["values"] = values;
  r.apply(tally, false);
  return r;
}

VerificationReport check_ssthm5(const CheckOptions& o) {
  const double tol = tol_or(o);
  std::vector<Pair> defaults = every_other(admissible_pairs());
  defaults.resize(25);
  for (const auto& p : non_admissible_pairs()) defaults.push_back(p);
  const auto pairs = pairs_or(o, defaults);
  const GridSpec grid{-10.0, 10.0, grid_n_or(o, kDefaultGridPoints), Spacing::Linear};

  auto folded = run_items(pairs.size(), tol, [&](std::size_t i) {
    ItemResult out{MarginTally(tol), Json::object()};
    const Pair pr = pairs[i];
    const bool admissible = pr.c + pr.d >= pr.c * pr.d;
    const auto s = sample_big_g(pr, grid, tol);
    const std::vector<Coord> base = {{"c", pr.c}, {"d", pr.d}};
    if (admissible) {
      record_curvature(out.tally, base, "u", s.us, s.vals, true);
    } else {
      // Not concave: some second difference must clear the slack.
      out.tally.record_strict(with(base, {{"u", *s.verdict.witness_positive}}), tol,
                              s.verdict.max_second_diff);
    }
    out.detail["pair"] = to_json(pr);
    out.detail["a0"] = pr.a0();
    out.detail["expected"] = admissible ? "Concave" : "Neither";
    out.detail["verdict"] = verdict_json(s.verdict);
    return out;
  });

  VerificationReport r;
  r.params["pairs"] = pairs_json(pairs);
  r.grids = {{"u", grid}};
  r.details["items"] = std::move(folded.details);
  r.apply(folded.tally, false);
  return r;
}

VerificationReport check_myrmk43(const CheckOptions& o) {
  const double tol = tol_or(o);
  std::vector<Pair> defaults = non_admissible_pairs();
  defaults.push_back({2.2, 2.2});
  defaults.push_back({2.1, 2.1});
  const auto pairs = pairs_or(o, defaults);
  bool hyp = true;
  for (const auto& p : pairs) hyp = hyp && p.a0() > 1.0;
  const GridSpec grid{-10.0, 10.0, grid_n_or(o, kDefaultGridPoints), Spacing::Linear};

  auto folded = run_items(pairs.size(), tol, [&](std::size_t i) {
    ItemResult out{MarginTally(tol), Json::object()};
    const Pair pr = pairs[i];
    const auto s = sample_big_g(pr, grid, tol);
    const auto& v = s.verdict;
    const std::vector<Coord> base = {{"c", pr.c}, {"d", pr.d}};
    const double up = v.witness_positive.value_or(NAN);
    const double down = v.witness_negative.value_or(NAN);
    // Convex piece on the left, concave piece on the right.
    out.tally.record_strict(with(base, {{"u", up}}), tol, v.max_second_diff);
    out.tally.record_strict(with(base, {{"u", down}}), v.min_second_diff, -tol);
    out.tally.record_strict(with(base, {{"u", up}}), up, down);
    // Inflection: last sign change of the second differences.
    const auto d2 = second_differences(s.us, s.vals);
    double inflection = NAN;
    for (std::size_t k = d2.size() - 2; k >= 2; --k) {
      if (d2[k - 1] > 0.0 && d2[k] <= 0.0) {
        inflection = s.us[k + 1];
        break;
      }
    }
    out.detail["pair"] = to_json(pr);
    out.detail["a0"] = pr.a0();
    out.detail["verdict"] = verdict_json(v);
    out.detail["inflection_u"] = inflection;
    out.detail["inflection_y"] = logistic_point(inflection).x;
    return out;
  });

  VerificationReport r;
  r.params["pairs"] = pairs_json(pairs);
  r.grids = {{"u", grid}};
  r.details["items"] = std::move(folded.details);
  if (!hyp) r.details["note"] = "hypotheses not met (needs cd/(c+d) > 1)";
  r.apply(folded.tally, !hyp);
  return r;
}

VerificationReport check_ssthm55(const CheckOptions& o) {
  const double tol = tol_or(o);
  std::vector<Pair> defaults;
  const GridSpec cgrid{0.2, 8.0, 12, Spacing::Log};
  const auto cv = cgrid.points();
  for (std::size_t i = 0; i < cv.size(); ++i) {
    for (std::size_t j = i; j < cv.size(); ++j) defaults.push_back({cv[i], cv[j]});
  }
  const auto pairs = pairs_or(o, defaults);
  const auto es = exps_or(o, {{0.5, 2.0}, {1.0, 1.0}, {0.25, 1.5}, {0.9, 3.0}});
  for (const auto& e : es) {
    if (!(e.a > 0.0 && e.a <= 1.0 && e.b >= 1.0)) {
      throw UsageError("ssthm55 needs 0 < a <= 1 <= b");
    }
  }

  const std::size_t n = pairs.size() * es.size();
  auto folded = run_items(n, tol, [&](std::size_t i) {
    ItemResult out{MarginTally(tol), Json::object()};
    const Pair pr = pairs[i / es.size()];
    const Exps ex = es[i % es.size()];
    const auto zb = pr.zb();
    const double beta_v = beta_root(zb, PhiExponents(ex.a, ex.b));
    const double g_half = g_fn(zb, 0.5);
    const auto side = predict_beta_side(zb);
    const std::vector<Coord> pt = {{"c", pr.c}, {"d", pr.d}, {"a", ex.a}, {"b", ex.b}};
    if (side == BetaSide::PredictGT) out.tally.record_strict(pt, 0.5, beta_v);
    if (side == BetaSide::PredictLT) out.tally.record_strict(pt, beta_v, 0.5);
    // beta > 1/2 exactly when g(1/2) < 1.
    out.tally.record(pt, 0.0, (beta_v - 0.5) * (1.0 - g_half));
    if (i % es.size() == 0) {
      // Closed forms for the first two F'/F coefficients.
      const auto an = ratio_coeffs(zb.params(), 2);
      out.tally.record(pt, std::abs(an[0] - zb.a0()) / zb.a0(), 0.0);
      out.tally.record(pt, std::abs((an[0] - an[1]) - zb.h()) / zb.h(), 0.0);
    }
    out.detail["pair"] = to_json(pr);
    out.detail["exponents"] = to_json(ex);
    out.detail["q"] = (zb.a0() - 1.0) / zb.h();
    out.detail["prediction"] = to_string(side);
    out.detail["beta"] = beta_v;
    return out;
  });

  std::size_t gt = 0, lt = 0, inc = 0;
  for (const auto& d : folded.details) {
    const auto s = d["prediction"].get<std::string>();
    if (s == "PredictGT") ++gt;
    if (s == "PredictLT") ++lt;
    if (s == "Inconclusive") ++inc;
  }
  VerificationReport r;
  r.params["pairs"] = pairs_json(pairs);
  Json ej = Json::array();
  for (const auto& e : es) ej.push_back(to_json(e));
  r.params["exponents"] = ej;
  r.grids = {{"c_and_d", cgrid}};
  r.details["c0"] = beta_threshold_c0();
  r.details["c1"] = beta_threshold_c1();
  r.details["counts"] = {{"PredictGT", gt}, {"PredictLT", lt}, {"Inconclusive", inc}};
  r.details["items"] = std::move(folded.details);
  r.apply(folded.tally, false);
  return r;
}

VerificationReport check_my49(const CheckOptions& o) {
  const double tol = tol_or(o);
  std::vector<Pair> defaults = admissible_pairs();
  for (const auto& p : product_le_one_pairs()) defaults.push_back(p);
  const auto pairs = pairs_or(o, defaults);
  const bool hyp = all_admissible(pairs);

  auto folded = run_items(pairs.size(), tol, [&](std::size_t i) {
    ItemResult out{MarginTally(tol), Json::object()};
    const Pair pr = pairs[i];
    const auto zb = pr.zb();
    const double g_half = g_fn(zb, 0.5);
    const std::vector<Coord> pt = {{"c", pr.c}, {"d", pr.d}};
    out.tally.record_strict(pt, g_half, 1.0);
    out.detail["pair"] = to_json(pr);
    out.detail["g_half"] = g_half;
    if (pr.c * pr.d <= 1.0) {
      // The gamma root exceeds 1 and solves g(s/(1+s)) = 1.
      const double gam = gamma_root(zb);
      out.tally.record_strict(pt, 1.0, gam);
      out.tally.record(pt, std::abs(g_logistic(zb, std::log(gam)) - 1.0), 1e-10);
      out.detail["gamma"] = gam;
    }
    return out;
  });

  VerificationReport r;
  r.params["pairs"] = pairs_json(pairs);
  r.details["items"] = std::move(folded.details);
  if (!hyp) r.details["note"] = "hypotheses not met (needs 1/c + 1/d >= 1)";
  r.apply(folded.tally, !hyp);
  return r;
}

VerificationReport check_logconlemma(const CheckOptions& o) {
  const double tol = tol_or(o);
  const auto pairs = pairs_or(o, product_le_one_pairs());
  const bool hyp = all_product_le_one(pairs);
  const GridSpec sgrid = positive_grid(o, 9, 1e-3, 1e3);
  const GridSpec pgrid{0.05, 20.0, grid_n_or(o, 256), Spacing::Log};
  const auto ss = sgrid.points();
  const auto ps = pgrid.points();

  auto folded = run_items(pairs.size(), tol, [&](std::size_t i) {
    ItemResult out{MarginTally(tol), nullptr};
    const Pair pr = pairs[i];
    const auto zb = pr.zb();
    for (double s : ss) {
      std::vector<double> v;
      for (double p : ps) v.push_back(g_logistic(zb, p * std::log(s)) / p);
      record_monotone(out.tally, {{"c", pr.c}, {"d", pr.d}, {"s", s}}, "p", ps, v,
                      {}, false);
    }
    return out;
  });

  VerificationReport r;
  r.params["pairs"] = pairs_json(pairs);
  r.grids = {{"s", sgrid}, {"p", pgrid}};
  if (!hyp) r.details["note"] = "hypotheses not met (needs cd <= 1)";
  r.apply(folded.tally, !hyp);
  return r;
}

VerificationReport check_logcor(const CheckOptions& o) {
  const double tol = tol_or(o);
  const auto pairs = pairs_or(o, product_le_one_pairs());
  const auto es = exps_or(
      o, {{0.5, 2.0}, {1.0, 3.0}, {0.25, 0.5}, {1.0, 1.0}, {2.0, 5.0}, {0.1, 10.0}});
  const GridSpec sgrid = positive_grid(o, grid_n_or(o, 512), 1.0, 1e4);
  const auto ss = sgrid.points();
  bool hyp = all_product_le_one(pairs) && sgrid.lo >= 1.0;
  for (const auto& e : es) hyp = hyp && e.b >= e.a;

  const std::size_t n = pairs.size() * es.size();
  auto folded = run_items(n, tol, [&](std::size_t i) {
    ItemResult out{MarginTally(tol), Json::object()};
    const Pair pr = pairs[i / es.size()];
    const Exps ex = es[i % es.size()];
    const auto zb = pr.zb();
    double sup = -std::numeric_limits<double>::infinity();
    for (double s : ss) {
      const double ls = std::log(s);
      const double ratio = g_logistic(zb, ex.b * ls) / g_logistic(zb, ex.a * ls);
      const std::vector<Coord> pt = {
          {"c", pr.c}, {"d", pr.d}, {"a", ex.a}, {"b", ex.b}, {"s", s}};
      out.tally.record(pt, 1.0, ratio);
      out.tally.record(pt, ratio, ex.b / ex.a);
      sup = std::max(sup, ratio);
    }
    out.detail["pair"] = to_json(pr);
    out.detail["exponents"] = to_json(ex);
    out.detail["sup_ratio"] = sup;
    out.detail["b_over_a"] = ex.b / ex.a;
    return out;
  });

  VerificationReport r;
  r.params["pairs"] = pairs_json(pairs);
  Json ej = Json::array();
  for (const auto& e : es) ej.push_back(to_json(e));
  r.params["exponents"] = ej;
  r.grids = {{"s", sgrid}};
  r.details["items"] = std::move(folded.details);
  if (!hyp) r.details["note"] = "hypotheses not met (needs cd <= 1, b >= a, s >= 1)";
  r.apply(folded.tally, !hyp);
  return r;
}

VerificationReport check_logcor1(const CheckOptions& o) {
  const double tol = tol_or(o);
  const auto pairs = pairs_or(o, product_le_one_pairs());
  const bool hyp = all_product_le_one(pairs);
  const GridSpec sgrid = positive_grid(o, 17, 1e-3, 1e3);
  const GridSpec pgrid{0.05, 20.0, grid_n_or(o, 16), Spacing::Log};
  const auto ss = sgrid.points();
  const auto ps = pgrid.points();

  auto folded = run_items(pairs.size(), tol, [&](std::size_t i) {
    ItemResult out{MarginTally(tol), nullptr};
    const Pair pr = pairs[i];
    const auto zb = pr.zb();
    for (double s : ss) {
      const double ls = std::log(s);
      std::vector<double> gp;
      for (double p : ps) gp.push_back(g_logistic(zb, p * ls));
      for (std::size_t j = 0; j < ps.size(); ++j) {
        for (std::size_t k = j; k < ps.size(); ++k) {
          const double sum = g_logistic(zb, (ps[j] + ps[k]) * ls);
          out.tally.record(
              {{"c", pr.c}, {"d", pr.d}, {"s", s}, {"p", ps[j]}, {"q", ps[k]}}, sum,
              gp[j] + gp[k]);
        }
      }
    }
    return out;
  });

  VerificationReport r;
  r.params["pairs"] = pairs_json(pairs);
  r.grids = {{"s", sgrid}, {"p_and_q", pgrid}};
  if (!hyp) r.details["note"] = "hypotheses not met (needs cd <= 1)";
  r.apply(folded.tally, !hyp);
  return r;
}

VerificationReport check_logconcave(const CheckOptions& o) {
  const double tol = tol_or(o);
  std::vector<Pair> defaults;
  const auto& adm = admissible_pairs();
  for (std::size_t i = 0; i < adm.size(); i += 5) defaults.push_back(adm[i]);
  const auto pairs = pairs_or(o, defaults);
  const bool hyp = all_admissible(pairs);
  const GridSpec xgrid = positive_grid(o, 9, 1e-2, 1e2);
  const GridSpec pgrid{-10.0, 10.0, grid_n_or(o, 21), Spacing::Linear};
  const auto xs = xgrid.points();
  const auto ps = pgrid.points();

  // In log form: G(p t) + G(q t) <= 2 G((p + q) t / 2), t = log x.
  auto folded = run_items(pairs.size(), tol, [&](std::size_t i) {
    ItemResult out{MarginTally(tol), nullptr};
    const Pair pr = pairs[i];
    const auto zb = pr.zb();
    for (double x : xs) {
      const double lx = std::log(x);
      for (std::size_t j = 0; j < ps.size(); ++j) {
        for (std::size_t k = j + 1; k < ps.size(); ++k) {
          const double lhs = big_g(zb, ps[j] * lx) + big_g(zb, ps[k] * lx);
          const double rhs = 2.0 * big_g(zb, 0.5 * (ps[j] + ps[k]) * lx);
          out.tally.record(
              {{"c", pr.c}, {"d", pr.d}, {"x", x}, {"p", ps[j]}, {"q", ps[k]}}, lhs,
              rhs);
        }
      }
    }
    return out;
  });

  VerificationReport r;
  r.params["pairs"] = pairs_json(pairs);
  r.grids = {{"x", xgrid}, {"p_and_q", pgrid}};
  r.details["form"] = "log g(x_p) + log g(x_q) <= 2 log g(x_(p+q)/2)";
  if (!hyp) r.details["note"] = "hypotheses not met (needs 1/c + 1/d >= 1)";
  r.apply(folded.tally, !hyp);
  return r;
}

namespace {

// Shared body of the two power-odds bounds.
VerificationReport power_odds_bound(const CheckOptions& o, bool big_t) {
  const double tol = tol_or(o);
  std::vector<PairExps> combos;
  if (o.c || o.d || o.a || o.b) {
    const auto pairs = pairs_or(o, {{1.0, 1.0}});
    const auto es = exps_or(o, {{0.5, 2.0}});
    for (const auto& p : pairs) {
      for (const auto& e : es) combos.push_back({p, e});
    }
  } else {
    combos = power_odds_combos();
  }
  bool hyp = true;
  for (const auto& cb : combos) {
    if (!(cb.exps.a > 0.0 && cb.exps.a <= 1.0 && cb.exps.b >= 1.0)) {
      throw UsageError("exponents must satisfy 0 < a <= 1 <= b");
    }
    hyp = hyp && cb.pair.c * cb.pair.d <= 1.0;
  }
  const GridSpec sgrid = positive_grid(o, grid_n_or(o, kDefaultGridPoints));
  const auto ss = sgrid.points();

  auto folded = run_items(combos.size(), tol, [&](std::size_t i) {
    ItemResult out{MarginTally(tol), Json::object()};
    const auto cb = combos[i];
    const auto zb = cb.pair.zb();
    const PhiExponents e(cb.exps.a, cb.exps.b);
    const double bound = big_t ? cb.exps.b / cb.exps.a : cb.exps.b;
    out.detail["pair"] = to_json(cb.pair);
    out.detail["exponents"] = to_json(cb.exps);
    out.detail["bound"] = bound;
    double gam = 0.0;
    try {
      gam = gamma_root(zb);
    } catch (const BracketError& err) {
      if (hyp) throw;
      out.detail["error"] = err.what();
      return out;
    }
    double sup = -std::numeric_limits<double>::infinity();
    double arg = 0.0;
    for (double s : ss) {
      const double v = big_t ? T_fn(zb, e, s, gam) : t_fn(zb, e, s, gam);
      const std::vector<Coord> pt = {{"c", cb.pair.c},
                                     {"d", cb.pair.d},
                                     {"a", cb.exps.a},
                                     {"b", cb.exps.b},
                                     {"s", s}};
      out.tally.record(pt, v, bound);
      if (s <= 1.0) out.tally.record(pt, v, 1.0);
      if (v > sup) {
        sup = v;
        arg = s;
      }
    }
    out.detail["gamma"] = gam;
    out.detail["sup"] = sup;
    out.detail["argsup"] = arg;
    return out;
  });

  VerificationReport r;
  Json cj = Json::array();
  for (const auto& cb : combos) {
    cj.push_back({{"pair", to_json(cb.pair)}, {"exponents", to_json(cb.exps)}});
  }
  r.params["combos"] = cj;
  r.grids = {{"s", sgrid}};
  r.details["items"] = std::move(folded.details);
  if (!hyp) r.details["note"] = "hypotheses not met (needs cd <= 1)";
  r.apply(folded.tally, !hyp);
  return r;
}

}  // namespace

VerificationReport check_t_bound(const CheckOptions& o) {
  return power_odds_bound(o, true);
}

VerificationReport check_ssthm7(const CheckOptions& o) {
  return power_odds_bound(o, false);
}

}  // namespace hyperlog::detail
