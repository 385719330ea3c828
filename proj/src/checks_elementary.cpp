// Inequalities among elementary functions: Bernoulli-type bounds, the
// piecewise bound functions, the power-ratio classifier, and w / v.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "check_impls.hpp"
#include "check_support.hpp"

namespace hyperlog::detail {

namespace {

std::vector<double> values_or(const std::optional<double>& v,
                              std::vector<double> fallback) {
  if (v) return {*v};
  return fallback;
}

}  // namespace

VerificationReport check_bern(const CheckOptions& o) {
  const auto cs = values_or(o.c, {1.0, 1.5, 2.0, 5.0, 10.0, 100.0});
  for (double c : cs) {
    if (!(c >= 1.0) || !std::isfinite(c)) throw UsageError("bern needs c >= 1");
  }
  const auto grid = positive_grid(o, grid_n_or(o, kDefaultGridPoints), 1e-6, 1e6);
  const auto ts = grid.points();

  auto folded = run_items(cs.size(), tol_or(o), [&](std::size_t i) {
    ItemResult out{MarginTally(tol_or(o)), nullptr};
    const double c = cs[i];
    for (double t : ts) {
      out.tally.record({{"c", c}, {"t", t}}, std::log1p(c * t), c * std::log1p(t));
    }
    return out;
  });

  VerificationReport r;
  r.params["c"] = cs;
  r.grids = {{"t", grid}};
  r.apply(folded.tally, false);
  return r;
}

VerificationReport check_kmvthm(const CheckOptions& o) {
  const auto cs = values_or(o.c, {1.0, 2.0, 5.0, 20.0});
  const auto es = exps_or(
      o, {{0.5, 2.0}, {0.25, 1.5}, {1.0, 1.0}, {0.9, 3.0}, {0.1, 1.0}});
  for (double c : cs) {
    if (!(c >= 1.0) || !std::isfinite(c)) throw UsageError("kmvthm needs c >= 1");
  }
  for (const auto& e : es) {
    if (!(e.a > 0.0 && e.a <= 1.0 && e.b >= 1.0)) {
      throw UsageError("kmvthm needs 0 < a <= 1 <= b");
    }
  }
  const auto grid = positive_grid(o, grid_n_or(o, kDefaultGridPoints), 1e-6, 1e6);
  const auto ts = grid.points();

  const std::size_t n = cs.size() * es.size();
  auto folded = run_items(n, tol_or(o), [&](std::size_t i) {
    ItemResult out{MarginTally(tol_or(o)), nullptr};
    const double c = cs[i / es.size()];
    const Exps ex = es[i % es.size()];
    const PhiExponents e(ex.a, ex.b);
    for (double t : ts) {
      const auto s = bernoulli_lhs_rhs(c, t, e);
      out.tally.record({{"c", c}, {"a", ex.a}, {"b", ex.b}, {"t", t}}, s.lhs, s.rhs);
    }
    return out;
  });

  VerificationReport r;
  r.params["c"] = cs;
  Json ej = Json::array();
  for (const auto& e : es) ej.push_back(to_json(e));
  r.params["exponents"] = ej;
  r.grids = {{"t", grid}};
  r.apply(folded.tally, false);
  return r;
}

VerificationReport check_ssthm2(const CheckOptions& o) {
  const auto as = values_or(o.a, {0.1, 0.25, 0.5, 0.75, 0.9});
  const auto ps = values_or(o.p, {0.5, 1.0, 2.0, 3.0});
  for (double a : as) {
    if (!(a > 0.0 && a < 1.0)) throw UsageError("ssthm2 needs 0 < a < 1");
  }
  for (double p : ps) {
    if (!(p > 0.0) || !std::isfinite(p)) throw UsageError("ssthm2 needs p > 0");
  }
  const auto grid = positive_grid(o, grid_n_or(o, kDefaultGridPoints), 1e-4, 1e4);
  auto xs = grid.points();
  // The minimum sits at x = 1; make sure it is sampled.
  if (grid.lo < 1.0 && grid.hi > 1.0) {
    xs.insert(std::upper_bound(xs.begin(), xs.end(), 1.0), 1.0);
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  }
  const double log_step =
      (std::log(grid.hi) - std::log(grid.lo)) / (grid.n_points - 1);

  // Items: (a, p) pairs for f1, then a alone for f2.
  const std::size_t n1 = as.size() * ps.size();
  auto folded = run_items(n1 + as.size(), tol_or(o), [&](std::size_t i) {
    ItemResult out{MarginTally(tol_or(o)), Json::object()};
    const bool first = i < n1;
    const double a = first ? as[i / ps.size()] : as[i - n1];
    const double p = first ? ps[i % ps.size()] : 1.0;
    const double lower =
        first ? std::pow(std::log(2.0), p * (1.0 - a))
              : std::pow(std::log(2.0) * std::log1p(std::log(2.0)), 1.0 - a);
    std::vector<Coord> base = {{"fn", first ? 1.0 : 2.0}, {"a", a}};
    if (first) base.push_back({"p", p});

    double min_v = std::numeric_limits<double>::infinity();
    double max_v = -min_v;
    double argmin = 0.0;
    for (double x : xs) {
      const double v = first ? f1_bound_fn(a, p, x) : f2_bound_fn(a, x);
      out.tally.record(with(base, {{"x", x}}), lower, v);
      out.tally.record(with(base, {{"x", x}}), v, 1.0);
      if (v < min_v) {
        min_v = v;
        argmin = x;
      }
      max_v = std::max(max_v, v);
    }
    // The lower constant is attained at x = 1, and nowhere else on the grid.
    const double at_one = first ? f1_bound_fn(a, p, 1.0) : f2_bound_fn(a, 1.0);
    out.tally.record(with(base, {{"x", 1.0}}), std::abs(at_one - lower), 0.0);
    out.tally.record(with(base, {{"x", argmin}}), std::abs(std::log(argmin)),
                     log_step);

    out.detail["fn"] = first ? "f1" : "f2";
    out.detail["a"] = a;
    if (first) out.detail["p"] = p;
    out.detail["lower_constant"] = lower;
    out.detail["min"] = min_v;
    out.detail["argmin"] = argmin;
    out.detail["max"] = max_v;
    return out;
  });

  VerificationReport r;
  r.params["a"] = as;
  r.params["p"] = ps;
  r.grids = {{"x", grid}};
  r.details["x0"] = x0_root();
  r.details["items"] = std::move(folded.details);
  r.apply(folded.tally, false);
  return r;
}

VerificationReport check_ssthm(const CheckOptions& o) {
  struct Family {
    const char* name;
    LogConvexity kind;
    double (*f)(double);
    double (*h)(double);
  };
  const std::vector<Family> families = {
      {"log1p", LogConvexity::Concave, [](double x) { return std::log1p(x); },
       [](double u) { return std::log(r_fn(u)); }},
      {"exp", LogConvexity::Convex, [](double x) { return std::exp(x); },
       [](double u) { return std::exp(u); }},
  };
  const auto cs = values_or(o.c, {1.0 / 3.0, 0.5, 2.0, 3.0, -1.0});
  for (double c : cs) {
    if (c == 0.0 || !std::isfinite(c)) throw UsageError("ssthm needs c != 0");
  }
  const int n = grid_n_or(o, kDefaultGridPoints);
  const GridSpec unit{0.01, 0.99, n, Spacing::Linear};
  const GridSpec above{1.01, 5.0, n, Spacing::Linear};
  const GridSpec hgrid{-5.0, 5.0, n, Spacing::Linear};

  // Items: families x c x region, then one h-curvature item per family.
  const std::size_t n_mono = families.size() * cs.size() * 2;
  auto folded = run_items(n_mono + families.size(), tol_or(o), [&](std::size_t i) {
    ItemResult out{MarginTally(tol_or(o)), Json::object()};
    if (i >= n_mono) {
      const auto& fam = families[i - n_mono];
      const auto us = hgrid.points();
      std::vector<double> hv;
      for (double u : us) hv.push_back(fam.h(u));
      const bool concave = fam.kind == LogConvexity::Concave;
      record_curvature(out.tally, {{"family", double(i - n_mono)}}, "u", us, hv,
                       concave);
      const auto verdict = check_concavity(us, hv, tol_or(o));
      out.detail["family"] = fam.name;
      out.detail["h_expected"] = concave ? "Concave" : "Convex";
      out.detail["h_verdict"] = to_string(verdict.kind);
      return out;
    }
    const std::size_t fi = i / (cs.size() * 2);
    const double c = cs[(i / 2) % cs.size()];
    const Region region = i % 2 == 0 ? Region::UnitInterval : Region::AboveOne;
    const auto& fam = families[fi];
    const auto xs = (region == Region::UnitInterval ? unit : above).points();
    std::vector<double> vals;
    for (double x : xs) vals.push_back(fam.f(std::pow(x, c)) / std::pow(fam.f(x), c));
    const auto predicted = classify_power_ratio(fam.kind, c, region);
    const bool inc = predicted == MonotoneKind::Increasing;
    record_monotone(out.tally,
                    {{"family", double(fi)},
                     {"c", c},
                     {"region", region == Region::UnitInterval ? 0.0 : 1.0}},
                    "x", xs, vals, {}, inc);
    const auto observed = check_monotone(xs, vals, Direction::Either, tol_or(o));
    out.detail["family"] = fam.name;
    out.detail["c"] = c;
    out.detail["region"] = region == Region::UnitInterval ? "(0,1)" : "(1,inf)";
    out.detail["predicted"] = to_string(predicted);
    out.detail["observed"] = to_string(observed.kind);
    return out;
  });

  VerificationReport r;
  r.params["families"] = Json::array({"log1p", "exp"});
  r.params["c"] = cs;
  r.grids = {{"x_unit", unit}, {"x_above_one", above}, {"u", hgrid}};
  r.details["items"] = std::move(folded.details);
  r.apply(folded.tally, false);
  return r;
}

VerificationReport check_mylemma1(const CheckOptions& o) {
  const GridSpec grid{-20.0, 20.0, grid_n_or(o, kDefaultGridPoints), Spacing::Linear};
  const auto xs = grid.points();
  MarginTally tally(tol_or(o));
  std::vector<double> log_v;
  double min_w = std::numeric_limits<double>::infinity();
  for (double x : xs) {
    const double w = w_fn(x);
    min_w = std::min(min_w, w);
    tally.record({{"part", 1.0}, {"x", x}}, 0.0, w);
    log_v.push_back(std::log(v_fn(x)));
  }
  record_curvature(tally, {{"part", 2.0}}, "x", xs, log_v, true);
  const auto verdict = check_concavity(xs, log_v, tol_or(o));

  VerificationReport r;
  r.grids = {{"x", grid}};
  r.details["min_w"] = min_w;
  r.details["w_strictly_positive"] = min_w > 0.0;
  r.details["log_v_verdict"] = to_string(verdict.kind);
  r.details["log_v_max_second_diff"] = verdict.max_second_diff;
  r.apply(tally, false);
  return r;
}

}  // namespace hyperlog::detail
