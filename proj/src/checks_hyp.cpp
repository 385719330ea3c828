// Zero-balanced 2F1 combinations, the F'/F coefficient lemma, and the
// power-substitution lemma.

#include <algorithm>
#include <cmath>
#include <limits>

#include "check_impls.hpp"
#include "check_support.hpp"

namespace hyperlog::detail {

namespace {

struct Sampled {
  std::vector<double> xs;
  std::vector<double> vals;
  std::vector<double> errs;
};

Sampled sample_ratio(const Pair& pr, const std::vector<double>& xs, FRatio which) {
  const auto params = pr.zb().params();
  Sampled s{xs, {}, {}};
  for (double x : xs) {
    const auto v = f_ratio_eval(params, x, 1.0 - x, which);
    s.vals.push_back(v.value);
    s.errs.push_back(v.abs_err);
  }
  return s;
}

bool in_unit_open(double v) { return v > 0.0 && v < 1.0; }

struct PartSpec {
  FRatio which;
  bool increasing;
  // Range (lower, upper) given a, b.
  double (*lower)(double, double);
  double (*upper)(double, double);
  // Limits at x -> 0+ and x -> 1-, checked within 1e-3 when set.
  double (*left_limit)(double, double);
  double (*right_limit)(double, double);
  bool (*hypothesis)(double, double);
  std::vector<Pair> defaults;
};

double b_of(double a, double b) { return beta(a, b); }
double r_of(double a, double b) { return r_constant(a, b); }

PartSpec part_spec(int part) {
  const std::vector<Pair> mixed = {{0.5, 0.5}, {1.0, 1.0}, {2.0, 3.0},
                                   {0.3, 2.0}, {1.5, 1.5}, {5.0, 0.7},
                                   {0.25, 0.25}, {3.0, 3.0}};
  const std::vector<Pair> small = {
      {0.5, 0.5}, {0.25, 0.25}, {0.3, 0.8}, {0.9, 0.9}, {0.1, 0.6}};
  const std::vector<Pair> large = {
      {2.0, 2.0}, {1.5, 3.0}, {3.0, 3.0}, {1.2, 5.0}, {4.0, 1.1}};
  auto any = [](double, double) { return true; };
  auto both_small = [](double a, double b) {
    return in_unit_open(a) && in_unit_open(b);
  };
  auto both_large = [](double a, double b) { return a > 1.0 && b > 1.0; };
  auto one = [](double, double) { return 1.0; };
  auto inv_b = [](double a, double b) { return 1.0 / beta(a, b); };
  auto b_minus_1 = [](double a, double b) { return beta(a, b) - 1.0; };
  auto a0 = [](double a, double b) { return a * b / (a + b); };
  switch (part) {
    case 1:
      return {FRatio::F1, true, a0, inv_b, a0, nullptr, any, mixed};
    case 2:
      return {FRatio::F2, false, r_of, b_of, b_of, r_of, any, mixed};
    case 3:
      return {FRatio::F3, true, b_minus_1, r_of, b_minus_1, r_of, both_small, small};
    case 4:
      return {FRatio::F3, false, r_of, b_minus_1, b_minus_1, r_of, both_large, large};
    case 5:
      return {FRatio::F4, false, inv_b, one, one, nullptr, both_small, small};
    case 6:
      return {FRatio::F4, true, one, inv_b, one, nullptr, both_large, large};
    default:
      break;
  }
  throw UsageError("unknown f-ratio part");
}

constexpr double kEndpointTol = 1e-3;

}  // namespace

VerificationReport check_f_ratio_part(const CheckOptions& o, int part) {
  const double tol = tol_or(o);
  const GridSpec grid = unit_grid(o, grid_n_or(o, kDefaultGridPoints));
  const auto xs = grid.points();

  if (part == 7) {
    // f4 = 1 identically for a = b = 1.
    const auto pairs = pairs_or(o, {{1.0, 1.0}});
    const double eq_tol = o.tol.value_or(1e-10);
    const bool hyp = pairs.size() == 1 && pairs[0].c == 1.0 && pairs[0].d == 1.0;
    auto s = sample_ratio(pairs[0], xs, FRatio::F4);
    MarginTally tally(eq_tol);
    double worst = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const double dev = std::abs(s.vals[i] - 1.0);
      worst = std::max(worst, dev);
      tally.record({{"c", pairs[0].c}, {"d", pairs[0].d}, {"x", xs[i]}}, dev, 0.0,
                   10.0 * s.errs[i]);
    }
    VerificationReport r;
    r.params["pairs"] = pairs_json(pairs);
    r.grids = {{"x", grid}};
    r.details["max_abs_deviation"] = worst;
    if (!hyp) r.details["note"] = "hypotheses not met (needs c = d = 1)";
    r.apply(tally, !hyp);
    return r;
  }

  const PartSpec spec = part_spec(part);
  const auto pairs = pairs_or(o, spec.defaults);
  bool hyp = true;
  for (const auto& p : pairs) hyp = hyp && spec.hypothesis(p.c, p.d);

  auto folded = run_items(pairs.size(), tol, [&](std::size_t i) {
    ItemResult out{MarginTally(tol), Json::object()};
    const Pair pr = pairs[i];
    const auto s = sample_ratio(pr, xs, spec.which);
    const std::vector<Coord> base = {{"c", pr.c}, {"d", pr.d}};
    record_monotone(out.tally, base, "x", xs, s.vals, s.errs, spec.increasing);
    const double lo = spec.lower(pr.c, pr.d);
    const double hi = spec.upper(pr.c, pr.d);
    for (std::size_t k = 0; k < xs.size(); ++k) {
      const double extra = 10.0 * s.errs[k];
      out.tally.record(with(base, {{"x", xs[k]}}), lo, s.vals[k], extra);
      out.tally.record(with(base, {{"x", xs[k]}}), s.vals[k], hi, extra);
    }
    const double left = spec.left_limit(pr.c, pr.d);
    out.tally.record(with(base, {{"x", xs.front()}}), std::abs(s.vals.front() - left),
                     kEndpointTol);
    out.detail["pair"] = to_json(pr);
    out.detail["range"] = Json::array({lo, hi});
    out.detail["value_at_x_lo"] = s.vals.front();
    out.detail["value_at_x_hi"] = s.vals.back();
    if (spec.right_limit) {
      const double right = spec.right_limit(pr.c, pr.d);
      out.tally.record(with(base, {{"x", xs.back()}}),
                       std::abs(s.vals.back() - right), kEndpointTol,
                       kEndpointTol + 10.0 * s.errs.back());
      out.detail["limit_at_1"] = right;
    }
    const auto verdict = check_monotone(xs, s.vals, Direction::Either, tol);
    out.detail["observed"] = to_string(verdict.kind);
    return out;
  });

  VerificationReport r;
  r.params["pairs"] = pairs_json(pairs);
  r.grids = {{"x", grid}};
  r.details["expected"] = spec.increasing ? "Increasing" : "Decreasing";
  r.details["items"] = std::move(folded.details);
  if (!hyp) r.details["note"] = "hypotheses not met for some pair";
  r.apply(folded.tally, !hyp);
  return r;
}

VerificationReport check_pvlem(const CheckOptions& o) {
  const double tol = tol_or(o);
  const std::vector<Pair> defaults = {
      {1.0, 1.0}, {0.5, 2.0},  {2.0, 0.5}, {0.25, 4.0}, {3.0, 0.2}, {0.7, 0.7},
      {1.0, 2.0}, {2.0, 2.0},  {0.75, 1.5}, {3.0, 1.5}, {5.0, 5.0}, {0.6, 3.5}};
  const auto pairs = pairs_or(o, defaults);
  const GridSpec grid = unit_grid(o, grid_n_or(o, kDefaultGridPoints));
  const auto xs = grid.points();

  auto case1 = [](const Pair& p) { return p.c * p.d <= 1.0; };
  auto case2 = [](const Pair& p) {
    return p.c > 0.5 && p.d >= p.c / (2.0 * p.c - 1.0);
  };
  bool hyp = true;
  for (const auto& p : pairs) hyp = hyp && (case1(p) || case2(p));

  auto folded = run_items(pairs.size(), tol, [&](std::size_t i) {
    ItemResult out{MarginTally(tol), Json::object()};
    const Pair pr = pairs[i];
    const auto s = sample_ratio(pr, xs, FRatio::F4);
    const std::vector<Coord> base = {{"c", pr.c}, {"d", pr.d}};
    const double inv_b = 1.0 / beta(pr.c, pr.d);
    Json cases = Json::array();
    if (case1(pr)) {
      cases.push_back(1);
      record_monotone(out.tally, with(base, {{"case", 1.0}}), "x", xs, s.vals,
                      s.errs, false);
      for (std::size_t k = 0; k < xs.size(); ++k) {
        const auto pt = with(base, {{"case", 1.0}, {"x", xs[k]}});
        out.tally.record(pt, inv_b, s.vals[k], 10.0 * s.errs[k]);
        out.tally.record(pt, s.vals[k], 1.0, 10.0 * s.errs[k]);
      }
    }
    if (case2(pr)) {
      cases.push_back(2);
      record_monotone(out.tally, with(base, {{"case", 2.0}}), "x", xs, s.vals,
                      s.errs, true);
      for (std::size_t k = 0; k < xs.size(); ++k) {
        const auto pt = with(base, {{"case", 2.0}, {"x", xs[k]}});
        out.tally.record(pt, 1.0, s.vals[k], 10.0 * s.errs[k]);
        out.tally.record(pt, s.vals[k], inv_b, 10.0 * s.errs[k]);
      }
    }
    out.detail["pair"] = to_json(pr);
    out.detail["cases"] = cases;
    out.detail["observed"] =
        to_string(check_monotone(xs, s.vals, Direction::Either, tol).kind);
    return out;
  });

  VerificationReport r;
  r.params["pairs"] = pairs_json(pairs);
  r.grids = {{"x", grid}};
  r.details["items"] = std::move(folded.details);
  if (!hyp) r.details["note"] = "hypotheses not met for some pair";
  r.apply(folded.tally, !hyp);
  return r;
}

VerificationReport check_kulemma(const CheckOptions& o) {
  const double tol = tol_or(o, 1e-12);
  const int n_max = grid_n_or(o, 50);
  if (n_max < 2) throw UsageError("kuLemma needs --grid-n >= 2");
  std::vector<Triple> triples = {
      {0.5, 0.5, 1.0}, {1.0, 1.0, 2.0}, {2.0, 3.0, 5.0}, {0.3, 0.7, 1.0},
      {1.0, 1.0, 1.0}, {0.5, 0.5, 0.5}, {2.0, 2.0, 2.0}, {1.0, 2.0, 2.0},
      {0.2, 0.9, 1.5}, {3.0, 3.0, 3.5}, {1.5, 0.5, 2.0}, {4.0, 4.0, 8.0},
      {0.1, 0.1, 0.2}, {2.0, 5.0, 5.0}, {0.7, 0.2, 0.7}, {1.0, 1.0, 3.0},
      {3.0, 1.0, 4.0}, {6.0, 6.0, 6.0}, {0.5, 2.0, 2.5}, {5.0, 0.25, 5.25}};
  if (o.c.has_value() != o.d.has_value()) {
    throw UsageError("--c and --d must be given together");
  }
  if (o.c) triples = {{*o.c, *o.d, *o.c + *o.d}};
  bool hyp = true;
  for (const auto& t : triples) hyp = hyp && std::max(t.a, t.b) <= t.c;

  auto folded = run_items(triples.size(), tol, [&](std::size_t i) {
    ItemResult out{MarginTally(tol), Json::object()};
    const Triple t = triples[i];
    const HypParams p(t.a, t.b, t.c);
    const auto an = ratio_coeffs(p, n_max);
    const auto tn = series_coeffs(p, n_max + 1);
    const std::vector<Coord> base = {{"a", t.a}, {"b", t.b}, {"c", t.c}};
    for (int n = 0; n + 1 <= n_max; ++n) {
      const auto k = static_cast<std::size_t>(n);
      out.tally.record(with(base, {{"n", double(n)}, {"kind", 0.0}}), an[k + 1],
                       an[k]);
    }
    for (int n = 1; n + 1 <= n_max; ++n) {
      const auto k = static_cast<std::size_t>(n);
      out.tally.record(with(base, {{"n", double(n)}, {"kind", 1.0}}), 0.0,
                       an[k - 1] - 2.0 * an[k] + an[k + 1]);
    }
    // Division inverse: sum_k a_k t_{n-k} = (n + 1) t_{n+1}.
    double worst_rel = 0.0;
    for (int n = 0; n <= n_max; ++n) {
      long double acc = 0.0L;
      for (int k = 0; k <= n; ++k) {
        acc += static_cast<long double>(an[static_cast<std::size_t>(k)]) *
               tn[static_cast<std::size_t>(n - k)];
      }
      const double rhs = (n + 1.0) * tn[static_cast<std::size_t>(n + 1)];
      const double rel =
          std::abs(static_cast<double>(acc) - rhs) / std::max(1.0, std::abs(rhs));
      worst_rel = std::max(worst_rel, rel);
      out.tally.record(with(base, {{"n", double(n)}, {"kind", 2.0}}), rel, 0.0);
    }
    out.detail["triple"] = Json::array({t.a, t.b, t.c});
    out.detail["a0"] = an[0];
    out.detail["a1"] = an[1];
    out.detail["reconstruction_max_rel"] = worst_rel;
    if (p.zero_balanced()) {
      const ZeroBalancedPair zb(t.a, t.b);
      const double d0 = std::abs(an[0] - zb.a0()) / zb.a0();
      const double d1 = std::abs((an[0] - an[1]) - zb.h()) / zb.h();
      out.tally.record(with(base, {{"n", 0.0}, {"kind", 3.0}}), d0, 0.0);
      out.tally.record(with(base, {{"n", 1.0}, {"kind", 3.0}}), d1, 0.0);
      out.detail["a0_closed_form"] = zb.a0();
      out.detail["h_closed_form"] = zb.h();
    }
    return out;
  });

  VerificationReport r;
  Json tj = Json::array();
  for (const auto& t : triples) tj.push_back(Json::array({t.a, t.b, t.c}));
  r.params["triples"] = tj;
  r.params["n_max"] = n_max;
  r.details["kinds"] = Json::array(
      {"nonincreasing", "convex", "reconstruction", "closed-form a0 / h"});
  r.details["items"] = std::move(folded.details);
  if (!hyp) r.details["note"] = "hypotheses not met (needs max{a,b} <= c)";
  r.apply(folded.tally, !hyp);
  return r;
}

VerificationReport check_mylemma2(const CheckOptions& o) {
  const double tol = tol_or(o);
  const auto pairs = pairs_or(
      o, {{1.0, 1.0}, {0.5, 0.5}, {0.25, 1.0}, {1.0, 0.3}, {0.8, 0.6}, {0.1, 0.1}});
  std::vector<double> ps = {1.0, 1.5, 2.0, 5.0, 10.0};
  if (o.p) ps = {*o.p};
  const GridSpec grid = unit_grid(o, grid_n_or(o, kDefaultGridPoints));
  const auto xs = grid.points();
  bool hyp = true;
  for (const auto& pr : pairs) {
    hyp = hyp && pr.c > 0.0 && pr.c <= 1.0 && pr.d > 0.0 && pr.d <= 1.0;
  }
  for (double p : ps) {
    if (!(p > 0.0) || !std::isfinite(p)) throw UsageError("mylemma2 needs p > 0");
    hyp = hyp && p >= 1.0;
  }

  const std::size_t n = pairs.size() * ps.size();
  auto folded = run_items(n, tol, [&](std::size_t i) {
    ItemResult out{MarginTally(tol), Json::object()};
    const Pair pr = pairs[i / ps.size()];
    const double p = ps[i % ps.size()];
    const auto params = pr.zb().params();
    const double b = beta(pr.c, pr.d);
    const bool unit_pair = pr.c == 1.0 && pr.d == 1.0;
    double chain_dev = 0.0;
    double f_dev = 0.0;
    for (double x : xs) {
      const double log_omx = std::log1p(-x);
      const double omz = std::exp(log_omx / p);
      const double z = -std::expm1(log_omx / p);
      const auto hx = f_ratio_eval(params, x, 1.0 - x, FRatio::F4);
      const auto hz = f_ratio_eval(params, z, omz, FRatio::F4);
      const auto fx = f21(params, x, 1.0 - x);
      const auto fz = f21(params, z, omz);
      const double bhx = b * hx.value;
      const double bhz = b * hz.value;
      const std::vector<Coord> pt = {{"c", pr.c}, {"d", pr.d}, {"p", p}, {"x", x}};
      const double ex = 10.0 * b * hx.abs_err;
      const double ez = 10.0 * b * hz.abs_err;
      out.tally.record(pt, bhz, b, ez);
      out.tally.record(pt, bhx, bhz, ex + ez);
      out.tally.record(pt, 1.0, bhx, ex);
      out.tally.record(pt, fx.value / p, fz.value,
                       10.0 * (fx.abs_err_estimate / p + fz.abs_err_estimate));
      if (unit_pair) {
        chain_dev = std::max({chain_dev, std::abs(bhx - 1.0), std::abs(bhz - 1.0)});
        out.tally.record(pt, std::abs(bhx - 1.0), 0.0, ex);
        out.tally.record(pt, std::abs(bhz - 1.0), 0.0, ez);
      }
      if (p == 1.0) {
        f_dev = std::max(f_dev, std::abs(fz.value - fx.value));
        out.tally.record(pt, std::abs(fz.value - fx.value), 0.0);
      }
    }
    out.detail["pair"] = to_json(pr);
    out.detail["p"] = p;
    if (unit_pair) out.detail["h_chain_equality_max_dev"] = chain_dev;
    if (p == 1.0) out.detail["f_equality_max_dev"] = f_dev;
    return out;
  });

  VerificationReport r;
  r.params["pairs"] = pairs_json(pairs);
  r.params["p"] = ps;
  r.grids = {{"x", grid}};
  r.details["equality_cases"] =
      "h-chain equality checked for c = d = 1; F inequality equality for p = 1";
  r.details["items"] = std::move(folded.details);
  if (!hyp) r.details["note"] = "hypotheses not met (needs c, d in (0,1], p >= 1)";
  r.apply(folded.tally, !hyp);
  return r;
}

}  // namespace hyperlog::detail
