#include "check_support.hpp"

#include <cmath>

namespace hyperlog::detail {

const std::vector<Pair>& admissible_pairs() {
  static const std::vector<Pair> pairs = [] {
    std::vector<double> v;
    for (int i = 0; i < 16; ++i) v.push_back(0.1 * std::pow(60.0, i / 15.0));
    std::vector<Pair> all;
    for (std::size_t i = 0; i < v.size(); ++i) {
      for (std::size_t j = i; j < v.size(); ++j) {
        if (v[i] + v[j] >= v[i] * v[j]) all.push_back({v[i], v[j]});
      }
    }
    std::vector<Pair> out;
    for (std::size_t k = 0; k < 48; ++k) out.push_back(all[k * all.size() / 48]);
    // Boundary cases with a0 = 1 exactly.
    out.push_back({2.0, 2.0});
    out.push_back({3.0, 1.5});
    return out;
  }();
  return pairs;
}

const std::vector<Pair>& product_le_one_pairs() {
  static const std::vector<Pair> pairs = {
      {1.0, 1.0},  {0.5, 0.5},   {0.5, 2.0}, {2.0, 0.5}, {0.25, 1.0},
      {0.25, 4.0}, {0.8, 1.2},   {0.1, 0.1}, {0.3, 3.0}, {0.7, 0.7}};
  return pairs;
}

const std::vector<Pair>& non_admissible_pairs() {
  static const std::vector<Pair> pairs = {
      {3.0, 3.0}, {4.0, 4.0}, {2.5, 4.0}, {3.0, 5.0}, {5.0, 5.0},
      {6.0, 3.0}, {2.8, 3.5}, {10.0, 2.0}, {4.0, 6.0}, {8.0, 8.0}};
  return pairs;
}

const std::vector<Exps>& phi_exponent_family() {
  static const std::vector<Exps> e = {
      {0.5, 2.0}, {0.25, 1.5}, {0.9, 3.0}, {0.5, 1.1}};
  return e;
}

const std::vector<PairExps>& power_odds_combos() {
  static const std::vector<PairExps> combos = [] {
    const std::vector<Pair> pairs = {
        {1.0, 1.0}, {0.5, 0.5}, {0.5, 2.0}, {0.25, 1.0}, {0.8, 1.2}};
    std::vector<PairExps> out;
    for (const auto& p : pairs) {
      for (const auto& e : phi_exponent_family()) out.push_back({p, e});
    }
    return out;
  }();
  return combos;
}

std::vector<Pair> pairs_or(const CheckOptions& o, const std::vector<Pair>& family) {
  if (o.c.has_value() != o.d.has_value()) {
    throw UsageError("--c and --d must be given together");
  }
  if (o.c) {
    if (!(*o.c > 0.0) || !(*o.d > 0.0) || !std::isfinite(*o.c) ||
        !std::isfinite(*o.d)) {
      throw UsageError("--c and --d must be positive");
    }
    return {{*o.c, *o.d}};
  }
  return family;
}

std::vector<Exps> exps_or(const CheckOptions& o, const std::vector<Exps>& family) {
  if (o.a.has_value() != o.b.has_value()) {
    throw UsageError("--a and --b must be given together");
  }
  if (o.a) {
    if (!(*o.a > 0.0) || !(*o.b > 0.0) || !std::isfinite(*o.a) ||
        !std::isfinite(*o.b)) {
      throw UsageError("--a and --b must be positive");
    }
    return {{*o.a, *o.b}};
  }
  return family;
}

int grid_n_or(const CheckOptions& o, int fallback) {
  return o.grid_n.value_or(fallback);
}

double tol_or(const CheckOptions& o, double fallback) {
  return o.tol.value_or(fallback);
}

GridSpec unit_grid(const CheckOptions& o, int n, double lo, double hi) {
  GridSpec g{o.x_lo.value_or(lo), o.x_hi.value_or(hi), n, Spacing::Linear};
  g.validate();
  if (!(g.lo > 0.0 && g.hi < 1.0)) {
    throw UsageError("unit-interval grid must lie inside (0, 1)");
  }
  return g;
}

GridSpec positive_grid(const CheckOptions& o, int n, double lo, double hi) {
  GridSpec g{o.s_lo.value_or(lo), o.s_hi.value_or(hi), n, Spacing::Log};
  g.validate();
  return g;
}

Json to_json(const Pair& p) { return Json::array({p.c, p.d}); }
Json to_json(const Exps& e) { return Json::array({e.a, e.b}); }

Json pairs_json(const std::vector<Pair>& pairs) {
  Json j = Json::array();
  for (const auto& p : pairs) j.push_back(to_json(p));
  return j;
}

Folded run_items(std::size_t n, double tol,
                 const std::function<ItemResult(std::size_t)>& item) {
  auto parts = parallel_map<ItemResult>(n, item);
  Folded out{MarginTally(tol), Json::array()};
  for (auto& part : parts) {
    out.tally.merge(part.tally);
    if (!part.detail.is_null()) out.details.push_back(std::move(part.detail));
  }
  return out;
}

void record_monotone(MarginTally& tally, const std::vector<Coord>& base,
                     const std::string& var, const std::vector<double>& xs,
                     const std::vector<double>& vals,
                     const std::vector<double>& errs, bool increasing) {
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    const double extra = errs.empty() ? 0.0 : 10.0 * (errs[i] + errs[i + 1]);
    auto pt = with(base, {{var, xs[i]}});
    if (increasing) {
      tally.record(std::move(pt), vals[i], vals[i + 1], extra);
    } else {
      tally.record(std::move(pt), vals[i + 1], vals[i], extra);
    }
  }
}

void record_curvature(MarginTally& tally, const std::vector<Coord>& base,
                      const std::string& var, const std::vector<double>& xs,
                      const std::vector<double>& vals, bool concave) {
  const auto d2 = second_differences(xs, vals);
  for (std::size_t k = 1; k + 1 < d2.size(); ++k) {
    auto pt = with(base, {{var, xs[k + 1]}});
    if (concave) {
      tally.record(std::move(pt), d2[k], 0.0);
    } else {
      tally.record(std::move(pt), 0.0, d2[k]);
    }
  }
}

std::vector<Coord> with(std::vector<Coord> base, std::vector<Coord> extra) {
  for (auto& c : extra) base.push_back(std::move(c));
  return base;
}

UnitPoint logistic_point(double t) {
  if (t >= 0.0) {
    const double e = std::exp(-t);
    return {1.0 / (1.0 + e), e / (1.0 + e)};
  }
  const double e = std::exp(t);
  return {e / (1.0 + e), 1.0 / (1.0 + e)};
}

}  // namespace hyperlog::detail
