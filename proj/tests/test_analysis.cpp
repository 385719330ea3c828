#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hyperlog/analysis.hpp"
#include "hyperlog/errors.hpp"
#include "hyperlog/logtype.hpp"

using namespace hyperlog;

namespace {

// Plain bisection, 200 halvings.
template <class F>
double bisect(F f, double lo, double hi) {
  double flo = f(lo);
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// F(1/2, 1/2; 1; x) = 1 / AGM(1, sqrt(1 - x)).
double f_half_half_oracle(double one_minus_x) {
  long double a = 1.0L, b = std::sqrt(static_cast<long double>(one_minus_x));
  for (int i = 0; i < 40; ++i) {
    const long double m = 0.5L * (a + b);
    b = std::sqrt(a * b);
    a = m;
  }
  return static_cast<double>(1.0L / a);
}

double g_half_half_oracle(double x) { return x * f_half_half_oracle(1.0 - x); }

}  // namespace

TEST_CASE("bracket_root") {
  const double r = bracket_root([](double x) { return x * x - 2.0; }, 1.0, 2.0, 1e-12);
  CHECK(std::abs(r - std::sqrt(2.0)) < 1e-10);
  CHECK_THROWS_AS(bracket_root([](double x) { return x * x + 1.0; }, -1.0, 1.0, 1e-12),
                  BracketError);
  CHECK_THROWS_AS(bracket_root([](double) { return NAN; }, 0.0, 1.0, 1e-12),
                  std::exception);
}

TEST_CASE("gamma root") {
  CHECK(std::abs(gamma_root(ZeroBalancedPair(1.0, 1.0)) - (std::numbers::e - 1.0)) < 1e-9);
  const double gh = gamma_root(ZeroBalancedPair(0.5, 0.5));
  const double ref =
      bisect([](double s) { return g_half_half_oracle(s / (1.0 + s)) - 1.0; }, 1.0, 100.0);
  CHECK(gh > 1.0);
  CHECK(std::abs(gh - ref) < 1e-9);
  CHECK(g_fn(ZeroBalancedPair(1.0, 1.0), 0.5) < 1.0);
  CHECK_THROWS_AS(gamma_root(ZeroBalancedPair(4.0, 4.0)), BracketError);
}

TEST_CASE("beta and x0 roots") {
  const double b = beta_root(ZeroBalancedPair(1.0, 1.0), PhiExponents(1.0, 1.0));
  CHECK(std::abs(b - (1.0 - std::exp(-1.0))) < 1e-9);
  const double x0 = x0_root();
  CHECK(std::abs(x0 - 2.4555) <= 5e-4);
  CHECK(std::abs(s_fn(x0) - 1.0) < 1e-10);
  // beta solves g(u/(1+u)) = 1 with u = phi^{-1}(x/(1-x)).
  const ZeroBalancedPair hh(0.5, 0.5);
  const PhiExponents e(0.5, 2.0);
  const double bh = beta_root(hh, e);
  const double u = phi_inv(e, bh / (1.0 - bh));
  CHECK(std::abs(g_half_half_oracle(u / (1.0 + u)) - 1.0) < 1e-9);
}

TEST_CASE("beta side prediction") {
  CHECK(std::abs(beta_threshold_c0() - (1.0 - 1.0 / (2.0 * std::log(2.0)))) < 1e-15);
  CHECK(std::abs(beta_threshold_c1() - (1.0 / std::log(2.0) - 1.0)) < 1e-15);
  CHECK(std::abs(beta_threshold_c0() - 0.27865) < 1e-5);
  CHECK(predict_beta_side(ZeroBalancedPair(1.0, 1.0)) == BetaSide::PredictGT);
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> lu(std::log(0.05), std::log(20.0));
  for (int i = 0; i < 500; ++i) {
    const ZeroBalancedPair p(std::exp(lu(rng)), std::exp(lu(rng)));
    if (p.a0() <= 1.0) CHECK(predict_beta_side(p) == BetaSide::PredictGT);
  }
}

TEST_CASE("an inconclusive pair exists and its beta is still found") {
  // Brute-force scan of the diagonal c = d for (a0 - 1)/h inside (c0, c1).
  bool found = false;
  for (double c = 2.0; c < 4.0 && !found; c += 1e-4) {
    const ZeroBalancedPair p(c, c);
    const double q = (p.a0() - 1.0) / p.h();
    if (q > beta_threshold_c0() && q < beta_threshold_c1()) {
      found = true;
      CHECK(predict_beta_side(p) == BetaSide::Inconclusive);
      const double b = beta_root(p, PhiExponents(1.0, 1.0));
      CHECK(b > 0.0);
      CHECK(b < 1.0);
    }
  }
  CHECK(found);
}

TEST_CASE("predicted sides agree with computed beta") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> lu(std::log(0.2), std::log(8.0));
  for (int i = 0; i < 100; ++i) {
    const ZeroBalancedPair p(std::exp(lu(rng)), std::exp(lu(rng)));
    const double b = beta_root(p, PhiExponents(0.5, 2.0));
    const auto side = predict_beta_side(p);
    if (side == BetaSide::PredictGT) CHECK(b > 0.5);
    if (side == BetaSide::PredictLT) CHECK(b < 0.5);
  }
}

TEST_CASE("grids") {
  const GridSpec lin{0.0, 1.0, 11, Spacing::Linear};
  const auto p = lin.points();
  REQUIRE(p.size() == 11);
  CHECK(p.front() == 0.0);
  CHECK(p.back() == 1.0);
  const GridSpec lg{1e-4, 1e4, 9, Spacing::Log};
  const auto q = lg.points();
  CHECK(q.front() == 1e-4);
  CHECK(q.back() == 1e4);
  CHECK(std::abs(q[4] - 1.0) < 1e-14);
  CHECK_THROWS(GridSpec{1.0, 0.0, 10, Spacing::Linear}.validate());
  CHECK_THROWS(GridSpec{-1.0, 1.0, 10, Spacing::Log}.validate());
  CHECK_THROWS(GridSpec{0.0, 1.0, 1, Spacing::Linear}.validate());
}

TEST_CASE("monotonicity checker") {
  const GridSpec g{0.0, 2.0, 200, Spacing::Linear};
  CHECK(check_monotone([](double x) { return x * x; }, g, Direction::Either).kind ==
        MonotoneKind::Increasing);
  CHECK(check_monotone([](double x) { return -x; }, g, Direction::Either).kind ==
        MonotoneKind::Decreasing);
  const auto bad = check_monotone([](double x) { return std::sin(5 * x); }, g,
                                  Direction::Increasing);
  CHECK(bad.kind == MonotoneKind::NonMonotone);
  CHECK(bad.witness.has_value());
  // A flat f4 passes in both directions.
  const HypParams unit(1.0, 1.0, 2.0);
  const GridSpec u{1e-6, 1.0 - 1e-6, 500, Spacing::Linear};
  auto f4 = [&](double x) { return f_ratio(unit, x, FRatio::F4); };
  CHECK(check_monotone(f4, u, Direction::Increasing).kind == MonotoneKind::Increasing);
  CHECK(check_monotone(f4, u, Direction::Decreasing).kind == MonotoneKind::Decreasing);
  // f4 for (1/2, 1/2) falls from 1 towards 1/pi.
  const HypParams hh(0.5, 0.5, 1.0);
  auto g4 = [&](double x) { return f_ratio(hh, x, FRatio::F4); };
  CHECK(check_monotone(g4, u, Direction::Either).kind == MonotoneKind::Decreasing);
  CHECK(std::abs(g4(1e-9) - 1.0) < 1e-6);
  CHECK(g4(1.0 - 1e-6) > 1.0 / std::numbers::pi);
}

TEST_CASE("concavity checker") {
  const GridSpec g{-10.0, 10.0, 2048, Spacing::Linear};
  CHECK(check_concavity([](double x) { return x * x; }, g).kind == CurvatureKind::Convex);
  const ZeroBalancedPair unit(1.0, 1.0);
  CHECK(check_concavity([&](double u) { return big_g(unit, u); }, g).kind ==
        CurvatureKind::Concave);
  const ZeroBalancedPair three(3.0, 3.0);
  const auto v = check_concavity([&](double u) { return big_g(three, u); }, g);
  CHECK(v.kind == CurvatureKind::Neither);
  REQUIRE(v.witness_positive.has_value());
  CHECK(v.max_second_diff > kShapeSlack);
}

TEST_CASE("power-ratio classifier") {
  using enum LogConvexity;
  CHECK(classify_power_ratio(Convex, 0.5, Region::UnitInterval) == MonotoneKind::Increasing);
  CHECK(classify_power_ratio(Concave, 0.5, Region::AboveOne) == MonotoneKind::Increasing);
  CHECK(classify_power_ratio(Concave, 2.0, Region::AboveOne) == MonotoneKind::Decreasing);
  CHECK(classify_power_ratio(Concave, 0.5, Region::UnitInterval) == MonotoneKind::Decreasing);
  CHECK(classify_power_ratio(Convex, 1.0, Region::AboveOne) == MonotoneKind::Increasing);
  CHECK_THROWS_AS(classify_power_ratio(Convex, 0.0, Region::AboveOne), DomainError);
}

TEST_CASE("classifier agrees with sampled ratios") {
  // log f(e^u) is concave for f = log(1 + x).
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> uc(-3.0, 3.0);
  for (int i = 0; i < 40; ++i) {
    double c = uc(rng);
    if (std::abs(c) < 0.05 || std::abs(c - 1.0) < 0.05) continue;
    for (auto region : {Region::UnitInterval, Region::AboveOne}) {
      const GridSpec g = region == Region::UnitInterval
                             ? GridSpec{0.05, 0.95, 200, Spacing::Linear}
                             : GridSpec{1.05, 3.0, 200, Spacing::Linear};
      auto ratio = [c](double x) { return std::log1p(std::pow(x, c)) / std::pow(std::log1p(x), c); };
      const auto pred = classify_power_ratio(LogConvexity::Concave, c, region);
      const auto seen = check_monotone(ratio, g, Direction::Either);
      CHECK(seen.kind == pred);
    }
  }
}
