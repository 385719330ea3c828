#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hyperlog/analysis.hpp"
#include "hyperlog/errors.hpp"
#include "hyperlog/logtype.hpp"

using namespace hyperlog;

namespace {

const double kLog2 = std::log(2.0);

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

TEST_CASE("g closed form for (1, 1)") {
  const ZeroBalancedPair unit(1.0, 1.0);
  CHECK(g_fn(unit, 0.0) == 0.0);
  CHECK(std::abs(g_fn(unit, 0.5) - kLog2) < 1e-15);
  for (int i = 1; i < 200; ++i) {
    const double x = i / 200.0;
    CHECK(std::abs(g_fn(unit, x) + std::log1p(-x)) < 1e-14 * (1.0 - std::log1p(-x)));
  }
  CHECK(g_fn(ZeroBalancedPair(2.5, 0.3), 0.0) == 0.0);
}

TEST_CASE("g_logistic keeps 1 - x accurate") {
  const ZeroBalancedPair unit(1.0, 1.0);
  for (double t : {-30.0, -5.0, 0.0, 3.0, 20.0, 40.0, 200.0}) {
    // log(1/(1-x)) = log(1 + e^t).
    const double ref = t > 30 ? t + std::log1p(std::exp(-t)) : std::log1p(std::exp(t));
    CHECK(std::abs(g_logistic(unit, t) / ref - 1.0) < 1e-13);
  }
  const ZeroBalancedPair hh(0.5, 0.5);
  for (double t : {-3.0, 0.0, 2.0, 8.0}) {
    const double x = 1.0 / (1.0 + std::exp(-t));
    CHECK(std::abs(g_logistic(hh, t) / g_half_half_oracle(x) - 1.0) < 1e-12);
  }
}

TEST_CASE("phi and its inverse") {
  const PhiExponents e(0.5, 2.0);
  CHECK(phi(e, 1.0) == 1.0);
  CHECK(std::abs(phi(e, 0.25) - 0.5) < 1e-15);
  CHECK(std::abs(phi_inv(e, 4.0) - 2.0) < 1e-15);
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> ua(0.05, 1.0), ub(1.0, 5.0), lt(-8.0, 8.0);
  for (int i = 0; i < 500; ++i) {
    const PhiExponents f(ua(rng), ub(rng));
    const double t = std::exp(lt(rng));
    CHECK(std::abs(phi_inv(f, phi(f, t)) / t - 1.0) < 1e-12);
    CHECK(phi_inv(f, 1.0) == 1.0);  // so alpha = 1/2 for every exponent pair
  }
  CHECK_THROWS(PhiExponents(1.5, 2.0));
  CHECK_THROWS(PhiExponents(0.5, 0.9));
}

TEST_CASE("omega values at r = 4") {
  const ZeroBalancedPair unit(1.0, 1.0);
  const auto w1 = omega(unit, 1.0, 4.0);
  const auto w2 = omega(unit, 2.0, 4.0);
  const auto w4 = omega(unit, 4.0, 4.0);
  CHECK(std::abs(w1.value - std::log(5.0)) < 1e-13);
  CHECK(std::abs(w2.value - std::sqrt(std::log(17.0))) < 1e-13);
  CHECK(std::abs(w4.value - std::pow(std::log(257.0), 0.25)) < 1e-13);
  CHECK(std::abs(w1.value - 1.61) < 5e-3);
  CHECK(std::abs(w2.value - 1.68) < 5e-3);
  CHECK(std::abs(w4.value - 1.53) < 5e-3);
  CHECK_FALSE(w1.theorem_domain);
  CHECK(omega(unit, 1.0, 0.5).theorem_domain);
}

TEST_CASE("f ratios") {
  const HypParams unit(1.0, 1.0, 2.0);
  for (double x : {1e-6, 0.1, 0.5, 0.9, 0.9999, 1.0 - 1e-9}) {
    CHECK(std::abs(f_ratio(unit, x, 1.0 - x, FRatio::F4) - 1.0) < 1e-12);
  }
  CHECK(std::abs(f_ratio(unit, 0.5, FRatio::F2) - kLog2) < 1e-14);
  for (auto [a, b] : {std::pair{1.0, 1.0}, {0.5, 2.0}, {3.0, 0.7}}) {
    const HypParams p(a, b, a + b);
    CHECK(std::abs(f_ratio(p, 1e-7, FRatio::F1) - a * b / (a + b)) < 1e-5);
    const auto v = f_ratio_eval(p, 0.3, 0.7, FRatio::F3);
    CHECK(v.value == f_ratio(p, 0.3, FRatio::F3));
    CHECK(v.abs_err >= 0.0);
  }
}

TEST_CASE("elementary helpers") {
  CHECK(std::abs(s_fn(std::numbers::e - 1.0) - kLog2) < 1e-15);
  CHECK(std::abs(v_fn(0.0) - std::log1p(kLog2)) < 1e-15);
  CHECK(std::abs(w_fn(0.0) - (1.0 - kLog2 * std::log1p(kLog2))) < 1e-15);
  CHECK(std::abs(w_fn(0.0) - 0.635) < 1e-3);
  CHECK(std::abs(r_fn(0.0) - kLog2) < 1e-16);
  CHECK(std::abs(r_fn(800.0) - 800.0) < 1e-12);
}

TEST_CASE("bound functions at their breakpoints") {
  for (double a : {0.1, 0.5, 0.9}) {
    for (double p : {0.5, 1.0, 3.0}) {
      CHECK(std::abs(f1_bound_fn(a, p, 1.0) - std::pow(kLog2, p * (1.0 - a))) < 1e-14);
      CHECK(f1_bound_fn(a, p, std::numbers::e - 1.0 + 1e-6) == doctest::Approx(1.0).epsilon(1e-14));
      CHECK(f1_bound_fn(a, p, 50.0) == doctest::Approx(1.0).epsilon(1e-14));
    }
    CHECK(std::abs(f2_bound_fn(a, 1.0) - std::pow(kLog2 * std::log1p(kLog2), 1.0 - a)) < 1e-14);
  }
}

TEST_CASE("T and t") {
  const ZeroBalancedPair unit(1.0, 1.0);
  const double gam = gamma_root(unit);
  const PhiExponents same(1.0, 1.0);
  for (double s : {1e-3, 0.5, 1.0, 1.5, gam, 3.0, 100.0}) {
    CHECK(std::abs(T_fn(unit, same, s, gam) - 1.0) < 1e-12);
  }
  const ZeroBalancedPair hh(0.5, 0.5);
  const double gh = gamma_root(hh);
  const PhiExponents e(0.5, 2.0);
  CHECK(std::abs(T_fn(hh, e, 1e-12, gh) - 1.0) < 1e-3);
  const double s = gh * 1.01;
  const double direct =
      g_logistic(hh, 2.0 * std::log(s)) / std::pow(g_logistic(hh, std::log(s)), 2.0);
  CHECK(std::abs(t_fn(hh, e, s, gh) - direct) < 1e-12 * direct);
}

TEST_CASE("h(x, y) and d(x, y)") {
  const ZeroBalancedPair unit(1.0, 1.0);
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> u(0.001, 0.999);
  for (int i = 0; i < 300; ++i) {
    const double x = u(rng), y = u(rng);
    CHECK(std::abs(h_xy(unit, x, y) - 1.0) < 1e-10);
    CHECK(std::abs(d_xy(unit, x, y)) < 1e-10);
  }
  const ZeroBalancedPair hh(0.5, 0.5);
  CHECK(std::abs(h_xy(hh, 0.3, 1e-12) - 1.0) < 1e-9);
  const double ref = 2.0 * g_half_half_oracle(0.5) / g_half_half_oracle(0.75);
  CHECK(std::abs(h_xy(hh, 0.5, 0.5) - ref) < 1e-12);
  CHECK(h_xy(hh, 0.5, 0.5) >= 1.0);
}

TEST_CASE("G(u)") {
  const ZeroBalancedPair unit(1.0, 1.0);
  CHECK(std::abs(big_g(unit, 0.0) - std::log(kLog2)) < 1e-14);
  CHECK(std::abs(big_g(unit, 0.0) + 0.3665) < 1e-4);
  for (double u = -20.0; u <= 20.0; u += 0.7) {
    CHECK(std::abs(big_g(unit, u) - std::log(std::log1p(std::exp(u)))) < 1e-12);
  }
  double prev = -INFINITY;
  for (double u = -40.0; u <= 40.0; u += 0.5) {
    const double v = big_g(ZeroBalancedPair(3.0, 3.0), u);
    CHECK(v > prev);
    prev = v;
  }
  CHECK(big_g(unit, -700.0) < -600.0);
}

TEST_CASE("Bernoulli sides") {
  const auto s = bernoulli_lhs_rhs(2.0, 1.0, PhiExponents(1.0, 1.0));
  CHECK(std::abs(s.lhs - std::log(3.0)) < 1e-15);
  CHECK(std::abs(s.rhs - 2.0 * kLog2) < 1e-15);
  const auto z = bernoulli_lhs_rhs(3.0, 1e-300, PhiExponents(0.5, 2.0));
  CHECK(z.lhs < 1e-100);
  CHECK(z.rhs < 1e-100);
  const auto h = bernoulli_lhs_rhs(1.0, 1.0, PhiExponents(0.5, 2.0));
  CHECK(std::abs(h.lhs - kLog2) < 1e-15);
  CHECK(std::abs(h.rhs - std::max(std::sqrt(kLog2), 2.0 * kLog2)) < 1e-15);
}
