#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hyperlog/errors.hpp"
#include "hyperlog/hyp2f1.hpp"

using namespace hyperlog;

namespace {

// Plain Maclaurin sum in long double, run far past convergence.
long double brute_series(double a, double b, double c, double x, int terms = 200000) {
  long double sum = 1.0L, t = 1.0L;
  for (int n = 0; n < terms; ++n) {
    t *= (a + n) * static_cast<long double>(b + n) / ((c + n) * static_cast<long double>(n + 1)) * x;
    sum += t;
    if (std::abs(t) < 1e-30L * std::abs(sum)) break;
  }
  return sum;
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

}  // namespace

TEST_CASE("pochhammer") {
  CHECK(pochhammer(3.7, 0) == 1.0);
  CHECK(pochhammer(1.0, 5) == 120.0);
  CHECK(pochhammer(2.0, 3) == 24.0);
  CHECK(std::isinf(pochhammer(10.0, 1000)));
}

TEST_CASE("f21 closed form for (1, 1; 2)") {
  const HypParams p(1.0, 1.0, 2.0);
  CHECK(std::abs(f21(p, 0.5).value - 2.0 * std::log(2.0)) < 1e-14);
  CHECK(f21(p, 0.0).value == 1.0);
  CHECK(std::abs(f21(p, 0.99).value - std::log(100.0) / 0.99) < 1e-12);
  CHECK(f21(HypParams(2.3, 0.7, 5.1), 0.0).value == 1.0);
}

TEST_CASE("x F(1,1;2;x) = log(1/(1-x)) on 1000 points") {
  const HypParams p(1.0, 1.0, 2.0);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double x = 1e-6 + (1.0 - 1e-4 - 1e-6) * i / 999.0;
    const double lhs = x * f21(p, x).value;
    const double rhs = -std::log1p(-x);
    worst = std::max(worst, std::abs(lhs - rhs) / std::abs(std::log1p(-x)));
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("f21 against a long-double brute-force series") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> par(0.1, 4.0);
  std::uniform_real_distribution<double> xs(0.0, 0.9);
  for (int i = 0; i < 300; ++i) {
    const double a = par(rng), b = par(rng), c = par(rng), x = xs(rng);
    const double ref = static_cast<double>(brute_series(a, b, c, x));
    const auto r = f21(HypParams(a, b, c), x);
    CHECK(std::abs(r.value - ref) <= 1e-12 * std::abs(ref));
    CHECK(std::abs(r.value - ref) <= std::max(10.0 * r.abs_err_estimate, 1e-15 * std::abs(ref)));
  }
}

TEST_CASE("Euler-transformed route against (1-x)^(-a)") {
  // F(a, b; b; x) = (1 - x)^(-a), and c = b < a + b routes through Euler.
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> par(0.1, 3.0);
  std::uniform_real_distribution<double> xs(0.5, 0.999);
  for (int i = 0; i < 200; ++i) {
    const double a = par(rng), b = par(rng), x = xs(rng);
    const auto r = f21(HypParams(a, b, b), x);
    const double ref = std::pow(1.0 - x, -a);
    CHECK(std::abs(r.value / ref - 1.0) < 1e-12);
  }
}

TEST_CASE("zero-balanced values against the AGM") {
  const HypParams p(0.5, 0.5, 1.0);
  for (double omx : {0.5, 0.1, 1e-2, 1e-3, 2e-4, 9e-5, 1e-6, 1e-9, 1e-12}) {
    const double x = 1.0 - omx;
    const double ref = f_half_half_oracle(omx);
    const auto r = f21(p, x, omx);
    CHECK(std::abs(r.value / ref - 1.0) < 1e-12);
  }
  CHECK(f21(p, 1.0 - 1e-6).method == EvalMethod::Near1Asymptotic);
  CHECK(f21(p, 0.9).method == EvalMethod::Series);
}

TEST_CASE("log expansion agrees with the series on the overlap") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> par(0.1, 5.0);
  for (int i = 0; i < 50; ++i) {
    const double a = par(rng), b = par(rng);
    const HypParams p(a, b, a + b);
    for (double omx : {1e-2, 1e-3}) {
      const double s = f21(p, 1.0 - omx, omx).value;
      const double l = f21_log_expansion(p, omx).value;
      CHECK(std::abs(s / l - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("leading-order near-1 form stays inside its error constant") {
  for (auto [a, b] : {std::pair{1.0, 1.0}, {0.5, 0.5}, {2.0, 3.0}, {0.3, 4.0}}) {
    const HypParams p(a, b, a + b);
    const double k = leading_order_error_constant(p);
    for (double omx : {1e-5, 1e-7, 1e-9}) {
      const double f = f21(p, 1.0 - omx, omx).value;
      CHECK(std::abs(f - near1_leading(p, omx)) <= k * omx * std::abs(std::log(omx)));
    }
  }
}

TEST_CASE("Gauss sum at x = 1") {
  CHECK(std::abs(f21_at_1(HypParams(1.0, 1.0, 3.0)) - 2.0) < 1e-13);
  CHECK(std::abs(f21_at_1(HypParams(0.5, 0.5, 2.0)) - 4.0 / std::numbers::pi) < 1e-13);
  CHECK_THROWS_AS(f21_at_1(HypParams(1.0, 1.0, 2.0)), DomainError);
}

TEST_CASE("derivative") {
  const HypParams p(1.0, 1.0, 2.0);
  CHECK(std::abs(f21_derivative(p, 0.0).value - 0.5) < 1e-15);
  CHECK(std::abs(f21_derivative(p, 0.5).value - (4.0 - 4.0 * std::log(2.0))) < 1e-13);
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> par(0.2, 3.0);
  for (int i = 0; i < 100; ++i) {
    const HypParams q(par(rng), par(rng), par(rng));
    const double h = 1e-5;
    const double fd = (f21(q, 0.3 + h).value - f21(q, 0.3 - h).value) / (2 * h);
    CHECK(std::abs(f21_derivative(q, 0.3).value - fd) < 1e-6);
  }
}

TEST_CASE("Maclaurin coefficients") {
  const auto t = series_coeffs(HypParams(1.0, 1.0, 2.0), 3);
  REQUIRE(t.size() == 4);
  CHECK(t[0] == 1.0);
  CHECK(std::abs(t[1] - 0.5) < 1e-16);
  CHECK(std::abs(t[2] - 1.0 / 3.0) < 1e-16);
  CHECK(std::abs(t[3] - 0.25) < 1e-16);
  const auto u = series_coeffs(HypParams(2.0, 3.0, 4.0), 1);
  CHECK(u[1] == 1.5);
  CHECK(series_coeffs(HypParams(2.7, 0.3, 1.9), 1)[0] == 1.0);
}

TEST_CASE("F'/F coefficients") {
  const auto an = ratio_coeffs(HypParams(1.0, 1.0, 2.0), 1);
  CHECK(std::abs(an[0] - 0.5) < 1e-15);
  CHECK(std::abs(an[1] - 5.0 / 12.0) < 1e-15);
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> par(0.1, 6.0);
  for (int i = 0; i < 50; ++i) {
    const double c = par(rng), d = par(rng);
    const HypParams p(c, d, c + d);
    const auto a = ratio_coeffs(p, 30);
    const double a0 = c * d / (c + d);
    CHECK(std::abs(a[0] - a0) < 1e-14 * a0);
    CHECK(std::abs((a[0] - a[1]) - a0 * a0 / (c + d + 1.0)) < 1e-12 * a0);
    // sum_k a_k t_{n-k} = (n + 1) t_{n+1}.
    const auto t = series_coeffs(p, 31);
    for (int n = 0; n <= 30; ++n) {
      long double s = 0.0L;
      for (int k = 0; k <= n; ++k) s += static_cast<long double>(a[k]) * t[n - k];
      const double target = (n + 1) * t[n + 1];
      CHECK(std::abs(static_cast<double>(s) - target) <= 1e-12 * std::abs(target));
    }
  }
}

TEST_CASE("domain errors") {
  const HypParams p(1.0, 1.0, 2.0);
  CHECK_THROWS_AS(f21(p, 1.0), DomainError);
  CHECK_THROWS_AS(f21(p, -0.1), DomainError);
  CHECK_THROWS_AS(f21(p, NAN), DomainError);
  CHECK_THROWS_AS(HypParams(0.0, 1.0, 1.0), DomainError);
}
