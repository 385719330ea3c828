#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hyperlog/errors.hpp"
#include "hyperlog/special_fn.hpp"

using namespace hyperlog;

namespace {

// Euler-Mascheroni constant from its limit definition, with the
// Euler-Maclaurin correction terms of H_n - log n.
long double gamma_limit_oracle() {
  const long n = 1000000;
  long double h = 0.0L;
  for (long k = n; k >= 1; --k) h += 1.0L / k;
  const long double nn = n;
  return h - std::log(nn) - 1.0L / (2 * nn) + 1.0L / (12 * nn * nn);
}

// psi(x) = psi(x + N) - sum_{k<N} 1/(x + k), with psi(x + N) from three
// asymptotic terms at N = 1e5, summed in long double.
double digamma_shift_oracle(double x) {
  const long n = 100000;
  long double s = 0.0L;
  for (long k = n - 1; k >= 0; --k) s += 1.0L / (x + k);
  const long double y = x + n;
  const long double big = std::log(y) - 1.0L / (2 * y) - 1.0L / (12 * y * y);
  return static_cast<double>(big - s);
}

}  // namespace

TEST_CASE("ln_gamma at integer and half-integer points") {
  CHECK(ln_gamma(1.0) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(std::abs(ln_gamma(5.0) - std::log(24.0)) < 1e-13);
  CHECK(std::abs(ln_gamma(0.5) - 0.5 * std::log(std::numbers::pi)) < 1e-13);
  CHECK(std::abs(ln_gamma(2.0)) < 1e-14);
}

TEST_CASE("ln_gamma against lgammal on random arguments") {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> logx(std::log(1e-3), std::log(170.0));
  double worst = 0.0;
  for (int i = 0; i < 5000; ++i) {
    const double x = std::exp(logx(rng));
    const long double ref = std::lgamma(static_cast<long double>(x));
    const double err = std::abs(ln_gamma(x) - static_cast<double>(ref));
    worst = std::max(worst, err / std::max(1.0, std::abs(static_cast<double>(ref))));
  }
  CHECK(worst < 1e-13);
}

TEST_CASE("ln_gamma difference equation") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.01, 50.0);
  for (int i = 0; i < 500; ++i) {
    const double x = u(rng);
    CHECK(std::abs(ln_gamma(x + 1.0) - ln_gamma(x) - std::log(x)) <
          1e-12 * std::max(1.0, std::abs(ln_gamma(x + 1.0))));
  }
}

TEST_CASE("Euler constant matches its limit definition") {
  const long double g = gamma_limit_oracle();
  CHECK(std::abs(static_cast<double>(g) - kEulerGamma) < 1e-12);
  CHECK(std::abs(kEulerGamma - 0.577215) < 1e-6);
}

TEST_CASE("digamma special values") {
  const double g = static_cast<double>(gamma_limit_oracle());
  CHECK(std::abs(digamma(1.0) + g) < 1e-12);
  CHECK(std::abs(digamma(2.0) - (1.0 - g)) < 1e-12);
  CHECK(std::abs(digamma(0.5) - (-g - 2.0 * std::log(2.0))) < 1e-12);
}

TEST_CASE("digamma against a shifted-recurrence oracle") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> logx(std::log(1e-3), std::log(1e6));
  for (int i = 0; i < 200; ++i) {
    const double x = std::exp(logx(rng));
    CHECK(std::abs(digamma(x) - digamma_shift_oracle(x)) <= 1e-12);
  }
}

TEST_CASE("digamma matches central differences of ln_gamma") {
  const double h = 1e-6;
  for (double x = 0.5; x <= 50.0; x += 0.37) {
    const double fd = (ln_gamma(x + h) - ln_gamma(x - h)) / (2 * h);
    CHECK(std::abs(digamma(x) - fd) < 1e-5);
  }
}

TEST_CASE("digamma recurrence and reflection") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.01, 0.99);
  for (int i = 0; i < 300; ++i) {
    const double x = u(rng);
    CHECK(std::abs(digamma(x + 1.0) - digamma(x) - 1.0 / x) < 1e-11 / x);
    const double refl = std::numbers::pi / std::tan(std::numbers::pi * x);
    CHECK(std::abs(digamma(1.0 - x) - digamma(x) - refl) < 1e-10 * (1.0 + std::abs(refl)));
  }
}

TEST_CASE("beta function values") {
  CHECK(std::abs(beta(1.0, 1.0) - 1.0) < 1e-14);
  CHECK(std::abs(beta(0.5, 0.5) - std::numbers::pi) < 1e-12);
  CHECK(std::abs(beta(2.0, 3.0) - 1.0 / 12.0) < 1e-15);
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.05, 20.0);
  for (int i = 0; i < 200; ++i) {
    const double a = u(rng), b = u(rng);
    const long double ref = std::exp(std::lgamma((long double)a) + std::lgamma((long double)b) -
                                     std::lgamma((long double)a + b));
    CHECK(std::abs(beta(a, b) / static_cast<double>(ref) - 1.0) < 1e-12);
    CHECK(beta(a, b) == beta(b, a));
  }
}

TEST_CASE("R constant values and symmetry") {
  CHECK(std::abs(r_constant(0.5, 0.5) - std::log(16.0)) < 1e-12);
  CHECK(std::abs(r_constant(1.0, 1.0)) < 1e-12);
  CHECK(std::abs(r_constant(1.0, 0.5) - 2.0 * std::log(2.0)) < 1e-12);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.05, 10.0);
  for (int i = 0; i < 100; ++i) {
    const double a = u(rng), b = u(rng);
    CHECK(r_constant(a, b) == r_constant(b, a));
  }
}

TEST_CASE("RealPos rejects non-positive and non-finite values") {
  CHECK_THROWS_AS(RealPos{0.0}, DomainError);
  CHECK_THROWS_AS(RealPos{-1.0}, DomainError);
  CHECK_THROWS_AS(RealPos{NAN}, DomainError);
  CHECK_THROWS_AS(RealPos{INFINITY}, DomainError);
  CHECK_THROWS_AS(ln_gamma(0.0), DomainError);
  CHECK_THROWS_AS(digamma(-0.5), DomainError);
}
