#pragma once

#include <cstddef>
#include <vector>

#include "hyperlog/special_fn.hpp"

namespace hyperlog {

/// Parameters (a, b, c) of the Gauss function 2F1(a, b; c; x), all positive.
class HypParams {
 public:
  HypParams(RealPos a, RealPos b, RealPos c) : a_(a), b_(b), c_(c) {}

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  double c() const noexcept { return c_; }

  /// c = a + b up to 1e-14. Float-level equality is not meaningful here.
  bool zero_balanced() const noexcept;

  /// (a + 1, b + 1, c + 1), the parameters of the derivative series.
  HypParams shifted() const { return {a_ + 1.0, b_ + 1.0, c_ + 1.0}; }

 private:
  RealPos a_;
  RealPos b_;
  RealPos c_;
};

enum class EvalMethod { Series, EulerTransformed, Near1Asymptotic };

const char* to_string(EvalMethod method);

struct EvalResult {
  double value = 0.0;
  double abs_err_estimate = 0.0;
  EvalMethod method = EvalMethod::Series;
  std::size_t terms = 0;
};

/// Finite run of Maclaurin coefficients, indices 0..N.
struct CoeffSeq {
  std::vector<double> coeffs;

  std::size_t size() const noexcept { return coeffs.size(); }
  double operator[](std::size_t n) const { return coeffs[n]; }
};

/// Zero-balanced arguments above this use the logarithmic expansion at x = 1.
inline constexpr double kNearOneCrossover = 1.0 - 1e-4;

/// Series stopping rule: this many consecutive terms below kSeriesRelTol of
/// the partial sum.
inline constexpr double kSeriesRelTol = 1e-16;
inline constexpr int kSeriesQuietTerms = 3;
inline constexpr std::size_t kSeriesTermCap = 2'000'000;

/// Rising factorial a (a+1) ... (a+n-1); (a)_0 = 1. Overflow yields +inf.
double pochhammer(double a, int n);

/// 2F1(a, b; c; x) on [0, 1).
///
/// Routing: zero-balanced parameters with x > kNearOneCrossover use the
/// convergent logarithmic expansion about x = 1; c < a + b with x > 1/2 goes
/// through the Euler transformation; everything else sums the Maclaurin
/// series directly. Throws DomainError outside [0, 1) and ConvergenceError
/// when the term cap is hit.
EvalResult f21(const HypParams& p, double x);

/// Same as f21(p, x) but with 1 - x supplied by the caller, which keeps
/// log(1 - x) accurate when x is within a few ulps of 1.
EvalResult f21(const HypParams& p, double x, double one_minus_x);

/// Gauss sum F(a, b; c; 1) for a + b < c.
double f21_at_1(const HypParams& p);

/// d/dx 2F1(a, b; c; x) = (ab/c) 2F1(a+1, b+1; c+1; x).
EvalResult f21_derivative(const HypParams& p, double x);
EvalResult f21_derivative(const HypParams& p, double x, double one_minus_x);

/// Maclaurin coefficients t_0..t_N of 2F1 by the term-ratio recurrence.
CoeffSeq series_coeffs(const HypParams& p, int n_max);

/// Maclaurin coefficients a_0..a_N of F'(x)/F(x), by formal division of the
/// derivative series by the function series.
CoeffSeq ratio_coeffs(const HypParams& p, int n_max);

/// Zero-balanced parameters only: the logarithmic expansion about x = 1,
/// evaluated at any 0 < 1 - x < 1 regardless of the crossover. Converges
/// geometrically in 1 - x.
EvalResult f21_log_expansion(const HypParams& p, double one_minus_x);

/// Leading-order zero-balanced value (R(a,b) - log(1 - x)) / B(a,b).
double near1_leading(const HypParams& p, double one_minus_x);

/// Empirical constant K with |F - near1_leading| <= K (1-x) |log(1-x)|,
/// calibrated as twice the worst observed ratio on 1-x in [1e-4, 1e-3].
/// Requires zero-balanced parameters.
double leading_order_error_constant(const HypParams& p);

}  // namespace hyperlog
