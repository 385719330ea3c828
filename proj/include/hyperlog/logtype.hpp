#pragma once

#include "hyperlog/hyp2f1.hpp"
#include "hyperlog/special_fn.hpp"

namespace hyperlog {

/// Exponents of phi(t) = max{t^a, t^b} with 0 < a <= 1 <= b.
class PhiExponents {
 public:
  PhiExponents(double a, double b);

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }

 private:
  double a_;
  double b_;
};

/// Parameters (c, d) of the zero-balanced function F(c, d; c + d; x).
class ZeroBalancedPair {
 public:
  ZeroBalancedPair(RealPos c, RealPos d) : c_(c), d_(d) {}

  double c() const noexcept { return c_; }
  double d() const noexcept { return d_; }

  /// a0 = cd / (c + d), the leading coefficient of F'/F.
  double a0() const noexcept { return c_ * d_ / (c_ + d_); }
  /// h = a0^2 / (c + d + 1) = a0 - a1.
  double h() const noexcept { return a0() * a0() / (c_ + d_ + 1.0); }
  /// 1/c + 1/d >= 1, equivalently a0 <= 1.
  bool admissible() const noexcept { return c_ + d_ >= c_ * d_; }
  bool product_at_most_one() const noexcept { return c_ * d_ <= 1.0; }

  HypParams params() const { return {c_, d_, c_.value() + d_.value()}; }

 private:
  RealPos c_;
  RealPos d_;
};

/// phi(t) = max{t^a, t^b} for t >= 0.
double phi(const PhiExponents& e, double t);
/// phi^{-1}(y) = min{y^(1/a), y^(1/b)} for y >= 0.
double phi_inv(const PhiExponents& e, double y);

/// g(x) = x F(c, d; c + d; x) on [0, 1).
double g_fn(const ZeroBalancedPair& pair, double x);
double g_fn(const ZeroBalancedPair& pair, double x, double one_minus_x);

/// g(e^t / (1 + e^t)) evaluated without forming 1 - x by subtraction.
/// Most call sites have x = s^p / (1 + s^p), i.e. t = p log s.
double g_logistic(const ZeroBalancedPair& pair, double t);

struct OmegaValue {
  double value;
  /// False when r >= 1, outside the range where monotonicity in p is claimed.
  bool theorem_domain;
};

/// omega(c, d, p, r) = g(r^p / (1 + r^p))^(1/p). Requires p > 0 and r > 0.
OmegaValue omega(const ZeroBalancedPair& pair, double p, double r);

enum class FRatio { F1, F2, F3, F4 };

/// The zero-balanced combinations
///   f1 = (F - 1) / log(1/(1-x)),   f2 = B F + log(1 - x),
///   f3 = B F + log(1 - x) / x,     f4 = x F / log(1/(1-x))
/// for x in (0, 1).
double f_ratio(const HypParams& p, double x, FRatio which);
double f_ratio(const HypParams& p, double x, double one_minus_x, FRatio which);

struct ValueWithError {
  double value;
  double abs_err;  // propagated from the 2F1 error estimate
};

/// f_ratio plus an absolute error bound carried over from the 2F1 value.
ValueWithError f_ratio_eval(const HypParams& p, double x, double one_minus_x,
                            FRatio which);

/// s(x) = log(1+x) log(1 + log(1+x)), x >= 0.
double s_fn(double x);
/// r(x) = log(1 + e^x).
double r_fn(double x);
/// v(x) = r(r(x)).
double v_fn(double x);
/// w(x) = e^x + v(x) (e^x - 1 - r(x)).
double w_fn(double x);

/// log^p(1 + phi(x)) / phi(log^p(1 + x)) with phi exponents (a, 1),
/// 0 < a < 1, p > 0, x > 0. Breakpoints at x = 1 and x = e - 1.
double f1_bound_fn(double a, double p, double x);
/// s(phi(x)) / phi(s(x)) with phi exponents (a, 1). Breakpoints at x = 1 and
/// at the root x0 of s(x) = 1.
double f2_bound_fn(double a, double x);

/// Ratio g(phi(s)/(1+phi(s))) / max{g^a(s/(1+s)), g(s/(1+s))} in its
/// piecewise form, split at s = 1 and s = gamma where g(gamma/(1+gamma)) = 1.
double T_fn(const ZeroBalancedPair& pair, const PhiExponents& e, double s,
            double gamma_root);
/// Ratio g(phi(s)/(1+phi(s))) / phi(g(s/(1+s))), same split as T_fn.
double t_fn(const ZeroBalancedPair& pair, const PhiExponents& e, double s,
            double gamma_root);

/// (g(x) + g(y)) / g(x + y - xy) and its difference form, x, y in (0, 1).
double h_xy(const ZeroBalancedPair& pair, double x, double y);
double d_xy(const ZeroBalancedPair& pair, double x, double y);

/// G(u) = log g(e^u / (1 + e^u)).
double big_g(const ZeroBalancedPair& pair, double u);

struct InequalitySides {
  double lhs;
  double rhs;
};

/// log(1 + c phi(t)) versus c max{log^a(1+t), b log(1+t)}, c >= 1, t > 0.
InequalitySides bernoulli_lhs_rhs(double c, double t, const PhiExponents& e);

/// Distance from a breakpoint inside which both adjacent branches of a
/// piecewise function are evaluated and compared.
inline constexpr double kBranchWindow = 1e-9;
inline constexpr double kBranchAgreement = 1e-6;

}  // namespace hyperlog
