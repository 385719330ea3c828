#include "hyperlog/logtype.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "hyperlog/analysis.hpp"
#include "hyperlog/errors.hpp"

namespace hyperlog {

namespace {

struct Logistic {
  double x;
  double one_minus_x;
};

// e^t / (1 + e^t) and its complement, both without cancellation.
Logistic logistic(double t) {
  if (t >= 0.0) {
    const double e = std::exp(-t);
    return {1.0 / (1.0 + e), e / (1.0 + e)};
  }
  const double e = std::exp(t);
  return {e / (1.0 + e), 1.0 / (1.0 + e)};
}

// Evaluates the branch on the correct side of `breakpoint`; inside the
// branch window both neighbours are computed and must agree.
template <class Left, class Right>
double guarded_branch(double x, double breakpoint, Left left, Right right,
                      const char* what) {
  const bool use_left = x <= breakpoint;
  if (std::abs(x - breakpoint) <= kBranchWindow) {
    const double l = left();
    const double r = right();
    if (!(std::abs(l - r) <= kBranchAgreement)) {
      throw ContractError(std::string(what) + ": branches disagree by " +
                          std::to_string(std::abs(l - r)) +
                          " near breakpoint " + std::to_string(breakpoint));
    }
    return use_left ? l : r;
  }
  return use_left ? left() : right();
}

void require_unit_open(double x, const char* what) {
  if (!(x > 0.0 && x < 1.0)) {
    throw DomainError(std::string(what) + ": argument must lie in (0, 1), got " +
                      std::to_string(x));
  }
}

// Ratio pieces shared by T_fn and t_fn.
struct PowerOddsValues {
  double g1;  // g(s/(1+s))
  double ga;  // g(s^a/(1+s^a))
  double gb;  // g(s^b/(1+s^b))
};

PowerOddsValues power_odds_values(const ZeroBalancedPair& pair,
                                  const PhiExponents& e, double s) {
  const double log_s = std::log(s);
  return {g_logistic(pair, log_s), g_logistic(pair, e.a() * log_s),
          g_logistic(pair, e.b() * log_s)};
}

void check_power_odds_args(double s, double gamma_root) {
  if (!(gamma_root > 0.0) || !std::isfinite(gamma_root)) {
    throw ContractError("gamma root must be positive, got " +
                        std::to_string(gamma_root));
  }
  if (!(s > 0.0) || !std::isfinite(s)) {
    throw DomainError("s must be a finite positive real");
  }
}

}  // namespace

PhiExponents::PhiExponents(double a, double b) : a_(a), b_(b) {
  if (!(a > 0.0 && a <= 1.0 && b >= 1.0 && std::isfinite(b))) {
    throw DomainError("phi exponents need 0 < a <= 1 <= b");
  }
}

double phi(const PhiExponents& e, double t) {
  if (!(t >= 0.0)) throw DomainError("phi: negative argument");
  return t <= 1.0 ? std::pow(t, e.a()) : std::pow(t, e.b());
}

double phi_inv(const PhiExponents& e, double y) {
  if (!(y >= 0.0)) throw DomainError("phi_inv: negative argument");
  return y <= 1.0 ? std::pow(y, 1.0 / e.a()) : std::pow(y, 1.0 / e.b());
}

double g_fn(const ZeroBalancedPair& pair, double x) {
  return g_fn(pair, x, 1.0 - x);
}

double g_fn(const ZeroBalancedPair& pair, double x, double one_minus_x) {
  if (x == 0.0) return 0.0;
  return x * f21(pair.params(), x, one_minus_x).value;
}

double g_logistic(const ZeroBalancedPair& pair, double t) {
  const auto l = logistic(t);
  return g_fn(pair, l.x, l.one_minus_x);
}

OmegaValue omega(const ZeroBalancedPair& pair, double p, double r) {
  if (!(p > 0.0) || !std::isfinite(p)) throw DomainError("omega: need p > 0");
  if (!(r > 0.0) || !std::isfinite(r)) throw DomainError("omega: need r > 0");
  const double g = g_logistic(pair, p * std::log(r));
  return {std::pow(g, 1.0 / p), r < 1.0};
}

double f_ratio(const HypParams& p, double x, FRatio which) {
  return f_ratio(p, x, 1.0 - x, which);
}

double f_ratio(const HypParams& p, double x, double one_minus_x, FRatio which) {
  return f_ratio_eval(p, x, one_minus_x, which).value;
}

ValueWithError f_ratio_eval(const HypParams& p, double x, double one_minus_x,
                            FRatio which) {
  if (!p.zero_balanced()) throw DomainError("f_ratio needs c = a + b");
  require_unit_open(x, "f_ratio");
  const double log_omx =
      one_minus_x >= 0.5 ? std::log1p(-x) : std::log(one_minus_x);
  const auto r = f21(p, x, one_minus_x);
  const double f = r.value;
  const double err = r.abs_err_estimate;
  switch (which) {
    case FRatio::F1:
      return {(f - 1.0) / -log_omx, err / -log_omx};
    case FRatio::F2: {
      const double b = beta(p.a(), p.b());
      return {b * f + log_omx, b * err};
    }
    case FRatio::F3: {
      const double b = beta(p.a(), p.b());
      return {b * f + log_omx / x, b * err};
    }
    case FRatio::F4:
      return {x * f / -log_omx, x * err / -log_omx};
  }
  throw DomainError("f_ratio: unknown selector");
}

double s_fn(double x) {
  if (!(x >= 0.0)) throw DomainError("s_fn: need x >= 0");
  const double l = std::log1p(x);
  return l * std::log1p(l);
}

double r_fn(double x) {
  return x > 0.0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x));
}

double v_fn(double x) { return std::log1p(r_fn(x)); }

double w_fn(double x) {
  return std::exp(x) + v_fn(x) * (std::expm1(x) - r_fn(x));
}

double f1_bound_fn(double a, double p, double x) {
  if (!(a > 0.0 && a < 1.0)) throw DomainError("f1_bound_fn: need 0 < a < 1");
  if (!(p > 0.0)) throw DomainError("f1_bound_fn: need p > 0");
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("f1_bound_fn: need x > 0");

  auto small = [&] {
    return std::exp(p * (std::log(std::log1p(std::pow(x, a))) -
                         a * std::log(std::log1p(x))));
  };
  auto middle = [&] { return std::pow(std::log1p(x), p * (1.0 - a)); };
  auto large = [] { return 1.0; };

  constexpr double e_minus_1 = std::numbers::e - 1.0;
  if (x <= 1.0 + kBranchWindow) {
    return guarded_branch(x, 1.0, small, middle, "f1_bound_fn");
  }
  return guarded_branch(x, e_minus_1, middle, large, "f1_bound_fn");
}

double f2_bound_fn(double a, double x) {
  if (!(a > 0.0 && a < 1.0)) throw DomainError("f2_bound_fn: need 0 < a < 1");
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("f2_bound_fn: need x > 0");

  auto small = [&] {
    return std::exp(std::log(s_fn(std::pow(x, a))) - a * std::log(s_fn(x)));
  };
  auto middle = [&] { return std::pow(s_fn(x), 1.0 - a); };
  auto large = [] { return 1.0; };

  static const double x0 = x0_root();
  if (x <= 1.0 + kBranchWindow) {
    return guarded_branch(x, 1.0, small, middle, "f2_bound_fn");
  }
  return guarded_branch(x, x0, middle, large, "f2_bound_fn");
}

double T_fn(const ZeroBalancedPair& pair, const PhiExponents& e, double s,
            double gamma_root) {
  check_power_odds_args(s, gamma_root);
  const auto v = power_odds_values(pair, e, s);
  auto first = [&] { return v.ga / std::pow(v.g1, e.a()); };
  auto second = [&] { return v.gb / std::pow(v.g1, e.a()); };
  auto third = [&] { return v.gb / v.g1; };
  if (s <= 1.0 + kBranchWindow) {
    return guarded_branch(s, 1.0, first, second, "T_fn");
  }
  return guarded_branch(s, gamma_root, second, third, "T_fn");
}

double t_fn(const ZeroBalancedPair& pair, const PhiExponents& e, double s,
            double gamma_root) {
  check_power_odds_args(s, gamma_root);
  const auto v = power_odds_values(pair, e, s);
  auto first = [&] { return v.ga / std::pow(v.g1, e.a()); };
  auto second = [&] { return v.gb / std::pow(v.g1, e.a()); };
  auto third = [&] { return v.gb / std::pow(v.g1, e.b()); };
  if (s <= 1.0 + kBranchWindow) {
    return guarded_branch(s, 1.0, first, second, "t_fn");
  }
  return guarded_branch(s, gamma_root, second, third, "t_fn");
}

double h_xy(const ZeroBalancedPair& pair, double x, double y) {
  require_unit_open(x, "h_xy");
  require_unit_open(y, "h_xy");
  const double z = x + y - x * y;
  const double z_c = (1.0 - x) * (1.0 - y);
  return (g_fn(pair, x) + g_fn(pair, y)) / g_fn(pair, z, z_c);
}

double d_xy(const ZeroBalancedPair& pair, double x, double y) {
  require_unit_open(x, "d_xy");
  require_unit_open(y, "d_xy");
  const double z = x + y - x * y;
  const double z_c = (1.0 - x) * (1.0 - y);
  return g_fn(pair, x) + g_fn(pair, y) - g_fn(pair, z, z_c);
}

double big_g(const ZeroBalancedPair& pair, double u) {
  return std::log(g_logistic(pair, u));
}

InequalitySides bernoulli_lhs_rhs(double c, double t, const PhiExponents& e) {
  if (!(c >= 1.0) || !std::isfinite(c)) throw DomainError("bernoulli: need c >= 1");
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("bernoulli: need t > 0");
  const double l = std::log1p(t);
  return {std::log1p(c * phi(e, t)), c * std::max(std::pow(l, e.a()), e.b() * l)};
}

}  // namespace hyperlog
