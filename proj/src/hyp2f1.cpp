#include "hyperlog/hyp2f1.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hyperlog/errors.hpp"

namespace hyperlog {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kExtEps =
    static_cast<double>(std::numeric_limits<long double>::epsilon());

// Neumaier compensated summation.
class CompensatedSum {
 public:
  explicit CompensatedSum(double init = 0.0) : sum_(init) {}

  void add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }

  double value() const { return sum_ + comp_; }

 private:
  double sum_;
  double comp_ = 0.0;
};

struct SeriesOutcome {
  double value;
  double abs_err;
  std::size_t terms;
};

// Rounding contribution for a sum of n terms whose magnitudes add to abs_sum.
// Each term carries the accumulated error of the ratio recurrence, which
// grows like sqrt(n) ulps in practice.
double rounding_bound(std::size_t n, double abs_sum) {
  return kEps * (4.0 + std::sqrt(3.0 * static_cast<double>(n))) * abs_sum;
}

// Maclaurin series sum_n (a)_n (b)_n / ((c)_n n!) x^n for 0 <= x <= 1.
// a and b may be negative (Euler-transformed parameters); c > 0.
SeriesOutcome gauss_series(double a, double b, double c, double x) {
  CompensatedSum acc(1.0);
  double term = 1.0;
  double abs_sum = 1.0;
  double ratio = 0.0;
  int quiet = 0;
  std::size_t n = 0;
  while (true) {
    const double nn = static_cast<double>(n);
    ratio = (a + nn) * (b + nn) / ((c + nn) * (nn + 1.0)) * x;
    term *= ratio;
    ++n;
    acc.add(term);
    abs_sum += std::abs(term);
    // Quiet once the geometric bound on the remaining tail is negligible.
    const double rho = std::max(std::abs(ratio), x);
    if (std::abs(term) * rho <=
        kSeriesRelTol * std::abs(acc.value()) * (1.0 - rho)) {
      if (++quiet >= kSeriesQuietTerms) break;
    } else {
      quiet = 0;
    }
    if (n >= kSeriesTermCap) {
      throw ConvergenceError("2F1 series exceeded " +
                                 std::to_string(kSeriesTermCap) + " terms",
                             acc.value(), n);
    }
  }
  // The term ratio tends to x from below once n is past the parameters, so
  // the remaining tail is bounded by a geometric series.
  const double rho = std::max(std::abs(ratio), x);
  const double tail = rho < 1.0 ? std::abs(term) * rho / (1.0 - rho)
                                : std::abs(term) * static_cast<double>(n);
  return {acc.value(), tail + rounding_bound(n, abs_sum), n};
}

// Zero-balanced logarithmic expansion about x = 1, in w = 1 - x:
//   B(a,b) F(a,b;a+b;x) = sum_n [(a)_n (b)_n / n!^2] (D_n - log w) w^n,
//   D_n = 2 psi(n+1) - psi(a+n) - psi(b+n), D_0 = R(a,b).
// With derivative=true, returns B(a,b) dF/dx instead.
SeriesOutcome zero_balanced_log_series(double a, double b, double w,
                                       bool derivative) {
  const double log_w = std::log(w);
  double coef = 1.0;
  double d = r_constant(a, b);
  double w_pow = derivative ? 1.0 / w : 1.0;  // w^n or w^(n-1)
  CompensatedSum acc;
  double abs_sum = 0.0;
  double term = 0.0;
  double prev_term = 0.0;
  int quiet = 0;
  std::size_t n = 0;
  constexpr std::size_t cap = 100'000;
  while (true) {
    const double nn = static_cast<double>(n);
    prev_term = term;
    term = derivative ? coef * w_pow * (1.0 - nn * (d - log_w))
                      : coef * w_pow * (d - log_w);
    acc.add(term);
    abs_sum += std::abs(term);
    if (std::abs(term) <= kSeriesRelTol * std::abs(acc.value())) {
      if (++quiet >= kSeriesQuietTerms) break;
    } else {
      quiet = 0;
    }
    if (++n >= cap) {
      throw ConvergenceError("zero-balanced expansion did not converge",
                             acc.value(), n);
    }
    coef *= (a + nn) * (b + nn) / ((nn + 1.0) * (nn + 1.0));
    d += 2.0 / (nn + 1.0) - 1.0 / (a + nn) - 1.0 / (b + nn);
    w_pow *= w;
  }
  double tail = 0.0;
  if (prev_term != 0.0) {
    const double rho = std::abs(term / prev_term);
    tail = rho < 1.0 ? std::abs(term) * rho / (1.0 - rho)
                     : std::abs(term) * static_cast<double>(n);
  }
  // psi and log contribute a few ulps of the leading bracket.
  const double leading =
      std::abs(r_constant(a, b)) + std::abs(log_w) + (derivative ? 1.0 / w : 1.0);
  return {acc.value(), tail + rounding_bound(n, abs_sum) + 16.0 * kEps * leading,
          n};
}

void check_argument(double x, double one_minus_x) {
  if (!(x >= 0.0) || !(one_minus_x > 0.0) || !(one_minus_x <= 1.0) ||
      std::abs((x + one_minus_x) - 1.0) > 4.0 * kEps) {
    throw DomainError("2F1 argument must satisfy 0 <= x < 1, got x=" +
                      std::to_string(x));
  }
}

EvalResult scaled_expansion(const HypParams& p, double w, bool derivative) {
  const double beta_ab = beta(p.a(), p.b());
  const auto s = zero_balanced_log_series(p.a(), p.b(), w, derivative);
  const double value = s.value / beta_ab;
  return {value, s.abs_err / beta_ab + 4.0 * kEps * std::abs(value),
          EvalMethod::Near1Asymptotic, s.terms};
}

}  // namespace

bool HypParams::zero_balanced() const noexcept {
  return std::abs(a() + b() - c()) <= 1e-14;
}

const char* to_string(EvalMethod method) {
  switch (method) {
    case EvalMethod::Series:
      return "series";
    case EvalMethod::EulerTransformed:
      return "euler_transformed";
    case EvalMethod::Near1Asymptotic:
      return "near1_asymptotic";
  }
  return "unknown";
}

double pochhammer(double a, int n) {
  if (n < 0) throw DomainError("pochhammer: negative n");
  double prod = 1.0;
  for (int k = 0; k < n; ++k) prod *= a + static_cast<double>(k);
  return prod;
}

EvalResult f21(const HypParams& p, double x) { return f21(p, x, 1.0 - x); }

EvalResult f21(const HypParams& p, double x, double one_minus_x) {
  check_argument(x, one_minus_x);
  if (x == 0.0) return {1.0, 0.0, EvalMethod::Series, 1};

  if (p.zero_balanced() && x > kNearOneCrossover) {
    return scaled_expansion(p, one_minus_x, false);
  }

  const double excess = p.c() - p.a() - p.b();
  if (!p.zero_balanced() && excess < 0.0 && x > 0.5) {
    const double factor = std::pow(one_minus_x, excess);
    const auto s = gauss_series(p.c() - p.a(), p.c() - p.b(), p.c(), x);
    const double value = factor * s.value;
    const double pow_err =
        4.0 * kEps * (1.0 + std::abs(excess * std::log(one_minus_x)));
    return {value, factor * s.abs_err + pow_err * std::abs(value),
            EvalMethod::EulerTransformed, s.terms};
  }

  const auto s = gauss_series(p.a(), p.b(), p.c(), x);
  return {s.value, s.abs_err, EvalMethod::Series, s.terms};
}

double f21_at_1(const HypParams& p) {
  const double excess = p.c() - p.a() - p.b();
  if (p.zero_balanced() || excess < 0.0) {
    throw DomainError("F(a,b;c;1) is finite only for a + b < c");
  }
  return std::exp(ln_gamma(p.c()) + ln_gamma(excess) -
                  ln_gamma(p.c() - p.a()) - ln_gamma(p.c() - p.b()));
}

EvalResult f21_derivative(const HypParams& p, double x) {
  return f21_derivative(p, x, 1.0 - x);
}

EvalResult f21_derivative(const HypParams& p, double x, double one_minus_x) {
  check_argument(x, one_minus_x);
  if (p.zero_balanced() && x > kNearOneCrossover) {
    return scaled_expansion(p, one_minus_x, true);
  }
  const double scale = p.a() * p.b() / p.c();
  const auto r = f21(p.shifted(), x, one_minus_x);
  const double value = scale * r.value;
  return {value, scale * r.abs_err_estimate + 2.0 * kEps * std::abs(value), r.method,
          r.terms};
}

CoeffSeq series_coeffs(const HypParams& p, int n_max) {
  if (n_max < 1) throw DomainError("series_coeffs: N must be >= 1");
  CoeffSeq out;
  out.coeffs.reserve(static_cast<std::size_t>(n_max) + 1);
  long double t = 1.0L;
  out.coeffs.push_back(1.0);
  for (int n = 0; n < n_max; ++n) {
    const long double nn = n;
    t *= (p.a() + nn) * (p.b() + nn) / ((p.c() + nn) * (nn + 1.0L));
    out.coeffs.push_back(static_cast<double>(t));
  }
  return out;
}

CoeffSeq ratio_coeffs(const HypParams& p, int n_max) {
  if (n_max < 1) throw DomainError("ratio_coeffs: N must be >= 1");
  const auto n = static_cast<std::size_t>(n_max);

  // Function coefficients t_0..t_{N+1}; derivative coefficients (k+1) t_{k+1}.
  std::vector<long double> t(n + 2);
  t[0] = 1.0L;
  for (std::size_t k = 0; k + 1 < t.size(); ++k) {
    const long double kk = static_cast<long double>(k);
    t[k + 1] = t[k] * (p.a() + kk) * (p.b() + kk) / ((p.c() + kk) * (kk + 1.0L));
  }

  // t_0 = 1, so the triangular recurrence needs no pivot.
  std::vector<long double> q(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    long double acc = static_cast<long double>(k + 1) * t[k + 1];
    for (std::size_t j = 1; j <= k; ++j) acc -= t[j] * q[k - j];
    q[k] = acc;
  }

  CoeffSeq out;
  out.coeffs.assign(q.begin(), q.end());
  return out;
}

EvalResult f21_log_expansion(const HypParams& p, double one_minus_x) {
  if (!p.zero_balanced()) {
    throw DomainError("logarithmic expansion needs zero-balanced parameters");
  }
  check_argument(1.0 - one_minus_x, one_minus_x);
  if (!(one_minus_x < 1.0)) throw DomainError("expansion needs x > 0");
  return scaled_expansion(p, one_minus_x, false);
}

double near1_leading(const HypParams& p, double one_minus_x) {
  if (!(one_minus_x > 0.0) || !(one_minus_x <= 1.0)) {
    throw DomainError("near1_leading: need 0 < 1 - x <= 1");
  }
  return (r_constant(p.a(), p.b()) - std::log(one_minus_x)) / beta(p.a(), p.b());
}

double leading_order_error_constant(const HypParams& p) {
  if (!p.zero_balanced()) {
    throw DomainError("leading-order constant needs zero-balanced parameters");
  }
  constexpr int samples = 33;
  double worst = 0.0;
  for (int j = 0; j < samples; ++j) {
    const double w = std::pow(10.0, -3.0 - static_cast<double>(j) / (samples - 1));
    const auto s = gauss_series(p.a(), p.b(), p.c(), 1.0 - w);
    const double mismatch = std::abs(s.value - near1_leading(p, w));
    worst = std::max(worst, mismatch / (w * std::abs(std::log(w))));
  }
  return 2.0 * worst;
}

}  // namespace hyperlog
