// SPDX-License-Identifier: Apache-2.0

#include "dki/binmath.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace dki {

namespace {

constexpr double kLn2 = std::numbers::ln2;
constexpr double kLog2Pi = 2.6514961294723187;  // log2(2 pi)
constexpr double kLnSqrt2Pi = 0.91893853320467274178;

// x log2 x with 0 log 0 = 0.
double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

// ln(n!) - [(n + 1/2) ln n - n + ln sqrt(2 pi)], the Stirling remainder.
double stirlerr(double n) {
  constexpr double s0 = 1.0 / 12.0;
  constexpr double s1 = 1.0 / 360.0;
  constexpr double s2 = 1.0 / 1260.0;
  constexpr double s3 = 1.0 / 1680.0;
  constexpr double s4 = 1.0 / 1188.0;
  if (n <= 15.0) {
    const long double ln = static_cast<long double>(n);
    return static_cast<double>(std::lgamma(ln + 1.0L) - (ln + 0.5L) * std::log(ln) + ln -
                               static_cast<long double>(kLnSqrt2Pi));
  }
  const double nn = n * n;
  return (s0 - (s1 - (s2 - (s3 - s4 / nn) / nn) / nn) / nn) / n;
}

// x ln(x / np) + np - x without cancellation.
double bd0(double x, double np) {
  if (std::fabs(x - np) < 0.1 * (x + np)) {
    double v = (x - np) / (x + np);
    double s = (x - np) * v;
    double ej = 2.0 * x * v;
    v *= v;
    for (int j = 1; j < 1000; ++j) {
      ej *= v;
      const double s1 = s + ej / (2 * j + 1);
      if (s1 == s) return s1;
      s = s1;
    }
    return s;
  }
  return x * std::log(x / np) + np - x;
}

// Natural log of the binomial pmf with full relative precision (saddle point form).
double ln_binom_pmf(int n, int k, double p) {
  const double q = 1.0 - p;
  if (p == 0.0) return k == 0 ? 0.0 : -INFINITY;
  if (q == 0.0) return k == n ? 0.0 : -INFINITY;
  if (k == 0) return n * std::log1p(-p);
  if (k == n) return n * std::log(p);
  const double dn = n;
  const double dk = k;
  const double dm = n - k;
  const double lc = stirlerr(dn) - stirlerr(dk) - stirlerr(dm) - bd0(dk, dn * p) - bd0(dm, dn * q);
  return lc + 0.5 * std::log(dn / (2.0 * std::numbers::pi * dk * dm));
}

// Sum of 2^{terms} with compensated accumulation around the largest term.
LogProb log_sum(const std::vector<double>& log2_terms) {
  if (log2_terms.empty()) return LogProb::zero();
  const double top = *std::max_element(log2_terms.begin(), log2_terms.end());
  if (std::isinf(top)) return LogProb::zero();
  double sum = 0.0;
  double carry = 0.0;
  for (double t : log2_terms) {
    const double x = std::exp2(t - top);
    const double s = sum + x;
    carry += std::fabs(sum) >= std::fabs(x) ? (sum - s) + x : (x - s) + sum;
    sum = s;
  }
  return LogProb::from_log2(top + std::log2(sum + carry));
}

void require_index(int n, int k) {
  if (n < 0 || k < 0 || k > n) {
    throw DomainError("index k=" + std::to_string(k) + " outside [0, " + std::to_string(n) + "]");
  }
}

// Exact comparison of k/n against a double probability.
int compare_fraction(int k, int n, Probability eps) {
  const Rational lhs(k, n);
  const Rational rhs = exact_rational(eps.value());
  return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

constexpr double kNegligibleBits = 90.0;

}  // namespace

double binary_entropy(Probability p) {
  const double x = p.value();
  return -xlog2x(x) - xlog2x(1.0 - x);
}

double qary_entropy(Probability p, int q) {
  if (q < 2) throw DomainError("q-ary entropy requires q >= 2");
  const double x = p.value();
  const double lq = std::log2(static_cast<double>(q));
  return (x * std::log2(static_cast<double>(q - 1)) - xlog2x(x) - xlog2x(1.0 - x)) / lq;
}

double tangent_line(Probability eps, Probability p) {
  const double e = eps.value();
  if (e <= 0.0 || e >= 1.0) throw DomainError("tangent line requires 0 < eps < 1");
  const double x = p.value();
  return -x * std::log2(e) - (1.0 - x) * std::log1p(-e) / kLn2;
}

double tangent_entropy_gap(Probability eps, Probability p) {
  // Relative-entropy form: p log(p/eps) + (1-p) log((1-p)/(1-eps)); no cancellation near p = eps.
  const double e = eps.value();
  if (e <= 0.0 || e >= 1.0) throw DomainError("tangent line requires 0 < eps < 1");
  const double x = p.value();
  const double a = x > 0.0 ? x * std::log2(x / e) : 0.0;
  const double b = x < 1.0 ? (1.0 - x) * std::log2((1.0 - x) / (1.0 - e)) : 0.0;
  return std::max(0.0, a + b);
}

BigCount ball_volume(int n, int r, int q) {
  if (q < 2) throw DomainError("alphabet size must be at least 2");
  if (n < 0 || r < 0 || r > n) {
    throw DomainError("ball radius r=" + std::to_string(r) + " outside [0, n=" + std::to_string(n) + "]");
  }
  BigCount term = 1;  // C(n, i) (q-1)^i
  BigCount total = 1;
  for (int i = 0; i < r; ++i) {
    term = term * (n - i) * (q - 1) / (i + 1);
    total += term;
  }
  return total;
}

double stirling_residual_log2(int n, int k) {
  if (k < 1 || n - k < 1) throw DomainError("Stirling residual requires 1 <= k < n");
  const double dk = k;
  const double dn = n;
  const double ln_exp = -1.0 / (12.0 * dk) - 1.0 / (dn - dk);
  return ln_exp / kLn2 - 0.5 * (kLog2Pi + std::log2(dk) + std::log2(1.0 - dk / dn));
}

double stirling_residual_asymptotic_log2(int n, const Rational& eps) {
  const auto k = floor_mul(n, eps);
  if (k < 1 || n - k < 1) throw DomainError("Stirling residual requires 1 <= floor(n eps) < n");
  const double e = to_double(eps);
  if (!(e > 0.0 && e < 1.0)) throw DomainError("Stirling residual requires 0 < eps < 1");
  const double dk = static_cast<double>(k);
  const double log2_k_eps = -0.5 * (kLog2Pi + std::log2(1.0 - e));
  const double ln_exp = -1.0 / (12.0 * dk) - 1.0 / (n - dk);
  return log2_k_eps - 0.5 * std::log2(dk) + ln_exp / kLn2;
}

LogProb ball_volume_lower_bound(int n, const Rational& eps, int q) {
  if (q < 2) throw DomainError("alphabet size must be at least 2");
  if (n < 2) throw DomainError("volume lower bound requires n >= 2");
  const auto k = floor_mul(n, eps);
  if (k < 1) throw DomainError("volume lower bound requires floor(n eps) >= 1");
  if (n - k < 1) throw DomainError("volume lower bound requires n - floor(n eps) >= 1");
  if (Rational(k, n) > Rational(q - 1, q)) {
    throw DomainError("volume lower bound requires floor(n eps)/n <= 1 - 1/q");
  }
  const double frac = static_cast<double>(k) / n;
  const double nhq_bits = n * qary_entropy(Probability(frac), q) * std::log2(static_cast<double>(q));
  return LogProb::from_log2(nhq_bits + stirling_residual_log2(n, static_cast<int>(k)));
}

LogProb ball_volume_upper_bound(int n, const Rational& eps) {
  if (eps <= 0 || eps > Rational(1, 2)) throw DomainError("volume upper bound requires 0 < eps <= 1/2");
  const auto k = floor_mul(n, eps);
  if (k < 1 || k >= n) throw DomainError("volume upper bound requires n > floor(n eps) >= 1");
  return LogProb::from_log2(n * binary_entropy(Probability(eps)));
}

LogProb binom_pmf(int n, int k, Probability eps) {
  require_index(n, k);
  return LogProb::from_log2(ln_binom_pmf(n, k, eps.value()) / kLn2);
}

LogProb binom_upper_tail(int n, int k, Probability eps) {
  require_index(n, k);
  if (k == 0) return LogProb::one();
  const double p = eps.value();
  const int mode = std::min(n, static_cast<int>(std::floor((n + 1) * p)));
  std::vector<double> terms;
  double top = -INFINITY;
  for (int j = k; j <= n; ++j) {
    const double t = ln_binom_pmf(n, j, p) / kLn2;
    terms.push_back(t);
    top = std::max(top, t);
    if (j > mode && t < top - kNegligibleBits) break;
  }
  return log_sum(terms);
}

LogProb binom_cdf(int n, int k, Probability eps) {
  require_index(n, k);
  if (k == n) return LogProb::one();
  const double p = eps.value();
  const int mode = std::min(n, static_cast<int>(std::floor((n + 1) * p)));
  std::vector<double> terms;
  double top = -INFINITY;
  for (int j = k; j >= 0; --j) {
    const double t = ln_binom_pmf(n, j, p) / kLn2;
    terms.push_back(t);
    top = std::max(top, t);
    if (j < mode && t < top - kNegligibleBits) break;
  }
  return log_sum(terms);
}

namespace {

void require_upper_tail_domain(int n, int k, Probability eps) {
  const double e = eps.value();
  if (!(e > 0.0 && e < 1.0)) throw DomainError("tail bound requires 0 < eps < 1");
  require_index(n, k);
  if (compare_fraction(k, n, eps) <= 0) throw DomainError("tail bound requires k/n > eps");
  if (k >= n) throw DomainError("tail bound requires k/n < 1");
}

// log2 of the geometric-series coefficient k(1-eps) / (k(1-eps) - (n-k) eps).
double upper_coefficient_log2(int n, int k, double e) {
  const double num = k * (1.0 - e);
  return std::log2(num) - std::log2(num - (n - k) * e);
}

}  // namespace

TailSandwich binom_tail_sandwich(int n, int k, Probability eps) {
  require_upper_tail_domain(n, k, eps);
  const LogProb single = binom_pmf(n, k, eps);
  return {single, single * LogProb::from_log2(upper_coefficient_log2(n, k, eps.value()))};
}

LogProb binom_upper_tail_bound(int n, int k, Probability eps) {
  require_upper_tail_domain(n, k, eps);
  const double frac = static_cast<double>(k) / n;
  const double exponent = -n * tangent_entropy_gap(eps, Probability(frac));
  return LogProb::from_log2(upper_coefficient_log2(n, k, eps.value()) + exponent);
}

LogProb binom_cdf_bound(int n, int k, Probability eps) {
  const double e = eps.value();
  if (!(e > 0.0 && e < 1.0)) throw DomainError("CDF bound requires 0 < eps < 1");
  require_index(n, k);
  if (k >= n) throw DomainError("CDF bound requires k < n");
  if (compare_fraction(k, n, eps) >= 0) throw DomainError("CDF bound requires k/n < eps");
  const double frac = static_cast<double>(k) / n;
  const double coeff = std::log2(e * (n - k)) - std::log2(e * n - k);
  const double exponent = -n * tangent_entropy_gap(eps, Probability(frac));
  return LogProb::from_log2(coeff + exponent);
}

Probability inverse_binary_entropy(double h) {
  if (!(h >= 0.0 && h <= 1.0)) throw DomainError("inverse entropy requires h in [0, 1]");
  if (h == 0.0) return Probability(0.0);
  if (h == 1.0) return Probability(0.5);
  double lo = 0.0;
  double hi = 0.5;
  // H is increasing on [0, 1/2]; bisect until the bracket stops shrinking.
  while (hi - lo > 1e-16) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (binary_entropy(Probability(mid)) < h) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return Probability(0.5 * (lo + hi));
}

ErrorExponent error_exponent(double rate, Probability eps) {
  const double e = eps.value();
  if (!(e > 0.0 && e < 0.5)) throw DomainError("error exponent requires 0 < eps < 1/2");
  const double capacity = 1.0 - binary_entropy(eps);
  if (!(rate >= 0.0)) throw DomainError("error exponent requires R >= 0");
  if (rate > capacity + 1e-12) {
    throw DomainError("rate " + format_double(rate) + " exceeds capacity " + format_double(capacity));
  }
  ErrorExponent out;
  out.rate = rate;
  out.critical = std::sqrt(e) / (std::sqrt(e) + std::sqrt(1.0 - e));
  out.delta = std::max(e, inverse_binary_entropy(std::clamp(1.0 - rate, 0.0, 1.0)).value());
  if (out.delta <= out.critical) {
    out.regime = ExponentRegime::kSphere;
    out.value = tangent_entropy_gap(eps, Probability(out.delta));
  } else {
    out.regime = ExponentRegime::kStraightLine;
    out.value = 1.0 - rate - 2.0 * std::log2(std::sqrt(e) + std::sqrt(1.0 - e));
  }
  return out;
}

}  // namespace dki
