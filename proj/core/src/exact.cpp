// SPDX-License-Identifier: Apache-2.0

#include "dki/exact.hpp"

#include <string>

namespace dki::exact {

namespace {

void require_probability(const Rational& eps) {
  if (eps < 0 || eps > 1) throw DomainError("eps must lie in [0, 1], got " + to_string(eps));
}

void require_open_unit(const Rational& eps) {
  if (eps <= 0 || eps >= 1) throw DomainError("bound requires 0 < eps < 1");
}

}  // namespace

BigCount binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigCount c = 1;
  for (int i = 0; i < k; ++i) c = c * (n - i) / (i + 1);
  return c;
}

Rational binom_pmf(int n, int k, const Rational& eps) {
  require_probability(eps);
  if (k < 0 || k > n) throw DomainError("index k outside [0, n]");
  return Rational(binomial(n, k)) * tangent_power(n, k, eps);
}

Rational binom_upper_tail(int n, int k, const Rational& eps) {
  require_probability(eps);
  if (k < 0 || k > n + 1) throw DomainError("index k outside [0, n+1]");
  Rational sum = 0;
  for (int j = k; j <= n; ++j) sum += binom_pmf(n, j, eps);
  return sum;
}

Rational binom_cdf(int n, int k, const Rational& eps) {
  require_probability(eps);
  if (k < -1 || k > n) throw DomainError("index k outside [-1, n]");
  Rational sum = 0;
  for (int j = 0; j <= k; ++j) sum += binom_pmf(n, j, eps);
  return sum;
}

Rational entropy_power(int n, int k) {
  if (k < 0 || k > n) throw DomainError("index k outside [0, n]");
  const auto un = static_cast<unsigned>(n);
  const auto uk = static_cast<unsigned>(k);
  const BigCount num = pow(BigCount(n), un);
  const BigCount den = pow(BigCount(k), uk) * pow(BigCount(n - k), un - uk);
  return Rational(num, den);
}

Rational tangent_power(int n, int k, const Rational& eps) {
  if (k < 0 || k > n) throw DomainError("index k outside [0, n]");
  return pow(eps, static_cast<unsigned>(k)) * pow(Rational(1) - eps, static_cast<unsigned>(n - k));
}

Sandwich binom_tail_sandwich(int n, int k, const Rational& eps) {
  require_open_unit(eps);
  if (Rational(k, n) <= eps || k >= n) throw DomainError("sandwich requires eps < k/n < 1");
  const Rational single = binom_pmf(n, k, eps);
  const Rational a = Rational(k) * (1 - eps);
  const Rational coefficient = a / (a - Rational(n - k) * eps);
  return {single, single * coefficient};
}

Rational binom_upper_tail_bound(int n, int k, const Rational& eps) {
  require_open_unit(eps);
  if (Rational(k, n) <= eps || k >= n) throw DomainError("tail bound requires eps < k/n < 1");
  const Rational a = Rational(k) * (1 - eps);
  const Rational coefficient = a / (a - Rational(n - k) * eps);
  return coefficient * entropy_power(n, k) * tangent_power(n, k, eps);
}

Rational binom_cdf_bound(int n, int k, const Rational& eps) {
  require_open_unit(eps);
  if (k < 0 || k >= n || Rational(k, n) >= eps) throw DomainError("CDF bound requires k < n and k/n < eps");
  const Rational coefficient = eps * Rational(n - k) / (eps * n - k);
  return coefficient * entropy_power(n, k) * tangent_power(n, k, eps);
}

}  // namespace dki::exact
