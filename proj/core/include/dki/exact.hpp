// SPDX-License-Identifier: Apache-2.0
//
// Exact rational counterparts of the binomial quantities in binmath.hpp.
// Every quantity below is rational whenever eps is, including the
// exponential bounds: 2^{n H(k/n)} = n^n / (k^k (n-k)^{n-k}) and
// 2^{-n T_eps(k/n)} = eps^k (1-eps)^{n-k}. These are the reference values the
// floating-point paths are tested against.

#pragma once

#include "dki/numeric.hpp"

namespace dki::exact {

[[nodiscard]] BigCount binomial(int n, int k);

/// C(n,k) eps^k (1-eps)^{n-k}.
[[nodiscard]] Rational binom_pmf(int n, int k, const Rational& eps);

/// sum_{j=k}^{n}; k may be n+1 (empty tail).
[[nodiscard]] Rational binom_upper_tail(int n, int k, const Rational& eps);

/// sum_{j=0}^{k}; k may be -1 (empty sum).
[[nodiscard]] Rational binom_cdf(int n, int k, const Rational& eps);

/// 2^{n H(k/n)} = n^n / (k^k (n-k)^{n-k}), with 0^0 = 1.
[[nodiscard]] Rational entropy_power(int n, int k);

/// 2^{-n T_eps(k/n)} = eps^k (1-eps)^{n-k}.
[[nodiscard]] Rational tangent_power(int n, int k, const Rational& eps);

struct Sandwich {
  Rational lower;
  Rational upper;
};

/// Same domains and formulas as the floating-point bounds in binmath.hpp.
[[nodiscard]] Sandwich binom_tail_sandwich(int n, int k, const Rational& eps);
[[nodiscard]] Rational binom_upper_tail_bound(int n, int k, const Rational& eps);
[[nodiscard]] Rational binom_cdf_bound(int n, int k, const Rational& eps);

}  // namespace dki::exact
