// SPDX-License-Identifier: Apache-2.0
//
// Entropies, the tangent line to the binary entropy, Hamming-ball volumes,
// binomial tails and the bounds on all of them.
//
// Conventions:
//  * logarithms are base 2 unless stated otherwise;
//  * 0 * log 0 = 0, so H(0) = H(1) = 0;
//  * anything of the form floor(n * x) takes x as an exact Rational.

#pragma once

#include "dki/numeric.hpp"

namespace dki {

/// H(p) = -p log p - (1-p) log(1-p).
[[nodiscard]] double binary_entropy(Probability p);

/// H_q(p) = p log_q(q-1) - p log_q p - (1-p) log_q(1-p). Throws for q < 2.
[[nodiscard]] double qary_entropy(Probability p, int q);

/// Tangent to H at eps, evaluated at p: -p log eps - (1-p) log(1-eps).
/// Throws for eps in {0, 1}.
[[nodiscard]] double tangent_line(Probability eps, Probability p);

/// T_eps(p) - H(p) >= 0, zero only at p = eps.
[[nodiscard]] double tangent_entropy_gap(Probability eps, Probability p);

/// Exact sum_{i=0}^{r} C(n,i) (q-1)^i.
[[nodiscard]] BigCount ball_volume(int n, int r, int q = 2);

/// log2 of the Stirling residual factor
///   exp(-1/(12k) - 1/(n-k)) / sqrt(2 pi k (1 - k/n)),  k = floor(n eps).
[[nodiscard]] double stirling_residual_log2(int n, int k);

/// log2 of the looser residual K(eps) k^{-1/2} exp(-1/(12k) - 1/(n-k)) with
/// K(eps) = 1/sqrt(2 pi (1 - eps)); an upper bound on stirling_residual_log2.
[[nodiscard]] double stirling_residual_asymptotic_log2(int n, const Rational& eps);

/// Lower bound q^{n H_q(k/n) + log_q Res(n)} on Vol(B(n, k)), k = floor(n eps).
/// Requires k >= 1, n - k >= 1 and k/n <= 1 - 1/q.
[[nodiscard]] LogProb ball_volume_lower_bound(int n, const Rational& eps, int q = 2);

/// Upper bound 2^{n H(eps)} on the binary Vol(B(n, floor(n eps))).
/// Requires 0 < eps <= 1/2 and n > floor(n eps) >= 1.
[[nodiscard]] LogProb ball_volume_upper_bound(int n, const Rational& eps);

/// C(n,k) eps^k (1-eps)^{n-k}, 0 <= k <= n.
[[nodiscard]] LogProb binom_pmf(int n, int k, Probability eps);

/// sum_{j=k}^{n} C(n,j) eps^j (1-eps)^{n-j}, 0 <= k <= n.
[[nodiscard]] LogProb binom_upper_tail(int n, int k, Probability eps);

/// sum_{j=0}^{k} C(n,j) eps^j (1-eps)^{n-j}, 0 <= k <= n.
[[nodiscard]] LogProb binom_cdf(int n, int k, Probability eps);

struct TailSandwich {
  LogProb lower;
  LogProb upper;
};

/// Single-term lower bound and geometric-series upper bound on the upper tail
/// at k. Requires 0 < eps < 1 and eps < k/n < 1.
[[nodiscard]] TailSandwich binom_tail_sandwich(int n, int k, Probability eps);

/// coefficient * 2^{n [H(k/n) - T_eps(k/n)]}; same domain as the sandwich.
[[nodiscard]] LogProb binom_upper_tail_bound(int n, int k, Probability eps);

/// (eps (n-k) / (eps n - k)) * 2^{n [H(k/n) - T_eps(k/n)]}.
/// Requires 0 < eps < 1, k < n and k/n < eps.
[[nodiscard]] LogProb binom_cdf_bound(int n, int k, Probability eps);

/// The p in [0, 1/2] with H(p) = h, by bisection.
[[nodiscard]] Probability inverse_binary_entropy(double h);

enum class ExponentRegime { kSphere, kStraightLine };

struct ErrorExponent {
  double rate = 0.0;
  double delta = 0.0;     ///< H^{-1}(1 - R) on [0, 1/2]
  double critical = 0.0;  ///< sqrt(eps) / (sqrt(eps) + sqrt(1 - eps))
  ExponentRegime regime = ExponentRegime::kSphere;
  double value = 0.0;
};

/// Random-coding exponent of the BSC with uniform inputs.
///   eps <= delta <= critical: T_eps(delta) - H(delta)
///   delta > critical:         1 - R - 2 log(sqrt(eps) + sqrt(1 - eps))
/// Requires 0 < eps < 1/2 and 0 <= R <= 1 - H(eps).
[[nodiscard]] ErrorExponent error_exponent(double rate, Probability eps);

}  // namespace dki
