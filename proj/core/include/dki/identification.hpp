// SPDX-License-Identifier: Apache-2.0
//
// Deterministic K-identification over the BSC: parameters, the threshold
// decoder, exact single-decoder error, analytic bounds and the capacity and
// kappa-region calculators.

#pragma once

#include "dki/channel.hpp"
#include "dki/codebook.hpp"
#include "dki/numeric.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace dki {

/// K = ceil(2^{kappa n}), exact for kappa n < 448.
[[nodiscard]] BigCount target_size_from_kappa(int n, const Rational& kappa);

class DkiParams {
 public:
  /// Target-set size given directly.
  DkiParams(int n, const Rational& eps, Rational weight_fraction, Rational beta, BigCount k);
  /// Target-set size given as a rate; K = ceil(2^{kappa n}).
  static DkiParams with_kappa(int n, const Rational& eps, Rational weight_fraction, Rational beta,
                              const Rational& kappa);

  [[nodiscard]] int n() const noexcept { return n_; }
  [[nodiscard]] const BscParams& channel() const noexcept { return channel_; }
  [[nodiscard]] const Rational& eps() const noexcept { return channel_.eps(); }
  [[nodiscard]] const Rational& weight_fraction() const noexcept { return a_; }
  [[nodiscard]] const Rational& beta() const noexcept { return beta_; }
  [[nodiscard]] const BigCount& k() const noexcept { return k_; }
  /// The rate the caller supplied, if any.
  [[nodiscard]] const std::optional<Rational>& kappa() const noexcept { return kappa_; }
  /// log2(K) / n.
  [[nodiscard]] double effective_kappa() const;

  /// delta_beta = (1 - beta/2) eps + beta/4.
  [[nodiscard]] const Rational& delta() const noexcept { return delta_; }
  /// floor(n delta_beta).
  [[nodiscard]] int threshold() const noexcept { return threshold_; }
  /// (delta_beta - beta/2) / (1 - beta); may be negative for large beta.
  [[nodiscard]] Rational tau() const;

  [[nodiscard]] CodebookParams codebook_params() const { return {n_, a_, beta_}; }

 private:
  int n_;
  BscParams channel_;
  Rational a_;
  Rational beta_;
  BigCount k_;
  std::optional<Rational> kappa_;
  Rational delta_;
  int threshold_;
};

/// floor(n delta_beta) on exact rationals.
[[nodiscard]] int decoding_threshold(const DkiParams& p);

/// Sorted, duplicate-free 1-based message indices.
class TargetSet {
 public:
  TargetSet(std::vector<std::size_t> indices, std::size_t codebook_size);

  [[nodiscard]] const std::vector<std::size_t>& indices() const noexcept { return indices_; }
  [[nodiscard]] std::size_t size() const noexcept { return indices_.size(); }
  [[nodiscard]] bool contains(std::size_t i) const;

 private:
  std::vector<std::size_t> indices_;
};

/// K indices drawn uniformly without replacement from [1..M]. With `include`
/// the set contains that index; with `exclude` it avoids it.
[[nodiscard]] TargetSet random_target_set(std::size_t codebook_size, std::size_t k, Seed seed,
                                          std::optional<std::size_t> include = {},
                                          std::optional<std::size_t> exclude = {});

/// The K codewords closest to c_i (excluding i), ties broken by index.
[[nodiscard]] TargetSet nearest_target_set(const Codebook& cb, std::size_t i, std::size_t k);

/// True iff some j in ks has d_H(y, c_j) <= thr.
[[nodiscard]] bool identify(const Word& y, const Codebook& cb, const TargetSet& ks, int thr);

/// P(d_H(Y(i), c_i) > thr): the single-decoder type-I probability.
[[nodiscard]] LogProb exact_type1(const DkiParams& p);
[[nodiscard]] Rational exact_type1_rational(const DkiParams& p);

struct AnalyticBounds {
  LogProb zeta1;
  LogProb zeta0;
  double tau = 0.0;
  double kappa_max = 0.0;
  LogProb type2_bound;
};

/// zeta1 = ((delta + 1/n)(1-eps)/(delta - eps)) 2^{-n [T((thr+1)/n) - H((thr+1)/n)]}
/// zeta0 = (eps (1-tau)/(eps - tau)) 2^{-n [T(tau) - H(tau)]}, zero when tau < 0
/// type2_bound = K (zeta0 + zeta1), kappa_max = T(delta) - H(delta).
/// Throws for beta = 0.
[[nodiscard]] AnalyticBounds analytic_bounds(const DkiParams& p);

/// zeta1 evaluated exactly.
[[nodiscard]] Rational zeta1_rational(const DkiParams& p);

struct KappaRegion {
  double theorem = 0.0;     ///< T(a) - H(a), a = (1 - beta) eps + beta/2
  double asymptotic = 0.0;  ///< T(delta) - H(delta)
};

/// Requires 0 < eps < 1/2 and 0 < beta < 1.
[[nodiscard]] KappaRegion kappa_region(const Rational& eps, const Rational& beta);

/// H(A) for A < 1/2, 1 otherwise. Requires A > 0.
[[nodiscard]] double dki_capacity(const Rational& weight_fraction);

}  // namespace dki
