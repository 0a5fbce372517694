// SPDX-License-Identifier: Apache-2.0
//
// Memoryless binary symmetric channel Y = X xor Z, Z ~ Bernoulli(eps)^n.

#pragma once

#include "dki/hamming.hpp"
#include "dki/numeric.hpp"
#include "dki/philox.hpp"

#include <vector>

namespace dki {

/// Crossover probability, 0 < eps < 1/2, kept as an exact rational.
class BscParams {
 public:
  explicit BscParams(const Rational& eps);

  [[nodiscard]] const Rational& eps() const noexcept { return eps_; }
  [[nodiscard]] Probability probability() const noexcept { return probability_; }
  [[nodiscard]] double value() const noexcept { return probability_.value(); }

 private:
  Rational eps_;
  Probability probability_;
};

/// log2 W^n(y|x) = d log eps + (n-d) log(1-eps), d = d_H(x, y).
[[nodiscard]] LogProb channel_law(const Word& y, const Word& x, const BscParams& p);

/// eps^d (1-eps)^{n-d} exactly.
[[nodiscard]] Rational channel_law_exact(const Word& y, const Word& x, const BscParams& p);

/// C(n,k) eps^k (1-eps)^{n-k}: law of the number of flipped positions.
[[nodiscard]] LogProb crossover_pmf(int n, int k, const BscParams& p);

/// Reusable noise generator for words of one length. Words are processed in
/// 512-position blocks: the flip count of a block is drawn by CDF inversion,
/// then the flipped positions by Floyd's subset sampling.
class NoiseSampler {
 public:
  static constexpr int kBlock = 512;

  NoiseSampler(const BscParams& p, int n);

  [[nodiscard]] int size() const noexcept { return n_; }

  /// Flips bits of word in place, drawing from rng. Returns the flip count.
  int apply(Word& word, PhiloxEngine& rng) const;

  /// Reference path: one uniform draw per position.
  int apply_per_bit(Word& word, PhiloxEngine& rng) const;

 private:
  int draw_count(const std::vector<double>& cdf, PhiloxEngine& rng) const;

  int n_;
  double eps_;
  std::vector<double> full_cdf_;
  std::vector<double> tail_cdf_;
};

/// One channel use; deterministic in (x, eps, seed).
[[nodiscard]] Word transmit(const Word& x, const BscParams& p, Seed seed);

/// Same distribution via the per-bit reference path.
[[nodiscard]] Word transmit_per_bit(const Word& x, const BscParams& p, Seed seed);

}  // namespace dki
