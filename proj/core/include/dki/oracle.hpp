// SPDX-License-Identifier: Apache-2.0
//
// Ground-truth error probabilities by enumerating every channel output, and
// the closed forms used to check the type-II bound chain. All results are
// exact rationals.

#pragma once

#include "dki/codebook.hpp"
#include "dki/identification.hpp"
#include "dki/numeric.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace dki {

inline constexpr int kMaxOracleLength = 14;

/// counts[d] = number of outputs y with identify(y) true and d_H(y, c_i) = d.
[[nodiscard]] std::vector<std::uint64_t> accepted_profile(const Codebook& cb, std::size_t i, const TargetSet& ks,
                                                          int thr);

/// 1 - W^n(T_K | c_i); requires i in ks and n <= 14.
[[nodiscard]] Rational brute_force_type1(const Codebook& cb, std::size_t i, const TargetSet& ks, const DkiParams& p);

/// W^n(T_K | c_i); requires i not in ks and n <= 14.
[[nodiscard]] Rational brute_force_type2(const Codebook& cb, std::size_t i, const TargetSet& ks, const DkiParams& p);

/// P(d_H(Y(i), c_j) <= thr) when d_H(c_i, c_j) = d, any n.
[[nodiscard]] Rational pairwise_accept_probability(int n, int d, int thr, const Rational& eps);

/// sum over j in ks of pairwise_accept_probability(d_H(c_i, c_j)).
[[nodiscard]] Rational union_bound_type2(const Codebook& cb, std::size_t i, const TargetSet& ks, const DkiParams& p);

/// K * max over j in ks of pairwise_accept_probability(d_H(c_i, c_j)).
[[nodiscard]] Rational max_union_bound_type2(const Codebook& cb, std::size_t i, const TargetSet& ks,
                                             const DkiParams& p);

/// P(d_H(Y(i), c_i) <= thr and d_H(Y(i), c_j) <= thr) by enumeration; n <= 14.
[[nodiscard]] Rational joint_event_probability(const Codebook& cb, std::size_t i, std::size_t j, const DkiParams& p);

/// The pieces of the type-II bound for one pair at distance d.
struct DecompositionCheck {
  int n = 0;
  int d = 0;
  int thr = 0;
  Rational joint;       ///< P(both within thr), from the caller or the double sum
  Rational double_sum;  ///< sum over p1 <= d, p2 <= min{thr - p1, thr - d + p1}
  int relaxed_k = 0;    ///< thr - d + floor(d/2)
  Rational relaxed;     ///< P(Binomial(n - d, eps) <= relaxed_k)
  std::optional<Rational> tail_lemma;  ///< CDF bound on relaxed, when its domain holds
  LogProb zeta0;

  /// double_sum == joint and relaxed >= joint, exactly.
  [[nodiscard]] bool dominates() const { return double_sum == joint && relaxed >= joint; }
  /// zeta0 >= joint, in the log domain.
  [[nodiscard]] bool zeta0_dominates() const;
};

/// Builds the check from closed forms only; joint is the double sum.
[[nodiscard]] DecompositionCheck type2_decomposition_check(int d, const DkiParams& p);

/// Same, with joint taken from enumeration of the pair (c_i, c_j).
[[nodiscard]] DecompositionCheck type2_decomposition_check(const Codebook& cb, std::size_t i, std::size_t j,
                                                           const DkiParams& p);

}  // namespace dki
