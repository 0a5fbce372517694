// SPDX-License-Identifier: Apache-2.0

#include "dki/oracle.hpp"

#include "dki/exact.hpp"

#include <algorithm>
#include <bit>

namespace dki {

namespace {

void require_oracle_scale(int n) {
  if (n > kMaxOracleLength) {
    throw DomainError("exhaustive oracle supports n <= " + std::to_string(kMaxOracleLength) + ", got n=" +
                      std::to_string(n));
  }
}

Rational weigh(const std::vector<std::uint64_t>& counts, const Rational& eps) {
  const int n = static_cast<int>(counts.size()) - 1;
  Rational total = 0;
  for (int d = 0; d <= n; ++d) {
    if (counts[static_cast<std::size_t>(d)] != 0) {
      total += Rational(counts[static_cast<std::size_t>(d)]) * exact::tangent_power(n, d, eps);
    }
  }
  return total;
}

}  // namespace

std::vector<std::uint64_t> accepted_profile(const Codebook& cb, std::size_t i, const TargetSet& ks, int thr) {
  const int n = cb.n();
  require_oracle_scale(n);
  const std::uint64_t center = cb.codeword(i).value();
  std::vector<std::uint64_t> targets;
  for (const auto j : ks.indices()) targets.push_back(cb.codeword(j).value());
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(n) + 1, 0);
  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::uint64_t y = 0; y < end; ++y) {
    const bool accepted =
        std::any_of(targets.begin(), targets.end(), [&](std::uint64_t c) { return std::popcount(c ^ y) <= thr; });
    if (accepted) ++counts[static_cast<std::size_t>(std::popcount(center ^ y))];
  }
  return counts;
}

Rational brute_force_type1(const Codebook& cb, std::size_t i, const TargetSet& ks, const DkiParams& p) {
  if (!ks.contains(i)) throw DomainError("type-I error requires the sent message to be in the target set");
  return 1 - weigh(accepted_profile(cb, i, ks, p.threshold()), p.eps());
}

Rational brute_force_type2(const Codebook& cb, std::size_t i, const TargetSet& ks, const DkiParams& p) {
  if (ks.contains(i)) throw DomainError("type-II error requires the sent message to be outside the target set");
  return weigh(accepted_profile(cb, i, ks, p.threshold()), p.eps());
}

Rational pairwise_accept_probability(int n, int d, int thr, const Rational& eps) {
  if (d < 0 || d > n) throw DomainError("distance outside [0, n]");
  // p1 flips inside the d differing positions, p2 outside: d_H(Y, c_j) = d - p1 + p2.
  Rational total = 0;
  for (int p1 = 0; p1 <= d; ++p1) {
    const int p2_max = std::min(thr - d + p1, n - d);
    if (p2_max < 0) continue;
    total += exact::binom_pmf(d, p1, eps) * exact::binom_cdf(n - d, p2_max, eps);
  }
  return total;
}

Rational union_bound_type2(const Codebook& cb, std::size_t i, const TargetSet& ks, const DkiParams& p) {
  Rational total = 0;
  for (const auto j : ks.indices()) {
    total += pairwise_accept_probability(cb.n(), distance(cb.codeword(i), cb.codeword(j)), p.threshold(), p.eps());
  }
  return total;
}

Rational max_union_bound_type2(const Codebook& cb, std::size_t i, const TargetSet& ks, const DkiParams& p) {
  Rational best = 0;
  for (const auto j : ks.indices()) {
    best = std::max(best, pairwise_accept_probability(cb.n(), distance(cb.codeword(i), cb.codeword(j)),
                                                      p.threshold(), p.eps()));
  }
  return best * Rational(static_cast<std::uint64_t>(ks.size()));
}

Rational joint_event_probability(const Codebook& cb, std::size_t i, std::size_t j, const DkiParams& p) {
  const int n = cb.n();
  require_oracle_scale(n);
  const std::uint64_t ci = cb.codeword(i).value();
  const std::uint64_t cj = cb.codeword(j).value();
  const int thr = p.threshold();
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(n) + 1, 0);
  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::uint64_t y = 0; y < end; ++y) {
    const int di = std::popcount(ci ^ y);
    if (di <= thr && std::popcount(cj ^ y) <= thr) ++counts[static_cast<std::size_t>(di)];
  }
  return weigh(counts, p.eps());
}

bool DecompositionCheck::zeta0_dominates() const { return LogProb::from_rational(joint) <= zeta0; }

DecompositionCheck type2_decomposition_check(int d, const DkiParams& p) {
  const int n = p.n();
  if (d < 1 || d > n) throw DomainError("pair distance outside [1, n]");
  const Rational& eps = p.eps();
  DecompositionCheck out;
  out.n = n;
  out.d = d;
  out.thr = p.threshold();

  for (int p1 = 0; p1 <= d; ++p1) {
    const int ub = std::min({out.thr - p1, out.thr - d + p1, n - d});
    for (int p2 = 0; p2 <= ub; ++p2) {
      out.double_sum += Rational(exact::binomial(d, p1) * exact::binomial(n - d, p2)) *
                        exact::tangent_power(n, p1 + p2, eps);
    }
  }
  out.joint = out.double_sum;

  out.relaxed_k = out.thr - d + d / 2;
  if (d == n) {
    out.relaxed = out.relaxed_k >= 0 ? Rational(1) : Rational(0);
  } else {
    out.relaxed = exact::binom_cdf(n - d, std::clamp(out.relaxed_k, -1, n - d), eps);
    if (out.relaxed_k >= 0 && out.relaxed_k < n - d && Rational(out.relaxed_k, n - d) < eps) {
      out.tail_lemma = exact::binom_cdf_bound(n - d, out.relaxed_k, eps);
    }
  }
  out.zeta0 = analytic_bounds(p).zeta0;
  return out;
}

DecompositionCheck type2_decomposition_check(const Codebook& cb, std::size_t i, std::size_t j, const DkiParams& p) {
  if (cb.n() != p.n()) throw DomainError("codebook length does not match the parameters");
  DecompositionCheck out = type2_decomposition_check(distance(cb.codeword(i), cb.codeword(j)), p);
  out.joint = joint_event_probability(cb, i, j, p);
  return out;
}

}  // namespace dki
