// SPDX-License-Identifier: Apache-2.0

#include "dki/identification.hpp"

#include "dki/binmath.hpp"
#include "dki/exact.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>

namespace dki {

namespace {

using BigFloat = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<512>>;

constexpr int kMaxKappaExponent = 448;

Rational checked_beta(const Rational& beta) {
  if (beta < 0 || beta >= 1) throw DomainError("beta must lie in [0, 1), got " + to_string(beta));
  return beta;
}

void require_nonsingular(const DkiParams& p) {
  if (p.beta() == 0) {
    throw DomainError("beta = 0 gives delta_beta = eps: the analytic bounds are singular; choose beta > 0");
  }
}

}  // namespace

BigCount target_size_from_kappa(int n, const Rational& kappa) {
  if (kappa < 0) throw DomainError("kappa must be nonnegative, got " + to_string(kappa));
  const Rational x = kappa * n;
  const BigCount whole = floor_of(x);
  if (whole >= kMaxKappaExponent) throw DomainError("kappa * n too large to materialize K");
  const auto m = static_cast<unsigned>(whole);
  if (x == Rational(whole)) return pow(BigCount(2), m);
  // 2^x is irrational here, so a wide float determines its ceiling.
  const BigFloat frac = BigFloat(numerator(x - Rational(whole))) / BigFloat(denominator(x - Rational(whole)));
  const BigFloat value = boost::multiprecision::ldexp(boost::multiprecision::exp2(frac), static_cast<int>(m));
  return static_cast<BigCount>(boost::multiprecision::ceil(value));
}

DkiParams::DkiParams(int n, const Rational& eps, Rational weight_fraction, Rational beta, BigCount k)
    : n_(n), channel_(eps), a_(std::move(weight_fraction)), beta_(checked_beta(beta)), k_(std::move(k)) {
  if (n < 1 || n > Word::kMaxLength) throw DomainError("codeword length out of range");
  if (a_ < 0) throw DomainError("weight fraction must be nonnegative");
  if (k_ < 1) throw DomainError("target set size K must be at least 1");
  delta_ = (1 - beta_ / 2) * eps + beta_ / 4;
  threshold_ = static_cast<int>(floor_mul(n_, delta_));
}

DkiParams DkiParams::with_kappa(int n, const Rational& eps, Rational weight_fraction, Rational beta,
                                const Rational& kappa) {
  DkiParams p(n, eps, std::move(weight_fraction), std::move(beta), target_size_from_kappa(n, kappa));
  p.kappa_ = kappa;
  return p;
}

double DkiParams::effective_kappa() const { return log2_of(k_) / n_; }

Rational DkiParams::tau() const { return (delta_ - beta_ / 2) / (1 - beta_); }

int decoding_threshold(const DkiParams& p) { return p.threshold(); }

TargetSet::TargetSet(std::vector<std::size_t> indices, std::size_t codebook_size) : indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end()) {
    throw DomainError("target set contains a duplicate index");
  }
  if (!indices_.empty() && (indices_.front() < 1 || indices_.back() > codebook_size)) {
    throw DomainError("target index outside [1, " + std::to_string(codebook_size) + "]");
  }
}

bool TargetSet::contains(std::size_t i) const { return std::binary_search(indices_.begin(), indices_.end(), i); }

TargetSet random_target_set(std::size_t codebook_size, std::size_t k, Seed seed, std::optional<std::size_t> include,
                            std::optional<std::size_t> exclude) {
  if (include && exclude && *include == *exclude) throw DomainError("index cannot be both included and excluded");
  std::vector<std::size_t> pool;
  pool.reserve(codebook_size);
  for (std::size_t i = 1; i <= codebook_size; ++i) {
    if (i != include.value_or(0) && i != exclude.value_or(0)) pool.push_back(i);
  }
  const std::size_t forced = include ? 1 : 0;
  if (k < forced || k - forced > pool.size()) {
    throw DomainError("target set size " + std::to_string(k) + " exceeds the available messages");
  }
  PhiloxEngine rng(seed);
  const std::size_t draw = k - forced;
  for (std::size_t t = 0; t < draw; ++t) {
    const auto pick = t + static_cast<std::size_t>(rng.below(pool.size() - t));
    std::swap(pool[t], pool[pick]);
  }
  pool.resize(draw);
  if (include) pool.push_back(*include);
  return TargetSet(std::move(pool), codebook_size);
}

TargetSet nearest_target_set(const Codebook& cb, std::size_t i, std::size_t k) {
  const Word& ci = cb.codeword(i);
  std::vector<std::pair<int, std::size_t>> ranked;
  for (std::size_t j = 1; j <= cb.size(); ++j) {
    if (j != i) ranked.emplace_back(distance(ci, cb.codeword(j)), j);
  }
  if (k > ranked.size()) throw DomainError("target set size exceeds the available messages");
  std::partial_sort(ranked.begin(), ranked.begin() + static_cast<std::ptrdiff_t>(k), ranked.end());
  std::vector<std::size_t> indices;
  for (std::size_t t = 0; t < k; ++t) indices.push_back(ranked[t].second);
  return TargetSet(std::move(indices), cb.size());
}

bool identify(const Word& y, const Codebook& cb, const TargetSet& ks, int thr) {
  if (y.size() != cb.n()) throw DomainError("received word length does not match the codebook");
  return std::any_of(ks.indices().begin(), ks.indices().end(),
                     [&](std::size_t j) { return distance(y, cb.codeword(j)) <= thr; });
}

LogProb exact_type1(const DkiParams& p) {
  const int k = p.threshold() + 1;
  if (k > p.n()) return LogProb::zero();
  return binom_upper_tail(p.n(), k, p.channel().probability());
}

Rational exact_type1_rational(const DkiParams& p) {
  return exact::binom_upper_tail(p.n(), p.threshold() + 1, p.eps());
}

Rational zeta1_rational(const DkiParams& p) {
  require_nonsingular(p);
  const int n = p.n();
  const int k = p.threshold() + 1;
  const Rational& eps = p.eps();
  const Rational coefficient = (p.delta() + Rational(1, n)) * (1 - eps) / (p.delta() - eps);
  return coefficient * exact::entropy_power(n, k) * exact::tangent_power(n, k, eps);
}

AnalyticBounds analytic_bounds(const DkiParams& p) {
  require_nonsingular(p);
  const int n = p.n();
  const Rational& eps = p.eps();
  const Probability e = p.channel().probability();
  AnalyticBounds out;

  const int k = p.threshold() + 1;
  const Rational c1 = (p.delta() + Rational(1, n)) * (1 - eps) / (p.delta() - eps);
  out.zeta1 = LogProb::from_log2(log2_of(c1) -
                                 n * tangent_entropy_gap(e, Probability(Rational(k, n))));

  const Rational tau = p.tau();
  out.tau = to_double(tau);
  if (tau < 0) {
    out.zeta0 = LogProb::zero();
  } else {
    const Rational c0 = eps * (1 - tau) / (eps - tau);
    out.zeta0 = LogProb::from_log2(log2_of(c0) - n * tangent_entropy_gap(e, Probability(tau)));
  }

  out.kappa_max = tangent_entropy_gap(e, Probability(p.delta()));
  out.type2_bound = LogProb::from_count(p.k()) * (out.zeta0 + out.zeta1);
  return out;
}

KappaRegion kappa_region(const Rational& eps, const Rational& beta) {
  if (eps <= 0 || eps * 2 >= 1) throw DomainError("eps out of (0, 1/2): " + to_string(eps));
  if (beta <= 0 || beta >= 1) throw DomainError("beta out of (0, 1): " + to_string(beta));
  const Probability e(eps);
  const Rational theorem_point = (1 - beta) * eps + beta / 2;
  const Rational delta = (1 - beta / 2) * eps + beta / 4;
  return {tangent_entropy_gap(e, Probability(theorem_point)), tangent_entropy_gap(e, Probability(delta))};
}

double dki_capacity(const Rational& weight_fraction) {
  if (weight_fraction <= 0) throw DomainError("weight fraction must be positive, got " + to_string(weight_fraction));
  if (weight_fraction * 2 >= 1) return 1.0;
  return binary_entropy(Probability(weight_fraction));
}

}  // namespace dki
