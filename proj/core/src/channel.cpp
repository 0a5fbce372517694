// SPDX-License-Identifier: Apache-2.0

#include "dki/channel.hpp"

#include "dki/binmath.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

namespace dki {

namespace {

Probability checked_eps(const Rational& eps) {
  if (eps <= 0 || eps * 2 >= 1) {
    throw DomainError("crossover probability must lie in (0, 1/2), got " + to_string(eps));
  }
  return Probability(eps);
}

std::vector<double> binomial_cdf_table(int m, double eps) {
  std::vector<double> cdf(static_cast<std::size_t>(m) + 1);
  double acc = 0.0;
  for (int k = 0; k <= m; ++k) {
    acc += binom_pmf(m, k, Probability(eps)).linear();
    cdf[static_cast<std::size_t>(k)] = acc;
  }
  cdf.back() = 1.0;
  return cdf;
}

}  // namespace

BscParams::BscParams(const Rational& eps) : eps_(eps), probability_(checked_eps(eps)) {}

LogProb channel_law(const Word& y, const Word& x, const BscParams& p) {
  const int d = distance(y, x);
  const int n = x.size();
  const double e = p.value();
  const double flips = d == 0 ? 0.0 : d * std::log2(e);
  return LogProb::from_log2(flips + (n - d) * std::log1p(-e) / std::numbers::ln2);
}

Rational channel_law_exact(const Word& y, const Word& x, const BscParams& p) {
  const int d = distance(y, x);
  const Rational& e = p.eps();
  return pow(e, static_cast<unsigned>(d)) * pow(Rational(1) - e, static_cast<unsigned>(x.size() - d));
}

LogProb crossover_pmf(int n, int k, const BscParams& p) { return binom_pmf(n, k, p.probability()); }

NoiseSampler::NoiseSampler(const BscParams& p, int n) : n_(n), eps_(p.value()) {
  if (n < 1 || n > Word::kMaxLength) throw DomainError("word length out of range");
  full_cdf_ = binomial_cdf_table(std::min(n, kBlock), eps_);
  if (const int tail = n % kBlock; n > kBlock && tail != 0) tail_cdf_ = binomial_cdf_table(tail, eps_);
}

int NoiseSampler::draw_count(const std::vector<double>& cdf, PhiloxEngine& rng) const {
  const double u = rng.uniform();
  const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
  return static_cast<int>(std::min<std::ptrdiff_t>(it - cdf.begin(), static_cast<std::ptrdiff_t>(cdf.size()) - 1));
}

int NoiseSampler::apply(Word& word, PhiloxEngine& rng) const {
  if (word.size() != n_) throw DomainError("word length does not match the sampler");
  int total = 0;
  for (int start = 0; start < n_; start += kBlock) {
    const int m = std::min(kBlock, n_ - start);
    const auto& cdf = (m == kBlock || n_ <= kBlock) ? full_cdf_ : tail_cdf_;
    const int k = draw_count(cdf, rng);
    std::array<std::uint64_t, kBlock / 64> chosen{};
    for (int j = m - k; j < m; ++j) {
      auto t = static_cast<int>(rng.below(static_cast<std::uint64_t>(j) + 1));
      if ((chosen[static_cast<std::size_t>(t / 64)] >> (t % 64)) & 1U) t = j;
      chosen[static_cast<std::size_t>(t / 64)] |= std::uint64_t{1} << (t % 64);
      word.flip(start + t + 1);
    }
    total += k;
  }
  return total;
}

int NoiseSampler::apply_per_bit(Word& word, PhiloxEngine& rng) const {
  if (word.size() != n_) throw DomainError("word length does not match the sampler");
  int total = 0;
  for (int t = 1; t <= n_; ++t) {
    if (rng.uniform() < eps_) {
      word.flip(t);
      ++total;
    }
  }
  return total;
}

Word transmit(const Word& x, const BscParams& p, Seed seed) {
  PhiloxEngine rng(seed);
  Word y = x;
  NoiseSampler(p, x.size()).apply(y, rng);
  return y;
}

Word transmit_per_bit(const Word& x, const BscParams& p, Seed seed) {
  PhiloxEngine rng(seed);
  Word y = x;
  NoiseSampler(p, x.size()).apply_per_bit(y, rng);
  return y;
}

}  // namespace dki
