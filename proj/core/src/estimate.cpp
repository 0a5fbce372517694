// SPDX-License-Identifier: Apache-2.0

#include "dki/estimate.hpp"

#include "dki/channel.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>
#include <vector>

namespace dki {

const char* to_string(ErrorType t) noexcept { return t == ErrorType::kTypeI ? "type1" : "type2"; }

Interval wilson_interval(std::uint64_t hits, std::uint64_t trials, double z) {
  if (trials == 0) throw DomainError("Wilson interval needs at least one trial");
  if (hits > trials) throw DomainError("more hits than trials");
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(hits) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / denom;
  const double half = z / denom * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
  return {std::clamp(center - half, 0.0, p), std::clamp(center + half, p, 1.0)};
}

ErrorEstimate mc_estimate(const Codebook& cb, const TargetSet& ks, std::size_t i, const DkiParams& p,
                          std::uint64_t trials, Seed seed, unsigned lanes) {
  if (trials < 1) throw DomainError("at least one trial is required");
  if (cb.n() != p.n()) throw DomainError("codebook length does not match the parameters");
  const Word& sent = cb.codeword(i);
  for (const auto j : ks.indices()) static_cast<void>(cb.codeword(j));
  const ErrorType type = ks.contains(i) ? ErrorType::kTypeI : ErrorType::kTypeII;
  const NoiseSampler sampler(p.channel(), p.n());
  const int thr = p.threshold();

  const std::uint64_t chunks = (trials + kTrialsPerChunk - 1) / kTrialsPerChunk;
  std::vector<std::uint64_t> chunk_hits(chunks, 0);
  std::atomic<std::uint64_t> next{0};

  auto worker = [&] {
    Word y = sent;
    for (std::uint64_t c = next++; c < chunks; c = next++) {
      PhiloxEngine rng(seed, c << 32);
      const std::uint64_t count = std::min(kTrialsPerChunk, trials - c * kTrialsPerChunk);
      std::uint64_t hits = 0;
      for (std::uint64_t t = 0; t < count; ++t) {
        y = sent;
        sampler.apply(y, rng);
        const bool accepted = identify(y, cb, ks, thr);
        hits += (type == ErrorType::kTypeI) ? !accepted : accepted;
      }
      chunk_hits[c] = hits;
    }
  };

  const unsigned workers = std::max(1U, std::min<unsigned>(lanes, static_cast<unsigned>(chunks)));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  ErrorEstimate out;
  out.type = type;
  out.trials = trials;
  for (const auto h : chunk_hits) out.hits += h;
  out.p_hat = static_cast<double>(out.hits) / static_cast<double>(trials);
  const Interval ci = wilson_interval(out.hits, trials);
  out.ci_low = ci.low;
  out.ci_high = ci.high;
  out.seed = seed;
  return out;
}

}  // namespace dki
