// SPDX-License-Identifier: Apache-2.0
//
// Monte Carlo estimation of identification error probabilities.
//
// Trials are split into fixed chunks; chunk c draws from the Philox stream
// (seed, stream) starting at block c * 2^32. Lanes only decide which thread
// runs a chunk, so the merged estimate does not depend on the lane count.

#pragma once

#include "dki/codebook.hpp"
#include "dki/identification.hpp"
#include "dki/philox.hpp"

#include <cstdint>

namespace dki {

enum class ErrorType { kTypeI, kTypeII };

[[nodiscard]] const char* to_string(ErrorType t) noexcept;

struct Interval {
  double low = 0.0;
  double high = 0.0;
};

/// Two-sided 95% normal quantile.
inline constexpr double kZ95 = 1.959963984540054;

/// Wilson score interval for hits successes out of trials.
[[nodiscard]] Interval wilson_interval(std::uint64_t hits, std::uint64_t trials, double z = kZ95);

struct ErrorEstimate {
  ErrorType type = ErrorType::kTypeI;
  std::uint64_t trials = 0;
  std::uint64_t hits = 0;
  double p_hat = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  Seed seed;
};

inline constexpr std::uint64_t kTrialsPerChunk = 1U << 14;

/// Sends c_i `trials` times. When i is in ks a miss counts as a hit (type I),
/// otherwise an acceptance does (type II).
[[nodiscard]] ErrorEstimate mc_estimate(const Codebook& cb, const TargetSet& ks, std::size_t i, const DkiParams& p,
                                        std::uint64_t trials, Seed seed, unsigned lanes = 1);

}  // namespace dki
