// SPDX-License-Identifier: Apache-2.0
//
// Philox4x32-10 counter-based generator (Salmon et al., SC'11).
//
// A stream is addressed by (seed, stream-id): the 64-bit seed is the key and
// the stream-id fills the upper half of the 128-bit counter, so distinct
// stream-ids never overlap. The lower half counts blocks; each block yields
// two 64-bit outputs.

#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace dki {

struct Seed {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;

  friend bool operator==(const Seed&, const Seed&) = default;
};

using PhiloxCounter = std::array<std::uint32_t, 4>;
using PhiloxKey = std::array<std::uint32_t, 2>;

/// One application of the ten-round bijection.
[[nodiscard]] PhiloxCounter philox4x32_10(PhiloxCounter counter, PhiloxKey key) noexcept;

/// UniformRandomBitGenerator over 64-bit outputs.
class PhiloxEngine {
 public:
  using result_type = std::uint64_t;

  explicit PhiloxEngine(Seed seed, std::uint64_t first_block = 0) noexcept;

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  result_type operator()() noexcept;

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() noexcept;

  /// Uniform integer in [0, bound), unbiased. bound must be positive.
  std::uint64_t below(std::uint64_t bound) noexcept;

 private:
  void refill() noexcept;

  PhiloxKey key_{};
  std::uint64_t stream_ = 0;
  std::uint64_t block_ = 0;
  std::array<std::uint64_t, 2> buffer_{};
  int index_ = 2;
};

}  // namespace dki
