// SPDX-License-Identifier: Apache-2.0

#include "dki/philox.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <set>
#include <vector>

namespace dki {
namespace {

// Random123 known-answer vectors.
TEST(Philox, KnownAnswers) {
  EXPECT_EQ(philox4x32_10({0, 0, 0, 0}, {0, 0}),
            (PhiloxCounter{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8}));
  EXPECT_EQ(philox4x32_10({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}),
            (PhiloxCounter{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd}));
  EXPECT_EQ(philox4x32_10({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}),
            (PhiloxCounter{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1}));
}

TEST(PhiloxEngine, CounterLayout) {
  PhiloxEngine rng(Seed{0, 0});
  EXPECT_EQ(rng(), 0xe169c58d6627e8d5ULL);
  EXPECT_EQ(rng(), 0x9b00dbd8bc57ac4cULL);
  const PhiloxCounter next = philox4x32_10({1, 0, 0, 0}, {0, 0});
  EXPECT_EQ(rng(), (std::uint64_t{next[1]} << 32) | next[0]);

  PhiloxEngine keyed(Seed{0xffffffffffffffffULL, 0xffffffffffffffffULL}, 0xffffffffffffffffULL);
  EXPECT_EQ(keyed(), 0x41c83b0e408f276dULL);
}

TEST(PhiloxEngine, JumpMatchesSequential) {
  PhiloxEngine a(Seed{42, 7});
  for (int i = 0; i < 2 * 1000; ++i) static_cast<void>(a());
  PhiloxEngine b(Seed{42, 7}, 1000);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(a(), b());
}

TEST(PhiloxEngine, StreamsDiffer) {
  std::set<std::uint64_t> firsts;
  for (std::uint64_t s = 0; s < 256; ++s) firsts.insert(PhiloxEngine(Seed{1, s})());
  for (std::uint64_t k = 0; k < 256; ++k) firsts.insert(PhiloxEngine(Seed{k + 2, 0})());
  EXPECT_EQ(firsts.size(), 512U);
}

TEST(PhiloxEngine, UniformInUnitInterval) {
  PhiloxEngine rng(Seed{3, 0});
  double sum = 0.0;
  constexpr int kDraws = 200000;
  for (int i = 0; i < kDraws; ++i) {
    const double u = rng.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
  }
  // Mean of U(0,1) has sd 1/sqrt(12 N); allow 5 sd.
  EXPECT_NEAR(sum / kDraws, 0.5, 5.0 / std::sqrt(12.0 * kDraws));
}

TEST(PhiloxEngine, BelowIsUniform) {
  PhiloxEngine rng(Seed{4, 0});
  constexpr std::uint64_t kBins = 7;
  constexpr int kDraws = 140000;
  std::array<int, kBins> counts{};
  for (int i = 0; i < kDraws; ++i) {
    const auto v = rng.below(kBins);
    ASSERT_LT(v, kBins);
    ++counts[v];
  }
  double chi2 = 0.0;
  const double expected = static_cast<double>(kDraws) / kBins;
  for (int c : counts) chi2 += (c - expected) * (c - expected) / expected;
  // chi-square with 6 dof, 0.999 quantile 22.46.
  EXPECT_LT(chi2, 22.46);
  EXPECT_EQ(rng.below(1), 0U);
}

TEST(PhiloxEngine, BelowHugeBound) {
  PhiloxEngine rng(Seed{5, 0});
  const std::uint64_t bound = (std::uint64_t{1} << 63) + 12345;
  int high = 0;
  for (int i = 0; i < 10000; ++i) {
    const auto v = rng.below(bound);
    ASSERT_LT(v, bound);
    high += v >= bound / 2;
  }
  EXPECT_NEAR(high, 5000, 250);
}

}  // namespace
}  // namespace dki
