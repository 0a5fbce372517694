// SPDX-License-Identifier: Apache-2.0

#include "dki/hamming.hpp"

#include "dki/binmath.hpp"
#include "support/generators.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <unordered_set>

namespace dki {
namespace {

TEST(Word, BitsAndValueView) {
  const Word w = Word::from_bits("1011");
  EXPECT_EQ(w.size(), 4);
  EXPECT_TRUE(w.bit(1));
  EXPECT_FALSE(w.bit(2));
  EXPECT_EQ(w.value(), 0b1011U);
  EXPECT_EQ(Word::from_value(4, 0b1011), w);
  EXPECT_EQ(w.to_bits(), "1011");
  EXPECT_EQ(weight(Word::ones(130)), 130);
  EXPECT_THROW(Word(0), DomainError);
  EXPECT_THROW(Word(Word::kMaxLength + 1), DomainError);
  EXPECT_THROW(static_cast<void>(w.bit(5)), DomainError);
  EXPECT_THROW(static_cast<void>(Word::from_value(3, 8)), DomainError);
  EXPECT_THROW(static_cast<void>(Word::from_bits("10x")), DomainError);
}

TEST(Word, OrderIsLexicographic) {
  testing::Gen gen(41);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = gen.integer(1, 200);
    const Word a = gen.word(n);
    const Word b = gen.word(n);
    EXPECT_EQ(a < b, a.to_bits() < b.to_bits());
    EXPECT_EQ(a == b, a.to_bits() == b.to_bits());
  }
}

TEST(Distance, FrozenValues) {
  EXPECT_EQ(distance(Word::from_bits("000"), Word::from_bits("111")), 3);
  EXPECT_EQ(distance(Word::from_bits("1010"), Word::from_bits("1001")), 2);
  EXPECT_EQ(distance(Word::zeros(1000), Word::ones(1000)), 1000);
  EXPECT_THROW(static_cast<void>(distance(Word(3), Word(4))), DomainError);
}

TEST(Distance, MetricAxioms) {
  testing::Gen gen(42);
  for (int trial = 0; trial < 10000; ++trial) {
    const int n = gen.integer(1, 512);
    const Word x = gen.word(n);
    const Word y = gen.word(n);
    const Word z = gen.word(n);
    const int dxy = distance(x, y);
    ASSERT_EQ(dxy, distance(y, x));
    ASSERT_EQ(distance(x, x), 0);
    ASSERT_EQ(dxy == 0, x == y);
    ASSERT_LE(distance(x, z), dxy + distance(y, z));
    ASSERT_EQ(dxy, weight(x ^ y));
  }
}

TEST(Distance, MatchesBitStringCount) {
  testing::Gen gen(43);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = gen.integer(1, 300);
    const Word x = gen.word(n);
    const Word y = gen.word(n);
    const auto bx = x.to_bits();
    const auto by = y.to_bits();
    int count = 0;
    for (std::size_t i = 0; i < bx.size(); ++i) count += bx[i] != by[i];
    EXPECT_EQ(distance(x, y), count);
  }
}

TEST(Enumeration, Counts) {
  EXPECT_EQ(weight_bounded_words(3, 1).size(), 4U);
  EXPECT_EQ(weight_bounded_words(4, 4).size(), 16U);
  EXPECT_EQ(ball_words(Word::from_bits("0110"), 4).size(), 16U);
  EXPECT_EQ(ball_words(Word::from_bits("101010"), 2).size(), 22U);
  EXPECT_THROW(static_cast<void>(weight_bounded_words(kMaxEnumerationLength + 1, 1)), DomainError);
}

TEST(Enumeration, SortedDistinctAndCorrect) {
  for (int n = 1; n <= 12; ++n) {
    for (int r = 0; r <= n; ++r) {
      const auto words = weight_bounded_words(n, r);
      EXPECT_TRUE(std::is_sorted(words.begin(), words.end()));
      EXPECT_EQ(BigCount(words.size()), ball_volume(n, r));
      for (const auto& w : words) ASSERT_LE(weight(w), r);

      const Word center = Word::from_value(n, (std::uint64_t{0x5a5} * 2654435761U) % (std::uint64_t{1} << n));
      const auto ball = ball_words(center, r);
      EXPECT_TRUE(std::adjacent_find(ball.begin(), ball.end(), std::greater_equal<>()) == ball.end());
      EXPECT_EQ(BigCount(ball.size()), ball_volume(n, r));
      for (const auto& w : ball) ASSERT_LE(distance(w, center), r);
    }
  }
}

TEST(Hex, FrozenValues) {
  EXPECT_EQ(to_hex(Word::from_bits("1011")), "n=4:0xb");
  EXPECT_EQ(to_hex(Word::from_bits("10110")), "n=5:0x16");
  EXPECT_EQ(to_hex(Word::from_bits("1")), "n=1:0x1");
  EXPECT_EQ(parse_hex("n=5:0x16"), Word::from_bits("10110"));
  EXPECT_EQ(parse_hex("n=4:0xB"), Word::from_bits("1011"));
}

TEST(Hex, RejectsMalformed) {
  for (const char* bad : {"4:0xb", "n=4:b", "n=4:0x", "n=4:0xbb", "n=5:0x36", "n=4:0xg", "n=0:0x0", "n=x:0x1",
                          "n=4"}) {
    EXPECT_THROW(static_cast<void>(parse_hex(bad)), DomainError) << bad;
  }
}

TEST(Hex, RoundTrip) {
  testing::Gen gen(44);
  for (int trial = 0; trial < 2000; ++trial) {
    const Word w = gen.word(gen.integer(1, 700));
    EXPECT_EQ(parse_hex(to_hex(w)), w);
  }
}

TEST(WordHash, DistinguishesLengths) {
  std::unordered_set<Word, WordHash> set;
  for (int n = 1; n <= 100; ++n) set.insert(Word::zeros(n));
  for (int v = 0; v < 256; ++v) set.insert(Word::from_value(8, static_cast<std::uint64_t>(v)));
  EXPECT_EQ(set.size(), 100U + 255U);
}

}  // namespace
}  // namespace dki
