// SPDX-License-Identifier: Apache-2.0
//
// Packed binary words and the Hamming metric.
//
// Positions are numbered t = 1..n. Position t lives at bit (t-1) % 64 of
// limb (t-1) / 64; padding bits past n are always zero. For n <= 64 a word
// also has an integer "value" view in which position 1 is the most
// significant bit, so numeric order equals lexicographic order of the bit
// string b_1 b_2 ... b_n.

#pragma once

#include "dki/numeric.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dki {

class Word {
 public:
  static constexpr int kMaxLength = 1 << 20;

  Word() = default;
  /// All-zero word of length n, 1 <= n <= 2^20.
  explicit Word(int n);

  static Word zeros(int n) { return Word(n); }
  static Word ones(int n);
  /// Parses a bit string such as "0110" (position 1 first).
  static Word from_bits(std::string_view bits);
  /// Big-endian value view, n <= 64: position t carries bit (n - t) of value.
  static Word from_value(int n, std::uint64_t value);

  [[nodiscard]] int size() const noexcept { return n_; }
  [[nodiscard]] std::span<const std::uint64_t> limbs() const noexcept { return limbs_; }

  /// 1-based position access.
  [[nodiscard]] bool bit(int t) const;
  void set(int t, bool on);
  void flip(int t);

  [[nodiscard]] std::uint64_t value() const;
  [[nodiscard]] std::string to_bits() const;

  friend bool operator==(const Word&, const Word&) = default;
  /// Lexicographic order of the bit strings (shorter words first).
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

  Word& operator^=(const Word& other);
  friend Word operator^(Word a, const Word& b) { return a ^= b; }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> limbs_;
};

/// Number of positions where a and b differ. Throws on length mismatch.
[[nodiscard]] int distance(const Word& a, const Word& b);

/// Number of ones.
[[nodiscard]] int weight(const Word& w);

/// Largest n accepted by the exhaustive enumerators.
inline constexpr int kMaxEnumerationLength = 24;

/// Visits every word of length n with weight <= wmax in lexicographic order.
void enumerate_weight_bounded(int n, int wmax, const std::function<void(const Word&)>& visit);
[[nodiscard]] std::vector<Word> weight_bounded_words(int n, int wmax);

/// Visits every word within distance r of center, in lexicographic order.
void enumerate_ball(const Word& center, int r, const std::function<void(const Word&)>& visit);
[[nodiscard]] std::vector<Word> ball_words(const Word& center, int r);

/// "n=<len>:0x<hex>", the value view in ceil(n/4) lowercase hex digits.
[[nodiscard]] std::string to_hex(const Word& w);
/// Inverse of to_hex; rejects wrong digit counts and set padding bits.
[[nodiscard]] Word parse_hex(std::string_view text);

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

}  // namespace dki
