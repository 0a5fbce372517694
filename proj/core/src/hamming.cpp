// SPDX-License-Identifier: Apache-2.0

#include "dki/hamming.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace dki {

namespace {

constexpr int kLimbBits = 64;

int limb_count(int n) { return (n + kLimbBits - 1) / kLimbBits; }

std::uint64_t reverse_bits(std::uint64_t x) {
  x = ((x >> 1) & 0x5555555555555555ULL) | ((x & 0x5555555555555555ULL) << 1);
  x = ((x >> 2) & 0x3333333333333333ULL) | ((x & 0x3333333333333333ULL) << 2);
  x = ((x >> 4) & 0x0F0F0F0F0F0F0F0FULL) | ((x & 0x0F0F0F0F0F0F0F0FULL) << 4);
  x = ((x >> 8) & 0x00FF00FF00FF00FFULL) | ((x & 0x00FF00FF00FF00FFULL) << 8);
  x = ((x >> 16) & 0x0000FFFF0000FFFFULL) | ((x & 0x0000FFFF0000FFFFULL) << 16);
  return (x >> 32) | (x << 32);
}

void require_enumerable(int n) {
  if (n < 1 || n > kMaxEnumerationLength) {
    throw DomainError("enumeration supports 1 <= n <= " + std::to_string(kMaxEnumerationLength) +
                      ", got n=" + std::to_string(n));
  }
}

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

Word::Word(int n) : n_(n) {
  if (n < 1 || n > kMaxLength) {
    throw DomainError("word length must lie in [1, 2^20], got " + std::to_string(n));
  }
  limbs_.assign(static_cast<std::size_t>(limb_count(n)), 0);
}

Word Word::ones(int n) {
  Word w(n);
  for (auto& limb : w.limbs_) limb = ~std::uint64_t{0};
  if (const int tail = n % kLimbBits; tail != 0) w.limbs_.back() = (std::uint64_t{1} << tail) - 1;
  return w;
}

Word Word::from_bits(std::string_view bits) {
  Word w(static_cast<int>(bits.size()));
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      w.set(static_cast<int>(i) + 1, true);
    } else if (bits[i] != '0') {
      throw DomainError("bit strings may only contain '0' and '1'");
    }
  }
  return w;
}

Word Word::from_value(int n, std::uint64_t value) {
  if (n < 1 || n > 64) throw DomainError("value view requires 1 <= n <= 64");
  if (n < 64 && (value >> n) != 0) throw DomainError("value does not fit in n bits");
  Word w(n);
  w.limbs_[0] = reverse_bits(value) >> (64 - n);
  return w;
}

bool Word::bit(int t) const {
  if (t < 1 || t > n_) throw DomainError("bit position out of range");
  const auto i = static_cast<std::size_t>(t - 1);
  return (limbs_[i / kLimbBits] >> (i % kLimbBits)) & 1U;
}

void Word::set(int t, bool on) {
  if (t < 1 || t > n_) throw DomainError("bit position out of range");
  const auto i = static_cast<std::size_t>(t - 1);
  const std::uint64_t mask = std::uint64_t{1} << (i % kLimbBits);
  if (on) {
    limbs_[i / kLimbBits] |= mask;
  } else {
    limbs_[i / kLimbBits] &= ~mask;
  }
}

void Word::flip(int t) {
  if (t < 1 || t > n_) throw DomainError("bit position out of range");
  const auto i = static_cast<std::size_t>(t - 1);
  limbs_[i / kLimbBits] ^= std::uint64_t{1} << (i % kLimbBits);
}

std::uint64_t Word::value() const {
  if (n_ > 64) throw DomainError("value view requires n <= 64");
  return reverse_bits(limbs_[0]) >> (64 - n_);
}

std::string Word::to_bits() const {
  std::string s(static_cast<std::size_t>(n_), '0');
  for (int t = 1; t <= n_; ++t) {
    if (bit(t)) s[static_cast<std::size_t>(t - 1)] = '1';
  }
  return s;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (a.n_ != b.n_) return a.n_ <=> b.n_;
  for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
    const std::uint64_t diff = a.limbs_[i] ^ b.limbs_[i];
    if (diff != 0) {
      // Lowest set bit is the earliest differing position.
      const std::uint64_t low = diff & (~diff + 1);
      return (a.limbs_[i] & low) != 0 ? std::strong_ordering::greater : std::strong_ordering::less;
    }
  }
  return std::strong_ordering::equal;
}

Word& Word::operator^=(const Word& other) {
  if (n_ != other.n_) throw DomainError("word length mismatch");
  for (std::size_t i = 0; i < limbs_.size(); ++i) limbs_[i] ^= other.limbs_[i];
  return *this;
}

int distance(const Word& a, const Word& b) {
  if (a.size() != b.size()) {
    throw DomainError("word length mismatch: " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
  }
  const auto la = a.limbs();
  const auto lb = b.limbs();
  int d = 0;
  for (std::size_t i = 0; i < la.size(); ++i) d += std::popcount(la[i] ^ lb[i]);
  return d;
}

int weight(const Word& w) {
  int total = 0;
  for (const auto limb : w.limbs()) total += std::popcount(limb);
  return total;
}

void enumerate_weight_bounded(int n, int wmax, const std::function<void(const Word&)>& visit) {
  require_enumerable(n);
  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::uint64_t v = 0; v < end; ++v) {
    if (std::popcount(v) <= wmax) visit(Word::from_value(n, v));
  }
}

std::vector<Word> weight_bounded_words(int n, int wmax) {
  std::vector<Word> out;
  enumerate_weight_bounded(n, wmax, [&](const Word& w) { out.push_back(w); });
  return out;
}

void enumerate_ball(const Word& center, int r, const std::function<void(const Word&)>& visit) {
  const int n = center.size();
  require_enumerable(n);
  if (r < 0) throw DomainError("ball radius must be nonnegative");
  const std::uint64_t c = center.value();
  std::vector<std::uint64_t> values;
  // Flip masks of each weight 0..r via Gosper's hack.
  const std::uint64_t end = std::uint64_t{1} << n;
  for (int w = 0; w <= std::min(r, n); ++w) {
    if (w == 0) {
      values.push_back(c);
      continue;
    }
    for (std::uint64_t mask = (std::uint64_t{1} << w) - 1; mask < end;) {
      values.push_back(c ^ mask);
      const std::uint64_t low = mask & (~mask + 1);
      const std::uint64_t ripple = mask + low;
      mask = (((ripple ^ mask) >> 2) / low) | ripple;
    }
  }
  std::sort(values.begin(), values.end());
  for (const auto v : values) visit(Word::from_value(n, v));
}

std::vector<Word> ball_words(const Word& center, int r) {
  std::vector<Word> out;
  enumerate_ball(center, r, [&](const Word& w) { out.push_back(w); });
  return out;
}

std::string to_hex(const Word& w) {
  static constexpr char kDigits[] = "0123456789abcdef";
  const int n = w.size();
  const int digits = (n + 3) / 4;
  const int pad = 4 * digits - n;
  std::string hex;
  hex.reserve(static_cast<std::size_t>(digits));
  for (int d = 0; d < digits; ++d) {
    int nibble = 0;
    for (int j = 0; j < 4; ++j) {
      const int t = 4 * d + j - pad + 1;  // position carried by this nibble bit
      nibble = (nibble << 1) | ((t >= 1 && w.bit(t)) ? 1 : 0);
    }
    hex.push_back(kDigits[nibble]);
  }
  return "n=" + std::to_string(n) + ":0x" + hex;
}

Word parse_hex(std::string_view text) {
  if (text.substr(0, 2) != "n=") throw DomainError("hex word must start with 'n='");
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw DomainError("hex word is missing ':'");
  int n = 0;
  for (char c : text.substr(2, colon - 2)) {
    if (c < '0' || c > '9' || n > Word::kMaxLength) throw DomainError("invalid hex word length");
    n = n * 10 + (c - '0');
  }
  std::string_view hex = text.substr(colon + 1);
  if (hex.substr(0, 2) != "0x") throw DomainError("hex word payload must start with '0x'");
  hex.remove_prefix(2);
  Word w(n);
  const int digits = (n + 3) / 4;
  if (static_cast<int>(hex.size()) != digits) {
    throw DomainError("hex word of length " + std::to_string(n) + " needs " + std::to_string(digits) + " digits");
  }
  const int pad = 4 * digits - n;
  for (int d = 0; d < digits; ++d) {
    const int nibble = hex_digit(hex[static_cast<std::size_t>(d)]);
    if (nibble < 0) throw DomainError("invalid hex digit");
    for (int j = 0; j < 4; ++j) {
      const bool on = (nibble >> (3 - j)) & 1;
      const int t = 4 * d + j - pad + 1;
      if (t < 1) {
        if (on) throw DomainError("hex word sets padding bits");
        continue;
      }
      if (on) w.set(t, true);
    }
  }
  return w;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL ^ static_cast<std::uint64_t>(w.size());
  for (const auto limb : w.limbs()) {
    h ^= limb + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

}  // namespace dki
