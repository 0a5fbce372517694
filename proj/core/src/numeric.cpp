// SPDX-License-Identifier: Apache-2.0

#include "dki/numeric.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <numbers>
#include <system_error>

namespace dki {

namespace mp = boost::multiprecision;

Probability::Probability(double value) : value_(value) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw DomainError("probability must lie in [0, 1], got " + format_double(value));
  }
}

Probability::Probability(const Rational& value) {
  if (value < 0 || value > 1) {
    throw DomainError("probability must lie in [0, 1], got " + to_string(value));
  }
  value_ = to_double(value);
}

LogProb LogProb::from_linear(double value) {
  if (!(value >= 0.0) || std::isinf(value)) {
    throw DomainError("LogProb requires a finite nonnegative value");
  }
  return LogProb(std::log2(value));
}

LogProb LogProb::from_rational(const Rational& value) {
  if (value < 0) throw DomainError("LogProb requires a nonnegative value");
  return LogProb(log2_of(value));
}

LogProb LogProb::from_count(const BigCount& value) {
  if (value < 0) throw DomainError("LogProb requires a nonnegative value");
  return LogProb(log2_of(value));
}

LogProb operator+(LogProb a, LogProb b) noexcept {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const double hi = std::max(a.log2_value_, b.log2_value_);
  const double lo = std::min(a.log2_value_, b.log2_value_);
  return LogProb(hi + std::log1p(std::exp2(lo - hi)) / std::numbers::ln2);
}

double log2_of(const BigCount& value) {
  if (value <= 0) return value == 0 ? -std::numeric_limits<double>::infinity()
                                    : std::numeric_limits<double>::quiet_NaN();
  const unsigned msb = mp::msb(value);
  if (msb < 63) return std::log2(static_cast<double>(value.convert_to<std::uint64_t>()));
  const unsigned shift = msb - 62;
  const auto top = static_cast<BigCount>(value >> shift).convert_to<std::uint64_t>();
  return std::log2(static_cast<double>(top)) + static_cast<double>(shift);
}

double log2_of(const Rational& value) {
  if (value <= 0) return value == 0 ? -std::numeric_limits<double>::infinity()
                                    : std::numeric_limits<double>::quiet_NaN();
  return log2_of(static_cast<BigCount>(mp::numerator(value))) -
         log2_of(static_cast<BigCount>(mp::denominator(value)));
}

double to_double(const Rational& r) {
  if (r == 0) return 0.0;
  const bool negative = r < 0;
  BigCount num = mp::abs(static_cast<BigCount>(mp::numerator(r)));
  const BigCount den = mp::denominator(r);
  // Scale so the integer quotient carries 64 significant bits, then round once.
  const long shift = 64 - (static_cast<long>(mp::msb(num)) - static_cast<long>(mp::msb(den)));
  BigCount q;
  BigCount rem;
  if (shift >= 0) {
    mp::divide_qr(static_cast<BigCount>(num << static_cast<unsigned>(shift)), den, q, rem);
  } else {
    mp::divide_qr(num, static_cast<BigCount>(den << static_cast<unsigned>(-shift)), q, rem);
  }
  const unsigned qbits = mp::msb(q) + 1;
  const unsigned drop = qbits > 63 ? qbits - 63 : 0;
  auto top = static_cast<BigCount>(q >> drop).convert_to<std::uint64_t>();
  const bool sticky = rem != 0 || (q & ((BigCount(1) << drop) - 1)) != 0;
  if (sticky) top |= 1U;  // keep inexactness visible to the final rounding
  const double value = std::ldexp(static_cast<double>(top), static_cast<int>(drop) - static_cast<int>(shift));
  return negative ? -value : value;
}

std::int64_t floor_mul(std::int64_t n, const Rational& r) {
  return floor_of(Rational(n) * r).convert_to<std::int64_t>();
}

BigCount floor_of(const Rational& r) {
  BigCount q;
  BigCount rem;
  mp::divide_qr(static_cast<BigCount>(mp::numerator(r)), static_cast<BigCount>(mp::denominator(r)), q, rem);
  if (rem < 0) q -= 1;  // divide_qr truncates toward zero
  return q;
}

BigCount ceil_of(const Rational& r) { return -floor_of(-r); }

Rational pow(const Rational& base, unsigned exponent) {
  return Rational(mp::pow(static_cast<BigCount>(mp::numerator(base)), exponent),
                  mp::pow(static_cast<BigCount>(mp::denominator(base)), exponent));
}

BigCount pow(const BigCount& base, unsigned exponent) { return mp::pow(base, exponent); }

namespace {

BigCount parse_integer(std::string_view digits) {
  if (digits.empty()) throw DomainError("empty integer literal");
  BigCount value = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw DomainError("invalid digit in numeric literal");
    }
    value = value * 10 + (c - '0');
  }
  return value;
}

Rational parse_decimal(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  long exponent = 0;
  if (const auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = text.substr(e + 1);
    text = text.substr(0, e);
    if (!exp_text.empty() && exp_text.front() == '+') exp_text.remove_prefix(1);
    const auto [ptr, ec] = std::from_chars(exp_text.data(), exp_text.data() + exp_text.size(), exponent);
    if (ec != std::errc() || ptr != exp_text.data() + exp_text.size()) {
      throw DomainError("invalid exponent in numeric literal");
    }
  }
  std::string digits;
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    digits.append(text.substr(0, dot));
    const std::string_view frac = text.substr(dot + 1);
    digits.append(frac);
    exponent -= static_cast<long>(frac.size());
  } else {
    digits.append(text);
  }
  if (digits.empty()) throw DomainError("empty numeric literal");
  if (exponent > 4000 || exponent < -4000) throw DomainError("exponent out of range");
  Rational value(parse_integer(digits));
  const BigCount scale = mp::pow(BigCount(10), static_cast<unsigned>(std::labs(exponent)));
  if (exponent >= 0) {
    value *= scale;
  } else {
    value /= scale;
  }
  return negative ? Rational(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw DomainError("empty numeric literal");
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const Rational num = parse_decimal(text.substr(0, slash));
    const Rational den = parse_decimal(text.substr(slash + 1));
    if (den == 0) throw DomainError("zero denominator in rational literal");
    return num / den;
  }
  return parse_decimal(text);
}

std::string to_string(const Rational& r) {
  if (mp::denominator(r) == 1) return mp::numerator(r).str();
  return mp::numerator(r).str() + "/" + mp::denominator(r).str();
}

Rational exact_rational(double value) {
  if (!std::isfinite(value)) throw DomainError("cannot convert a non-finite double to a rational");
  int exp = 0;
  const double mant = std::frexp(value, &exp);
  const auto scaled = static_cast<std::int64_t>(std::ldexp(mant, 53));
  Rational r(scaled);
  const int shift = exp - 53;
  if (shift >= 0) {
    r *= mp::pow(BigCount(2), static_cast<unsigned>(shift));
  } else {
    r /= mp::pow(BigCount(2), static_cast<unsigned>(-shift));
  }
  return r;
}

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), ec == std::errc() ? ptr : buf.data());
}

}  // namespace dki
