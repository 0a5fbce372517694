// SPDX-License-Identifier: Apache-2.0
//
// Scalar domain types shared by every module: probabilities, base-2 log
// probabilities, exact counts and exact rationals.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <compare>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dki {

using BigCount = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised when an argument falls outside the mathematical domain of an operation.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A real number in [0, 1]. NaN and out-of-range values are rejected.
class Probability {
 public:
  constexpr Probability() = default;
  explicit Probability(double value);
  explicit Probability(const Rational& value);

  [[nodiscard]] constexpr double value() const noexcept { return value_; }
  [[nodiscard]] Probability complement() const { return Probability(1.0 - value_); }

  friend constexpr auto operator<=>(const Probability&, const Probability&) = default;

 private:
  double value_ = 0.0;
};

/// Base-2 logarithm of a nonnegative quantity; -inf encodes zero.
class LogProb {
 public:
  constexpr LogProb() = default;
  static constexpr LogProb from_log2(double log2_value) noexcept { return LogProb(log2_value); }
  static LogProb from_linear(double value);
  static LogProb from_rational(const Rational& value);
  static LogProb from_count(const BigCount& value);
  static constexpr LogProb zero() noexcept {
    return LogProb(-std::numeric_limits<double>::infinity());
  }
  static constexpr LogProb one() noexcept { return LogProb(0.0); }

  [[nodiscard]] constexpr double log2_value() const noexcept { return log2_value_; }
  [[nodiscard]] double linear() const noexcept { return std::exp2(log2_value_); }
  [[nodiscard]] bool is_zero() const noexcept { return std::isinf(log2_value_) && log2_value_ < 0; }

  friend LogProb operator*(LogProb a, LogProb b) noexcept {
    return LogProb(a.log2_value_ + b.log2_value_);
  }
  friend LogProb operator/(LogProb a, LogProb b) noexcept {
    return LogProb(a.log2_value_ - b.log2_value_);
  }
  /// Log-domain addition (log-sum-exp).
  friend LogProb operator+(LogProb a, LogProb b) noexcept;

  friend constexpr auto operator<=>(const LogProb&, const LogProb&) = default;

 private:
  explicit constexpr LogProb(double v) noexcept : log2_value_(v) {}
  double log2_value_ = -std::numeric_limits<double>::infinity();
};

[[nodiscard]] double to_double(const Rational& r);
[[nodiscard]] double log2_of(const BigCount& value);
[[nodiscard]] double log2_of(const Rational& value);

/// floor(n * r) evaluated exactly.
[[nodiscard]] std::int64_t floor_mul(std::int64_t n, const Rational& r);
[[nodiscard]] BigCount floor_of(const Rational& r);
[[nodiscard]] BigCount ceil_of(const Rational& r);

/// Exact power of a rational with a nonnegative integer exponent.
[[nodiscard]] Rational pow(const Rational& base, unsigned exponent);
[[nodiscard]] BigCount pow(const BigCount& base, unsigned exponent);

/// Parses "p/q", decimal ("0.125", "-3", "1e-3") or a double's exact value.
/// Decimal literals become the exact rational they denote, not the nearest double.
[[nodiscard]] Rational parse_rational(std::string_view text);

/// Canonical "p/q" (or "p" for integers) rendering.
[[nodiscard]] std::string to_string(const Rational& r);

/// Exact rational value of a finite double.
[[nodiscard]] Rational exact_rational(double value);

/// Shortest round-trip decimal rendering of a double; "inf"/"-inf"/"nan" otherwise.
[[nodiscard]] std::string format_double(double value);

}  // namespace dki
