// SPDX-License-Identifier: Apache-2.0

#include "sweep.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace dki::cli {

namespace {

constexpr std::size_t kMaxSweepPoints = 1000000;

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace

std::vector<Rational> parse_sweep(std::string_view spec) {
  std::vector<Rational> values;
  if (spec.find_first_not_of(" \t") == std::string_view::npos) return values;
  for (const auto item : split(spec, ',')) {
    const auto range = split(item, ':');
    if (range.size() == 1) {
      values.push_back(parse_rational(item));
      continue;
    }
    if (range.size() != 3) throw DomainError("range must be start:stop:step, got '" + std::string(item) + "'");
    const Rational start = parse_rational(range[0]);
    const Rational stop = parse_rational(range[1]);
    const Rational step = parse_rational(range[2]);
    if (step <= 0) throw DomainError("range step must be positive");
    for (Rational x = start; x <= stop; x += step) {
      if (values.size() >= kMaxSweepPoints) throw DomainError("sweep has too many points");
      values.push_back(x);
    }
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

std::vector<int> parse_int_sweep(std::string_view spec) {
  std::vector<int> out;
  for (const auto& v : parse_sweep(spec)) {
    if (denominator(v) != 1 || v > std::numeric_limits<int>::max() || v < std::numeric_limits<int>::min()) {
      throw DomainError("expected an integer sweep, got " + to_string(v));
    }
    out.push_back(static_cast<int>(numerator(v)));
  }
  return out;
}

}  // namespace dki::cli
