// SPDX-License-Identifier: Apache-2.0
//
// Sweep syntax: "a,b,c" lists or inclusive "start:stop:step" ranges,
// resolved to exact rationals.

#pragma once

#include "dki/numeric.hpp"

#include <string_view>
#include <vector>

namespace dki::cli {

/// Parses a sweep; the empty string is the empty sweep. Values come back
/// sorted ascending with duplicates removed.
[[nodiscard]] std::vector<Rational> parse_sweep(std::string_view spec);

/// As parse_sweep, but every value must be an integer.
[[nodiscard]] std::vector<int> parse_int_sweep(std::string_view spec);

}  // namespace dki::cli
