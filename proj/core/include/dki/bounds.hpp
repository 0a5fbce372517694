// SPDX-License-Identifier: Apache-2.0
//
// Grid evaluation of the volume, tail and zeta inequalities. Every row
// records both sides and whether lhs <= rhs held; rows whose parameters fall
// outside an inequality's domain are kept as skipped rows with a reason.

#pragma once

#include "dki/numeric.hpp"

#include <string>
#include <utility>
#include <vector>

namespace dki {

struct BoundReport {
  enum class Status { kHolds, kViolated, kSkipped };

  std::string bound;
  std::vector<std::pair<std::string, std::string>> params;
  LogProb lhs;
  LogProb rhs;
  Status status = Status::kSkipped;
  std::string reason;

  [[nodiscard]] bool holds() const noexcept { return status == Status::kHolds; }
  [[nodiscard]] bool violated() const noexcept { return status == Status::kViolated; }
};

[[nodiscard]] const char* to_string(BoundReport::Status s) noexcept;

struct VolumeGrid {
  std::vector<int> n;
  std::vector<Rational> eps;
  int q = 2;
};

struct TailGrid {
  std::vector<int> n;
  std::vector<Rational> eps;
};

struct ZetaGrid {
  std::vector<int> n;
  std::vector<Rational> eps;
  std::vector<Rational> beta;
};

/// Stirling lower bound and 2^{n H(eps)} upper bound against exact volumes.
/// The upper bound is only defined for q = 2.
[[nodiscard]] std::vector<BoundReport> volume_suite(const VolumeGrid& grid);

/// Sandwich, upper-tail and CDF bounds against exact tails, for every k.
/// Comparisons are exact rationals.
[[nodiscard]] std::vector<BoundReport> tail_suite(const TailGrid& grid);

/// zeta1 against the exact type-I tail, and for every pair distance
/// d > floor(n beta) the relaxed sum and zeta0 against the joint event.
[[nodiscard]] std::vector<BoundReport> zeta_suite(const ZetaGrid& grid);

[[nodiscard]] VolumeGrid default_volume_grid();
[[nodiscard]] TailGrid default_tail_grid();
[[nodiscard]] ZetaGrid default_zeta_grid();

}  // namespace dki
