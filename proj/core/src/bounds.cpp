// SPDX-License-Identifier: Apache-2.0

#include "dki/bounds.hpp"

#include "dki/binmath.hpp"
#include "dki/exact.hpp"
#include "dki/identification.hpp"
#include "dki/oracle.hpp"

#include <functional>
#include <optional>

namespace dki {

namespace {

using Params = std::vector<std::pair<std::string, std::string>>;

BoundReport compare(std::string bound, Params params, LogProb lhs, LogProb rhs, bool holds) {
  BoundReport r;
  r.bound = std::move(bound);
  r.params = std::move(params);
  r.lhs = lhs;
  r.rhs = rhs;
  r.status = holds ? BoundReport::Status::kHolds : BoundReport::Status::kViolated;
  return r;
}

BoundReport exact_compare(std::string bound, Params params, const Rational& lhs, const Rational& rhs) {
  return compare(std::move(bound), std::move(params), LogProb::from_rational(lhs), LogProb::from_rational(rhs),
                 lhs <= rhs);
}

BoundReport skipped(std::string bound, Params params, std::string reason) {
  BoundReport r;
  r.bound = std::move(bound);
  r.params = std::move(params);
  r.status = BoundReport::Status::kSkipped;
  r.reason = std::move(reason);
  return r;
}

// Runs one row; a DomainError from the bound becomes a skipped row.
void attempt(std::vector<BoundReport>& out, const std::string& bound, const Params& params,
             const std::function<BoundReport()>& row) {
  try {
    out.push_back(row());
  } catch (const DomainError& e) {
    out.push_back(skipped(bound, params, e.what()));
  }
}

std::vector<Rational> steps(const Rational& start, const Rational& stop, const Rational& step) {
  std::vector<Rational> v;
  for (Rational x = start; x <= stop; x += step) v.push_back(x);
  return v;
}

}  // namespace

const char* to_string(BoundReport::Status s) noexcept {
  switch (s) {
    case BoundReport::Status::kHolds:
      return "holds";
    case BoundReport::Status::kViolated:
      return "violated";
    case BoundReport::Status::kSkipped:
      return "skipped";
  }
  return "skipped";
}

std::vector<BoundReport> volume_suite(const VolumeGrid& grid) {
  std::vector<BoundReport> out;
  for (const int n : grid.n) {
    for (const auto& eps : grid.eps) {
      const Params params{{"n", std::to_string(n)}, {"eps", to_string(eps)}, {"q", std::to_string(grid.q)}};
      attempt(out, "volume-lower", params, [&] {
        const LogProb bound = ball_volume_lower_bound(n, eps, grid.q);
        const LogProb volume = LogProb::from_count(ball_volume(n, static_cast<int>(floor_mul(n, eps)), grid.q));
        return compare("volume-lower", params, bound, volume, bound <= volume);
      });
      if (grid.q != 2) continue;
      attempt(out, "volume-upper", params, [&] {
        const LogProb bound = ball_volume_upper_bound(n, eps);
        const LogProb volume = LogProb::from_count(ball_volume(n, static_cast<int>(floor_mul(n, eps))));
        return compare("volume-upper", params, volume, bound, volume <= bound);
      });
    }
  }
  return out;
}

std::vector<BoundReport> tail_suite(const TailGrid& grid) {
  std::vector<BoundReport> out;
  for (const int n : grid.n) {
    for (const auto& eps : grid.eps) {
      for (int k = 0; k <= n; ++k) {
        const Params params{{"n", std::to_string(n)}, {"k", std::to_string(k)}, {"eps", to_string(eps)}};
        const Rational tail = exact::binom_upper_tail(n, k, eps);
        attempt(out, "tail-sandwich-lower", params, [&] {
          const auto s = exact::binom_tail_sandwich(n, k, eps);
          return exact_compare("tail-sandwich-lower", params, s.lower, tail);
        });
        attempt(out, "tail-sandwich-upper", params, [&] {
          const auto s = exact::binom_tail_sandwich(n, k, eps);
          return exact_compare("tail-sandwich-upper", params, tail, s.upper);
        });
        attempt(out, "tail-upper-bound", params, [&] {
          return exact_compare("tail-upper-bound", params, tail, exact::binom_upper_tail_bound(n, k, eps));
        });
        attempt(out, "cdf-bound", params, [&] {
          return exact_compare("cdf-bound", params, exact::binom_cdf(n, k, eps), exact::binom_cdf_bound(n, k, eps));
        });
      }
    }
  }
  return out;
}

std::vector<BoundReport> zeta_suite(const ZetaGrid& grid) {
  std::vector<BoundReport> out;
  for (const int n : grid.n) {
    for (const auto& eps : grid.eps) {
      for (const auto& beta : grid.beta) {
        const Params params{{"n", std::to_string(n)}, {"eps", to_string(eps)}, {"beta", to_string(beta)}};
        std::optional<DkiParams> p;
        try {
          p.emplace(n, eps, Rational(1), beta, BigCount(1));
          static_cast<void>(zeta1_rational(*p));
          static_cast<void>(CodebookParams(n, Rational(1), beta));
        } catch (const DomainError& e) {
          out.push_back(skipped("zeta1", params, e.what()));
          continue;
        }
        out.push_back(exact_compare("zeta1", params, exact_type1_rational(*p), zeta1_rational(*p)));

        const int radius = static_cast<int>(floor_mul(n, beta));
        for (int d = radius + 1; d <= n; ++d) {
          Params with_d = params;
          with_d.emplace_back("d", std::to_string(d));
          const DecompositionCheck check = type2_decomposition_check(d, *p);
          out.push_back(compare("type2-decomposition", with_d, LogProb::from_rational(check.joint),
                                LogProb::from_rational(check.relaxed), check.dominates()));
          out.push_back(compare("zeta0", with_d, LogProb::from_rational(check.joint), check.zeta0,
                                check.zeta0_dominates()));
        }
      }
    }
  }
  return out;
}

VolumeGrid default_volume_grid() {
  VolumeGrid g;
  for (int n = 10; n <= 1000; n += 10) g.n.push_back(n);
  g.eps = steps(Rational(1, 20), Rational(1, 2), Rational(1, 20));
  return g;
}

TailGrid default_tail_grid() {
  TailGrid g;
  for (int n = 1; n <= 30; ++n) g.n.push_back(n);
  g.eps = {Rational(1, 10), Rational(1, 4), Rational(3, 10), Rational(2, 5)};
  return g;
}

ZetaGrid default_zeta_grid() {
  ZetaGrid g;
  for (int n = 10; n <= 60; n += 10) g.n.push_back(n);
  g.eps = {Rational(1, 10), Rational(1, 5), Rational(3, 10)};
  g.beta = {Rational(1, 10), Rational(1, 5), Rational(3, 10)};
  return g;
}

}  // namespace dki
