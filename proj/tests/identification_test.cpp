// SPDX-License-Identifier: Apache-2.0

#include "dki/identification.hpp"

#include "dki/binmath.hpp"
#include "dki/exact.hpp"
#include "support/generators.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <map>

namespace dki {
namespace {

DkiParams make(int n, Rational eps, Rational beta, BigCount k = 1, Rational a = 1) {
  return {n, eps, std::move(a), std::move(beta), std::move(k)};
}

TEST(DkiParams, ThresholdIsExact) {
  const DkiParams p = make(100, Rational(1, 10), Rational(1, 5));
  EXPECT_EQ(p.delta(), Rational(7, 50));
  EXPECT_EQ(decoding_threshold(p), 14);
  EXPECT_EQ(p.tau(), Rational(1, 20));
  EXPECT_EQ(decoding_threshold(make(100, Rational(1, 10), Rational(0))), 10);
  EXPECT_EQ(decoding_threshold(make(100, Rational(1, 10), Rational(1, 1000000))), 10);
  EXPECT_THROW(make(100, Rational(1, 10), Rational(1)), DomainError);
  EXPECT_THROW(make(100, Rational(1, 2), Rational(1, 5)), DomainError);
  EXPECT_THROW(make(100, Rational(1, 10), Rational(1, 5), 0), DomainError);
}

TEST(DkiParams, ThresholdStrictlyInsideRegion) {
  testing::Gen gen(71);
  for (int trial = 0; trial < 2000; ++trial) {
    const Rational eps = gen.rational_below(Rational(1, 2));
    const Rational beta = gen.rational_below(Rational(1));
    const int n = gen.integer(1, 5000);
    const DkiParams p = make(n, eps, beta);
    EXPECT_GT(p.delta(), eps);
    EXPECT_LT(p.delta(), (1 - beta) * eps + beta / 2);
    EXPECT_LT(Rational(n) * eps, p.threshold() + 1);
    EXPECT_LT(p.tau(), eps);
  }
}

TEST(TargetSize, FromKappa) {
  EXPECT_EQ(target_size_from_kappa(10, Rational(1, 2)), 32);
  EXPECT_EQ(target_size_from_kappa(3, Rational(1, 3)), 2);
  EXPECT_EQ(target_size_from_kappa(1, Rational(1, 2)), 2);
  EXPECT_EQ(target_size_from_kappa(7, Rational(0)), 1);
  // ceil(2^{100 * 0.3 + 0.5}) = ceil(2^30 sqrt 2) = 1518500250.
  EXPECT_EQ(target_size_from_kappa(101, Rational(61, 202)), BigCount(1518500250));
  EXPECT_THROW(static_cast<void>(target_size_from_kappa(1000, Rational(1, 2))), DomainError);
  EXPECT_THROW(static_cast<void>(target_size_from_kappa(10, Rational(-1, 2))), DomainError);

  const Rational half_kappa = exact_rational(0.01155378200411782 / 2);
  EXPECT_EQ(DkiParams::with_kappa(50, Rational(1, 10), 1, Rational(1, 5), half_kappa).k(), 2);
  EXPECT_EQ(DkiParams::with_kappa(100, Rational(1, 10), 1, Rational(1, 5), half_kappa).k(), 2);
  EXPECT_EQ(DkiParams::with_kappa(200, Rational(1, 10), 1, Rational(1, 5), half_kappa).k(), 3);
}

TEST(TargetSet, Validation) {
  const TargetSet ks({5, 2, 9}, 10);
  EXPECT_EQ(ks.indices(), (std::vector<std::size_t>{2, 5, 9}));
  EXPECT_TRUE(ks.contains(5));
  EXPECT_FALSE(ks.contains(4));
  EXPECT_THROW(TargetSet({1, 1}, 10), DomainError);
  EXPECT_THROW(TargetSet({0}, 10), DomainError);
  EXPECT_THROW(TargetSet({11}, 10), DomainError);
}

TEST(TargetSet, RandomIsDeterministicAndRespectsConstraints) {
  for (std::uint64_t s = 0; s < 200; ++s) {
    const TargetSet a = random_target_set(30, 7, Seed{s, 1}, 4);
    EXPECT_EQ(a.indices(), random_target_set(30, 7, Seed{s, 1}, 4).indices());
    EXPECT_EQ(a.size(), 7U);
    EXPECT_TRUE(a.contains(4));
    const TargetSet b = random_target_set(30, 29, Seed{s, 2}, {}, 4);
    EXPECT_FALSE(b.contains(4));
    EXPECT_EQ(b.size(), 29U);
  }
  EXPECT_THROW(static_cast<void>(random_target_set(5, 6, Seed{1, 0})), DomainError);
  EXPECT_THROW(static_cast<void>(random_target_set(5, 5, Seed{1, 0}, {}, 2)), DomainError);
  EXPECT_THROW(static_cast<void>(random_target_set(5, 2, Seed{1, 0}, 3, 3)), DomainError);
}

TEST(TargetSet, RandomIsUniform) {
  constexpr int kDraws = 20000;
  std::map<std::size_t, int> counts;
  for (int s = 0; s < kDraws; ++s) {
    const TargetSet ks = random_target_set(10, 3, Seed{static_cast<std::uint64_t>(s), 9});
    for (const auto i : ks.indices()) ++counts[i];
  }
  // Each index appears with probability 3/10.
  const double sd = std::sqrt(kDraws * 0.3 * 0.7);
  for (std::size_t i = 1; i <= 10; ++i) EXPECT_NEAR(counts[i], kDraws * 0.3, 4.5 * sd) << i;
}

TEST(TargetSet, Nearest) {
  const CodebookParams cp(6, Rational(1), Rational(1, 6));
  const Codebook cb(cp, {Word::from_bits("000000"), Word::from_bits("111111"), Word::from_bits("000011"),
                         Word::from_bits("001111"), Word::from_bits("110000")});
  EXPECT_EQ(nearest_target_set(cb, 1, 2).indices(), (std::vector<std::size_t>{3, 5}));
  EXPECT_EQ(nearest_target_set(cb, 1, 3).indices(), (std::vector<std::size_t>{3, 4, 5}));
  EXPECT_THROW(static_cast<void>(nearest_target_set(cb, 1, 5)), DomainError);
}

TEST(Identify, FrozenCases) {
  testing::Gen gen(72);
  const auto words = gen.packing(12, 6, 20);
  const CodebookParams cp(12, Rational(1), Rational(5, 12));
  const Codebook cb(cp, words);
  ASSERT_GE(cb.size(), 4U);
  const TargetSet ks({1, 2}, cb.size());
  EXPECT_TRUE(identify(cb.codeword(1), cb, ks, 0));
  EXPECT_TRUE(identify(gen.word(12), cb, ks, 12));
  // min distance 6 = 2 thr + 2 with thr = 2.
  EXPECT_FALSE(identify(cb.codeword(3), cb, ks, 2));
  EXPECT_THROW(static_cast<void>(identify(Word(11), cb, ks, 2)), DomainError);
}

TEST(Identify, MonotoneInThresholdAndTargets) {
  testing::Gen gen(73);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = gen.integer(4, 40);
    const auto words = gen.packing(n, 1, static_cast<std::size_t>(gen.integer(2, 12)));
    const Codebook cb(CodebookParams(n, Rational(1), Rational(1, n)), words);
    const std::size_t m = cb.size();
    const std::size_t k = static_cast<std::size_t>(gen.integer(1, static_cast<int>(m)));
    const TargetSet small = random_target_set(m, k, Seed{static_cast<std::uint64_t>(trial), 0});
    std::vector<std::size_t> bigger = small.indices();
    for (std::size_t j = 1; j <= m; ++j) {
      if (!small.contains(j) && gen.coin()) bigger.push_back(j);
    }
    const TargetSet large(bigger, m);
    const Word y = gen.word(n);
    bool previous = false;
    for (int thr = 0; thr <= n; ++thr) {
      const bool hit = identify(y, cb, small, thr);
      EXPECT_TRUE(!previous || hit);
      EXPECT_TRUE(!hit || identify(y, cb, large, thr));
      previous = hit;
    }
    EXPECT_TRUE(previous);
  }
}

TEST(ExactType1, FrozenValues) {
  // thr = 0 at n = 3: 1 - 0.9^3.
  EXPECT_EQ(exact_type1_rational(make(3, Rational(1, 10), Rational(1, 10))), Rational(271, 1000));
  EXPECT_NEAR(exact_type1(make(3, Rational(1, 10), Rational(1, 10))).linear(), 0.271, 1e-15);
  const DkiParams p = make(100, Rational(1, 10), Rational(1, 5));
  EXPECT_EQ(exact_type1_rational(p), exact::binom_upper_tail(100, 15, Rational(1, 10)));
  EXPECT_NEAR(exact_type1(p).log2_value(), log2_of(exact_type1_rational(p)), 1e-10);
  EXPECT_LE(exact_type1(p), analytic_bounds(p).zeta1);
}

TEST(AnalyticBounds, FrozenValues) {
  const AnalyticBounds b = analytic_bounds(make(100, Rational(1, 10), Rational(1, 5)));
  EXPECT_DOUBLE_EQ(b.tau, 0.05);
  EXPECT_NEAR(b.kappa_max, 0.01155378200411782, 1e-15);
  EXPECT_THROW(static_cast<void>(analytic_bounds(make(100, Rational(1, 10), Rational(0)))), DomainError);
  EXPECT_THROW(static_cast<void>(zeta1_rational(make(100, Rational(1, 10), Rational(0)))), DomainError);
  // Large beta drives tau below zero and the zeta0 event is empty.
  const AnalyticBounds wide = analytic_bounds(make(100, Rational(1, 10), Rational(2, 5)));
  EXPECT_LT(wide.tau, 0.0);
  EXPECT_TRUE(wide.zeta0.is_zero());
}

TEST(AnalyticBounds, Zeta1DominatesExactTail) {
  for (const int n : {50, 100, 200, 400}) {
    const DkiParams p = make(n, Rational(1, 10), Rational(1, 5));
    EXPECT_GE(zeta1_rational(p), exact_type1_rational(p)) << n;
    EXPECT_NEAR(analytic_bounds(p).zeta1.log2_value(), log2_of(zeta1_rational(p)), 1e-9) << n;
  }
}

TEST(AnalyticBounds, TauBelowEpsAndKappaPositiveOnGrid) {
  int points = 0;
  for (int e = 1; e <= 9; ++e) {
    for (int b = 1; b <= 8; ++b) {
      const DkiParams p = make(100, Rational(e, 20), Rational(b, 20));
      const AnalyticBounds bounds = analytic_bounds(p);
      EXPECT_LT(bounds.tau, to_double(p.eps()));
      EXPECT_GT(bounds.kappa_max, 0.0);
      ++points;
    }
  }
  EXPECT_GE(points, 50);
}

TEST(AnalyticBounds, Type2BoundDecays) {
  const double kappa = kappa_region(Rational(1, 10), Rational(1, 5)).asymptotic / 2;
  const Rational kappa_exact = exact_rational(kappa);
  double previous = INFINITY;
  for (const int n : {200, 400, 800, 1600}) {
    const auto p = DkiParams::with_kappa(n, Rational(1, 10), 1, Rational(1, 5), kappa_exact);
    const double bound = analytic_bounds(p).type2_bound.log2_value();
    EXPECT_LT(bound, previous) << n;
    previous = bound;
  }
  EXPECT_LE(previous, 0.0);
}

TEST(KappaRegion, FrozenValues) {
  const KappaRegion r = kappa_region(Rational(1, 10), Rational(1, 5));
  EXPECT_NEAR(r.theorem, 0.042512547976386368, 1e-15);
  EXPECT_NEAR(r.asymptotic, 0.01155378200411782, 1e-15);
  EXPECT_THROW(static_cast<void>(kappa_region(Rational(1, 2), Rational(1, 5))), DomainError);
  EXPECT_THROW(static_cast<void>(kappa_region(Rational(1, 10), Rational(0))), DomainError);
}

TEST(KappaRegion, OrderingAndVanishingBeta) {
  for (int e = 1; e <= 9; ++e) {
    double previous_theorem = INFINITY;
    for (const Rational beta : {Rational(1, 2), Rational(1, 10), Rational(1, 100), Rational(1, 10000)}) {
      const KappaRegion r = kappa_region(Rational(e, 20), beta);
      EXPECT_GT(r.asymptotic, 0.0);
      EXPECT_GT(r.theorem, r.asymptotic);
      EXPECT_LT(r.theorem, previous_theorem);
      previous_theorem = r.theorem;
    }
    EXPECT_LT(previous_theorem, 1e-6);
  }
}

TEST(Capacity, FrozenValues) {
  EXPECT_EQ(dki_capacity(Rational(1, 2)), 1.0);
  EXPECT_EQ(dki_capacity(Rational(2)), 1.0);
  EXPECT_NEAR(dki_capacity(Rational(11, 100)), 0.49991595816452800, 1e-15);
  EXPECT_NEAR(dki_capacity(Rational(1, 4)), 0.81127812445913286, 1e-15);
  EXPECT_NEAR(dki_capacity(Rational(499999, 1000000)), 1.0, 1e-10);
  EXPECT_THROW(static_cast<void>(dki_capacity(Rational(0))), DomainError);
}

}  // namespace
}  // namespace dki
