// SPDX-License-Identifier: Apache-2.0

#include "dki/codebook.hpp"

#include "dki/binmath.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>

namespace dki {

namespace {

int checked_radius(int n, const Rational& beta) {
  if (n < 1 || n > Word::kMaxLength) throw DomainError("codeword length out of range");
  if (beta <= 0) throw DomainError("beta must be positive, got " + to_string(beta));
  const auto r = floor_mul(n, beta);
  if (r + 1 > n) throw DomainError("floor(n beta) + 1 must not exceed n");
  return static_cast<int>(r);
}

int checked_weight_limit(int n, const Rational& a) {
  if (a < 0) throw DomainError("weight fraction must be nonnegative, got " + to_string(a));
  if (a >= 1) return n;
  return static_cast<int>(floor_mul(n, a));
}

Word sample_candidate(int n, const Rational& bias, double bias_value, PhiloxEngine& rng) {
  Word w(n);
  if (bias * 2 == 1) {
    for (int t = 1; t <= n; t += 64) {
      const std::uint64_t bits = rng();
      for (int j = 0; j < 64 && t + j <= n; ++j) {
        if ((bits >> j) & 1U) w.set(t + j, true);
      }
    }
    return w;
  }
  for (int t = 1; t <= n; ++t) {
    if (rng.uniform() < bias_value) w.set(t, true);
  }
  return w;
}

bool far_from_all(const Word& candidate, const std::vector<Word>& words, int radius) {
  return std::all_of(words.begin(), words.end(), [&](const Word& c) { return distance(candidate, c) > radius; });
}

// Marks every value within distance r of center.
void mark_ball(std::vector<bool>& covered, std::uint64_t center, int n, int r) {
  const std::uint64_t end = std::uint64_t{1} << n;
  covered[center] = true;
  for (int w = 1; w <= std::min(r, n); ++w) {
    for (std::uint64_t mask = (std::uint64_t{1} << w) - 1; mask < end;) {
      covered[center ^ mask] = true;
      const std::uint64_t low = mask & (~mask + 1);
      const std::uint64_t ripple = mask + low;
      mask = (((ripple ^ mask) >> 2) / low) | ripple;
    }
  }
}

}  // namespace

CodebookParams::CodebookParams(int n, Rational weight_fraction, Rational beta)
    : n_(n),
      a_(std::move(weight_fraction)),
      beta_(std::move(beta)),
      radius_(checked_radius(n, beta_)),
      weight_limit_(checked_weight_limit(n, a_)) {}

Rational CodebookParams::sampling_bias() const { return a_ * 2 < 1 ? a_ : Rational(1, 2); }

std::string to_string(Construction c) {
  switch (c) {
    case Construction::kGreedyRandom:
      return "greedy-random";
    case Construction::kExhaustive:
      return "exhaustive";
    case Construction::kExternal:
      return "external";
  }
  return "external";
}

Construction parse_construction(std::string_view text) {
  if (text == "greedy-random") return Construction::kGreedyRandom;
  if (text == "exhaustive") return Construction::kExhaustive;
  if (text == "external") return Construction::kExternal;
  throw DomainError("unknown construction '" + std::string(text) + "'");
}

Codebook::Codebook(CodebookParams params, std::vector<Word> words, ConstructionInfo info)
    : params_(std::move(params)),
      words_(std::move(words)),
      info_(info),
      min_distance_(pairwise_min_distance(words_, params_.n())) {}

const Word& Codebook::codeword(std::size_t i) const {
  if (i < 1 || i > words_.size()) {
    throw DomainError("message index " + std::to_string(i) + " outside [1, " + std::to_string(words_.size()) + "]");
  }
  return words_[i - 1];
}

namespace {

// Minimum pairwise distance; pairs closer than `report_below` go to on_close.
int scan_pairs(const std::vector<Word>& words, int n, int report_below,
               const std::function<void(std::size_t, std::size_t, int)>& on_close) {
  int best = n + 1;
  if (words.size() < 2) return best;
  const auto limbs = words.front().limbs().size();
  for (const auto& w : words) {
    if (w.limbs().size() != limbs) throw DomainError("word length mismatch");
  }
  // Flat copy keeps the O(M^2) scan cache-friendly.
  std::vector<std::uint64_t> flat;
  flat.reserve(words.size() * limbs);
  for (const auto& w : words) flat.insert(flat.end(), w.limbs().begin(), w.limbs().end());
  for (std::size_t i = 0; i < words.size(); ++i) {
    const std::uint64_t* a = flat.data() + i * limbs;
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      const std::uint64_t* b = flat.data() + j * limbs;
      int d = 0;
      for (std::size_t k = 0; k < limbs; ++k) d += std::popcount(a[k] ^ b[k]);
      best = std::min(best, d);
      if (d < report_below) on_close(i, j, d);
    }
  }
  return best;
}

}  // namespace

int pairwise_min_distance(const std::vector<Word>& words, int n) { return scan_pairs(words, n, 0, {}); }

Codebook gv_greedy_construct(const CodebookParams& p, Seed seed, std::uint64_t budget, std::uint64_t max_size) {
  if (p.n() < 2) throw DomainError("greedy construction requires n >= 2");
  if (budget < 1) throw DomainError("rejection budget must be at least 1");
  ConstructionInfo info{Construction::kGreedyRandom, seed, budget, max_size};
  if (p.weight_fraction() == 0) return Codebook(p, {Word(p.n())}, info);

  const Rational bias = p.sampling_bias();
  const double bias_value = to_double(bias);
  PhiloxEngine rng(seed);
  std::vector<Word> words;
  std::uint64_t rejections = 0;
  while (rejections < budget && (max_size == 0 || words.size() < max_size)) {
    Word candidate = sample_candidate(p.n(), bias, bias_value, rng);
    if (weight(candidate) <= p.weight_limit() && far_from_all(candidate, words, p.radius())) {
      words.push_back(std::move(candidate));
      rejections = 0;
    } else {
      ++rejections;
    }
  }
  return Codebook(p, std::move(words), info);
}

Codebook exhaustive_construct(const CodebookParams& p) {
  const int n = p.n();
  if (n > kMaxExhaustiveLength) {
    throw DomainError("exhaustive construction supports n <= " + std::to_string(kMaxExhaustiveLength));
  }
  const std::uint64_t end = std::uint64_t{1} << n;
  std::vector<bool> covered(end, false);
  std::vector<Word> words;
  for (std::uint64_t v = 0; v < end; ++v) {
    if (covered[v] || std::popcount(v) > p.weight_limit()) continue;
    words.push_back(Word::from_value(n, v));
    mark_ball(covered, v, n, p.radius());
  }
  return Codebook(p, std::move(words), ConstructionInfo{Construction::kExhaustive, std::nullopt, 0, 0});
}

BigCount admissible_volume(const CodebookParams& p) { return ball_volume(p.n(), p.weight_limit()); }

Rational gv_size_lower_bound(const CodebookParams& p) {
  return Rational(admissible_volume(p), ball_volume(p.n(), p.radius()));
}

std::string to_string(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::kLength:
      return "length";
    case Violation::Kind::kDuplicate:
      return "duplicate";
    case Violation::Kind::kMinDistance:
      return "min-distance";
    case Violation::Kind::kWeight:
      return "weight";
    case Violation::Kind::kRecordedMinDistance:
      return "recorded-min-distance";
  }
  return "unknown";
}

std::vector<Violation> verify(const Codebook& cb, std::optional<int> recorded_min_distance) {
  std::vector<Violation> out;
  const auto& words = cb.words();
  const auto& p = cb.params();
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (words[i].size() != p.n()) {
      out.push_back({Violation::Kind::kLength, "word " + std::to_string(i + 1) + " has length " +
                                                   std::to_string(words[i].size())});
    }
  }
  if (!out.empty()) return out;

  for (std::size_t i = 0; i < words.size(); ++i) {
    if (weight(words[i]) > p.weight_limit()) {
      out.push_back({Violation::Kind::kWeight, "word " + std::to_string(i + 1) + " has weight " +
                                                   std::to_string(weight(words[i])) + " > " +
                                                   std::to_string(p.weight_limit())});
    }
  }
  const int actual = scan_pairs(words, p.n(), p.required_distance(), [&](std::size_t i, std::size_t j, int d) {
    const std::string pair = std::to_string(i + 1) + "," + std::to_string(j + 1);
    if (d == 0) {
      out.push_back({Violation::Kind::kDuplicate, "words " + pair + " are equal"});
    } else {
      out.push_back({Violation::Kind::kMinDistance, "words " + pair + " at distance " + std::to_string(d) + " < " +
                                                        std::to_string(p.required_distance())});
    }
  });
  if (actual != cb.min_distance() || (recorded_min_distance && *recorded_min_distance != actual)) {
    out.push_back({Violation::Kind::kRecordedMinDistance,
                   "recorded min distance " + std::to_string(recorded_min_distance.value_or(cb.min_distance())) +
                       " but true minimum is " + std::to_string(actual)});
  }
  return out;
}

double empirical_rate(const Codebook& cb) {
  if (cb.size() == 0) throw DomainError("rate of an empty codebook is undefined");
  return std::log2(static_cast<double>(cb.size())) / cb.n();
}

CoverageCertificate coverage_certificate(const Codebook& cb) {
  const int n = cb.n();
  if (n > kMaxExhaustiveLength) throw DomainError("coverage certificate supports n <= 20");
  std::vector<std::uint64_t> values;
  values.reserve(cb.size());
  for (const auto& w : cb.words()) values.push_back(w.value());
  const int r = cb.params().radius();
  CoverageCertificate cert;
  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::uint64_t v = 0; v < end; ++v) {
    if (std::popcount(v) > cb.params().weight_limit()) continue;
    ++cert.checked;
    const bool hit = std::any_of(values.begin(), values.end(),
                                 [&](std::uint64_t c) { return std::popcount(c ^ v) <= r; });
    if (!hit) {
      if (cert.uncovered == 0) cert.first_uncovered = Word::from_value(n, v);
      ++cert.uncovered;
    }
  }
  return cert;
}

}  // namespace dki
