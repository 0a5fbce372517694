// SPDX-License-Identifier: Apache-2.0
//
// Greedy packing of Hamming balls under a Hamming-weight constraint.

#pragma once

#include "dki/hamming.hpp"
#include "dki/numeric.hpp"
#include "dki/philox.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dki {

/// (n, A, beta). A >= 1 means unconstrained; the packing radius is floor(n beta).
class CodebookParams {
 public:
  CodebookParams(int n, Rational weight_fraction, Rational beta);

  [[nodiscard]] int n() const noexcept { return n_; }
  [[nodiscard]] const Rational& weight_fraction() const noexcept { return a_; }
  [[nodiscard]] const Rational& beta() const noexcept { return beta_; }

  /// floor(n beta).
  [[nodiscard]] int radius() const noexcept { return radius_; }
  /// floor(n beta) + 1.
  [[nodiscard]] int required_distance() const noexcept { return radius_ + 1; }
  /// Largest admissible weight: floor(n A) when A < 1, else n.
  [[nodiscard]] int weight_limit() const noexcept { return weight_limit_; }
  [[nodiscard]] bool weight_constrained() const noexcept { return a_ < 1; }
  /// Per-bit probability of a one when sampling candidates: min(A, 1/2).
  [[nodiscard]] Rational sampling_bias() const;

 private:
  int n_;
  Rational a_;
  Rational beta_;
  int radius_;
  int weight_limit_;
};

enum class Construction { kGreedyRandom, kExhaustive, kExternal };

[[nodiscard]] std::string to_string(Construction c);
[[nodiscard]] Construction parse_construction(std::string_view text);

struct ConstructionInfo {
  Construction kind = Construction::kExternal;
  std::optional<Seed> seed;
  std::uint64_t budget = 0;
  std::uint64_t max_size = 0;  ///< 0 means no cap
};

class Codebook {
 public:
  Codebook(CodebookParams params, std::vector<Word> words, ConstructionInfo info = {});

  [[nodiscard]] const CodebookParams& params() const noexcept { return params_; }
  [[nodiscard]] const std::vector<Word>& words() const noexcept { return words_; }
  [[nodiscard]] const ConstructionInfo& construction() const noexcept { return info_; }
  [[nodiscard]] std::size_t size() const noexcept { return words_.size(); }
  [[nodiscard]] int n() const noexcept { return params_.n(); }

  /// 1-based message index, as in c_1 ... c_M.
  [[nodiscard]] const Word& codeword(std::size_t i) const;

  /// True pairwise minimum distance; n + 1 when M < 2.
  [[nodiscard]] int min_distance() const noexcept { return min_distance_; }

 private:
  CodebookParams params_;
  std::vector<Word> words_;
  ConstructionInfo info_;
  int min_distance_;
};

/// Pairwise minimum distance of a word list; n + 1 for fewer than two words.
[[nodiscard]] int pairwise_min_distance(const std::vector<Word>& words, int n);

/// Random greedy: candidates are i.i.d. Bernoulli(min(A, 1/2)) words; a
/// candidate is kept when its weight is admissible and it lies farther than
/// floor(n beta) from every kept word. Stops after `budget` consecutive
/// rejections or once `max_size` words are kept (0 = no cap).
[[nodiscard]] Codebook gv_greedy_construct(const CodebookParams& p, Seed seed, std::uint64_t budget = 100000,
                                           std::uint64_t max_size = 0);

inline constexpr int kMaxExhaustiveLength = 20;

/// Lexicographic greedy over the whole admissible space; n <= 20.
[[nodiscard]] Codebook exhaustive_construct(const CodebookParams& p);

/// |B_0(n, weight_limit)|, the size of the admissible space.
[[nodiscard]] BigCount admissible_volume(const CodebookParams& p);

/// |B_0(n, weight_limit)| / |B(n, floor(n beta))|, exact.
[[nodiscard]] Rational gv_size_lower_bound(const CodebookParams& p);

struct Violation {
  enum class Kind { kLength, kDuplicate, kMinDistance, kWeight, kRecordedMinDistance };
  Kind kind;
  std::string detail;
};

[[nodiscard]] std::string to_string(Violation::Kind kind);

/// Recomputes every codebook invariant; an empty list means the codebook is valid.
/// recorded_min_distance, when given, is compared against the true minimum.
[[nodiscard]] std::vector<Violation> verify(const Codebook& cb, std::optional<int> recorded_min_distance = {});

/// log2(M) / n.
[[nodiscard]] double empirical_rate(const Codebook& cb);

struct CoverageCertificate {
  std::uint64_t checked = 0;
  std::uint64_t uncovered = 0;
  std::optional<Word> first_uncovered;

  [[nodiscard]] bool exhausted() const noexcept { return uncovered == 0; }
};

/// Checks by linear scan that every admissible word lies within floor(n beta)
/// of some codeword; n <= 20.
[[nodiscard]] CoverageCertificate coverage_certificate(const Codebook& cb);

/// Raised by the loader on malformed input.
class CodebookFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Versioned line-oriented text format.
void save_codebook(const Codebook& cb, std::ostream& out);

/// Parses and, when validate is set, rejects any codebook that fails verify().
[[nodiscard]] Codebook load_codebook(std::istream& in, bool validate = true);

/// Parses without validating and keeps the recorded header values.
struct LoadedCodebook {
  Codebook codebook;
  int recorded_min_distance;
  std::uint64_t recorded_size;
};
[[nodiscard]] LoadedCodebook load_codebook_raw(std::istream& in);

}  // namespace dki
