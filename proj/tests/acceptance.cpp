// SPDX-License-Identifier: Apache-2.0
//
// Acceptance run: one PASS/FAIL line per criterion. Exit status is nonzero if
// any criterion fails. All tolerances and limits are fixed below.

#include "commands.hpp"
#include "dki/binmath.hpp"
#include "dki/bounds.hpp"
#include "dki/codebook.hpp"
#include "dki/estimate.hpp"
#include "dki/identification.hpp"
#include "dki/oracle.hpp"
#include "support/generators.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

using namespace dki;
using Clock = std::chrono::steady_clock;

constexpr double kCapacityTol = 1e-12;
constexpr double kConverseTol = 1e-12;
constexpr double kType1Tol = 1e-12;
constexpr double kKappaTol = 1e-4;
constexpr double kExponentZeroTol = 1e-10;
constexpr double kConvexSlack = 1e-12;  // rounding allowance on the linear branch
constexpr int kCalibrationMinCovered = 93;

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;  // 0: no runtime limit
  std::function<Outcome()> run;
};

std::string fmt(const char* pattern, auto... args) {
  std::array<char, 512> buf{};
  std::snprintf(buf.data(), buf.size(), pattern, args...);
  return buf.data();
}

unsigned lanes() { return std::max(1U, std::thread::hardware_concurrency()); }

// H(k/20) for k = 1..9, 40-digit reference.
constexpr std::array<double, 9> kEntropyTwentieths = {
    0.28639695711595612877, 0.46899559358928122125, 0.60984030471640042364,
    0.72192809488736234787, 0.81127812445913286391, 0.88129089923069261822,
    0.93406805537549100601, 0.970950594454668639,   0.99277445398780829365,
};

Outcome capacity_formula() {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run({"--no-timestamp", "capacity", "--A", "0.05:1.5:0.05"}, out, err);
  if (code != cli::kOk) return {false, "capacity exited " + std::to_string(code) + ": " + err.str()};
  std::istringstream in(out.str());
  int rows = 0;
  double worst = 0.0;
  bool header = true;
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    if (header) {
      header = false;
      continue;
    }
    ++rows;
    const auto comma = line.find(',');
    const double got = std::stod(line.substr(comma + 1));
    const double want = rows < 10 ? kEntropyTwentieths[static_cast<std::size_t>(rows - 1)] : 1.0;
    worst = std::max(worst, std::abs(got - want));
  }
  return {rows == 30 && worst <= kCapacityTol, fmt("rows=%d max_abs_err=%.3g tol=%.0e", rows, worst, kCapacityTol)};
}

Outcome converse_identity() {
  testing::Gen gen(2, 0);
  const std::array<Rational, 4> betas = {Rational(1, 10), Rational(1, 5), Rational(1, 4), Rational(3, 10)};
  int failures = 0;
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const int n = gen.integer(4, 12);
    const Rational beta = betas[static_cast<std::size_t>(gen.integer(0, 3))];
    const CodebookParams cp(n, 1, beta);
    auto words = gen.packing(n, cp.required_distance(), 24);
    const std::size_t i1 = static_cast<std::size_t>(gen.integer(1, static_cast<int>(words.size())));
    words.push_back(words[i1 - 1]);
    const Codebook cb(cp, std::move(words));
    const std::size_t i2 = cb.size();
    const Rational eps = gen.rational_below(Rational(1, 2));
    const std::size_t k = static_cast<std::size_t>(gen.integer(1, static_cast<int>(std::min<std::size_t>(4, cb.size() - 1))));
    const TargetSet ks = random_target_set(cb.size(), k, Seed{3, static_cast<std::uint64_t>(trial)}, i1, i2);
    const DkiParams p(n, eps, 1, beta, k);
    const Rational sum = brute_force_type1(cb, i1, ks, p) + brute_force_type2(cb, i2, ks, p);
    const double err = std::abs(to_double(sum - 1));
    worst = std::max(worst, err);
    if (err > kConverseTol) ++failures;
  }
  return {failures == 0, fmt("instances=50 failures=%d max_abs_err=%.3g tol=%.0e", failures, worst, kConverseTol)};
}

Outcome type1_exactness() {
  testing::Gen gen(3, 0);
  int k1_failures = 0;
  int dominance_violations = 0;
  int dominance_checked = 0;
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = gen.integer(4, 12);
    const Rational beta(gen.integer(1, 3), 10);
    const CodebookParams cp(n, 1, beta);
    const Codebook cb(cp, gen.packing(n, cp.required_distance(), 32));
    const Rational eps = gen.rational_below(Rational(1, 2));
    const std::size_t i = static_cast<std::size_t>(gen.integer(1, static_cast<int>(cb.size())));
    const Rational exact = exact_type1_rational(DkiParams(n, eps, 1, beta, 1));

    const Rational brute = brute_force_type1(cb, i, TargetSet({i}, cb.size()), DkiParams(n, eps, 1, beta, 1));
    const double err = std::abs(to_double(brute - exact));
    worst = std::max(worst, err);
    if (err > kType1Tol) ++k1_failures;

    for (std::size_t k = 1; k <= std::min<std::size_t>(4, cb.size()); ++k) {
      const TargetSet ks = random_target_set(cb.size(), k, Seed{4, static_cast<std::uint64_t>(trial)}, i);
      const DkiParams p(n, eps, 1, beta, k);
      ++dominance_checked;
      if (brute_force_type1(cb, i, ks, p) > exact_type1_rational(p)) ++dominance_violations;
    }
  }
  return {k1_failures == 0 && dominance_violations == 0,
          fmt("K=1 instances=100 failures=%d max_abs_err=%.3g tol=%.0e; union dominance checked=%d violations=%d",
              k1_failures, worst, kType1Tol, dominance_checked, dominance_violations)};
}

Outcome bound_suites() {
  VolumeGrid vg = default_volume_grid();
  vg.n.clear();
  for (int n = 10; n <= 1000; ++n) vg.n.push_back(n);
  const auto volumes = volume_suite(vg);
  const auto tails = tail_suite(default_tail_grid());
  const auto count = [](const std::vector<BoundReport>& rs, BoundReport::Status s) {
    return std::count_if(rs.begin(), rs.end(), [s](const BoundReport& r) { return r.status == s; });
  };
  const auto vv = count(volumes, BoundReport::Status::kViolated);
  const auto tv = count(tails, BoundReport::Status::kViolated);
  return {vv == 0 && tv == 0 && count(volumes, BoundReport::Status::kHolds) > 0 &&
              count(tails, BoundReport::Status::kHolds) > 0,
          fmt("volume rows=%zu violations=%ld; tail rows=%zu holds=%ld violations=%ld", volumes.size(),
              static_cast<long>(vv), tails.size(), static_cast<long>(count(tails, BoundReport::Status::kHolds)),
              static_cast<long>(tv))};
}

Outcome gv_construction() {
  int builds = 0;
  int failures = 0;
  std::string first;
  for (int n = 10; n <= 16; ++n) {
    for (const Rational a : {Rational(3, 10), Rational(1, 2), Rational(1)}) {
      for (const Rational beta : {Rational(1, 10), Rational(1, 5)}) {
        const CodebookParams cp(n, a, beta);
        const Codebook cb = exhaustive_construct(cp);
        ++builds;
        const bool ok = verify(cb).empty() && cb.min_distance() >= cp.required_distance() &&
                        Rational(cb.size()) >= gv_size_lower_bound(cp) &&
                        BigCount(cb.size()) <= admissible_volume(cp) && coverage_certificate(cb).exhausted();
        if (!ok) {
          ++failures;
          if (first.empty()) first = fmt(" first=(n=%d,A=%s,beta=%s)", n, to_string(a).c_str(), to_string(beta).c_str());
        }
      }
    }
  }
  return {builds == 42 && failures == 0, fmt("builds=%d failures=%d", builds, failures) + first};
}

Outcome calibration() {
  const int n = 12;
  const Rational eps(1, 10);
  const Rational beta(1, 5);
  const Codebook cb = exhaustive_construct(CodebookParams(n, 1, beta));
  const std::size_t i = 1;
  constexpr std::uint64_t kTrials = 100000;
  constexpr int kSeeds = 100;
  bool pass = true;
  std::string detail = fmt("M=%zu", cb.size());
  std::uint64_t cell = 0;
  for (const std::size_t k : {1U, 2U, 4U}) {
    const DkiParams p(n, eps, 1, beta, k);
    for (const ErrorType type : {ErrorType::kTypeI, ErrorType::kTypeII}) {
      ++cell;
      const bool type1 = type == ErrorType::kTypeI;
      const TargetSet ks = type1 ? random_target_set(cb.size(), k, Seed{5, cell}, i) : nearest_target_set(cb, i, k);
      const Rational exact_r = type1 ? brute_force_type1(cb, i, ks, p) : brute_force_type2(cb, i, ks, p);
      const double exact = to_double(exact_r);
      int covered = 0;
      for (int s = 1; s <= kSeeds; ++s) {
        const ErrorEstimate e = mc_estimate(cb, ks, i, p, kTrials, Seed{static_cast<std::uint64_t>(s), cell}, lanes());
        if (e.ci_low <= exact && exact <= e.ci_high) ++covered;
      }
      pass = pass && covered >= kCalibrationMinCovered;
      detail += fmt("; K=%zu %s p=%.4g covered=%d/%d", k, to_string(type), exact, covered, kSeeds);
    }
  }
  return {pass, detail + fmt(" (need >= %d)", kCalibrationMinCovered)};
}

Outcome kappa_and_decay() {
  namespace mp = boost::multiprecision;
  using Big = mp::cpp_bin_float_50;
  const Rational eps(1, 10);
  const Rational beta(1, 5);
  const double kappa_max = kappa_region(eps, beta).asymptotic;

  // Divergence of the threshold fraction from eps, at 50 digits.
  const Big e = Big(1) / 10;
  const Big b = Big(1) / 5;
  const Big delta = (1 - b / 2) * e + b / 4;
  const Big ln2 = mp::log(Big(2));
  const Big reference = (delta * mp::log(delta / e) + (1 - delta) * mp::log((1 - delta) / (1 - e))) / ln2;
  const double kappa_err = std::abs(kappa_max - reference.convert_to<double>());
  const bool kappa_ok = kappa_err <= kKappaTol && std::abs(kappa_max - 0.01155) <= kKappaTol;

  const Rational kappa = exact_rational(kappa_max / 2);
  std::vector<double> bound_log2;
  for (const int n : {200, 400, 800, 1600}) {
    bound_log2.push_back(analytic_bounds(DkiParams::with_kappa(n, eps, 1, beta, kappa)).type2_bound.log2_value());
  }
  bool decreasing = true;
  for (std::size_t t = 1; t < bound_log2.size(); ++t) decreasing = decreasing && bound_log2[t] < bound_log2[t - 1];

  std::vector<ErrorEstimate> mc;
  std::string mc_detail;
  for (const int n : {50, 100, 200}) {
    const DkiParams p = DkiParams::with_kappa(n, eps, 1, beta, kappa);
    const Codebook cb = gv_greedy_construct(p.codebook_params(), Seed{7, 0}, 100000, 256);
    const auto k = p.k().convert_to<std::size_t>();
    const TargetSet ks = nearest_target_set(cb, 1, k);
    mc.push_back(mc_estimate(cb, ks, 1, p, 10000, Seed{7, static_cast<std::uint64_t>(n)}, lanes()));
    mc_detail += fmt(" n=%d:K=%zu,p_hat=%.3g[%.3g,%.3g]", n, k, mc.back().p_hat, mc.back().ci_low, mc.back().ci_high);
  }
  bool non_increasing = true;
  for (std::size_t t = 1; t < mc.size(); ++t) non_increasing = non_increasing && mc[t].ci_low <= mc[t - 1].ci_high;

  return {kappa_ok && decreasing && non_increasing,
          fmt("kappa_max=%.17g ref=%.17g err=%.3g tol=%.0e; log2 K(z0+z1) at n=200..1600: %.4g %.4g %.4g %.4g "
              "decreasing=%d; MC non-increasing=%d;",
              kappa_max, reference.convert_to<double>(), kappa_err, kKappaTol, bound_log2[0], bound_log2[1],
              bound_log2[2], bound_log2[3], decreasing ? 1 : 0, non_increasing ? 1 : 0) +
              mc_detail};
}

Outcome decomposition() {
  const std::array<Rational, 5> eps_grid = {Rational(1, 20), Rational(1, 10), Rational(1, 5), Rational(3, 10),
                                            Rational(2, 5)};
  const std::array<Rational, 4> beta_grid = {Rational(1, 10), Rational(1, 5), Rational(3, 10), Rational(2, 5)};
  int checked = 0;
  int violations = 0;
  for (int n = 1; n <= 12; ++n) {
    for (const auto& beta : beta_grid) {
      const CodebookParams cp(n, 1, beta);
      for (int d = cp.required_distance(); d <= n; ++d) {
        Word far(n);
        for (int t = 1; t <= d; ++t) far.set(t, true);
        const Codebook cb(cp, {Word(n), far});
        for (const auto& eps : eps_grid) {
          const DkiParams p(n, eps, 1, beta, 1);
          ++checked;
          if (!type2_decomposition_check(cb, 1, 2, p).dominates()) ++violations;
        }
      }
    }
  }
  return {checked > 0 && violations == 0, fmt("instances=%d violations=%d", checked, violations)};
}

Outcome error_exponent_shape() {
  double worst_zero = 0.0;
  for (int k = 1; k <= 9; ++k) {
    const double eps = 0.05 * k;
    const double c = 1.0 - binary_entropy(Probability(eps));
    worst_zero = std::max(worst_zero, std::abs(error_exponent(c, Probability(eps)).value));
  }
  const Probability eps(0.1);
  const double capacity = 1.0 - binary_entropy(eps);
  constexpr int kPoints = 50;
  std::vector<double> e;
  for (int k = 0; k < kPoints; ++k) e.push_back(error_exponent(capacity * k / kPoints, eps).value);
  int not_decreasing = 0;
  int not_convex = 0;
  for (std::size_t k = 1; k < e.size(); ++k) {
    if (!(e[k] < e[k - 1])) ++not_decreasing;
    if (k + 1 < e.size() && e[k] > 0.5 * (e[k - 1] + e[k + 1]) + kConvexSlack) ++not_convex;
  }
  return {worst_zero <= kExponentZeroTol && not_decreasing == 0 && not_convex == 0,
          fmt("max |E_r(C)|=%.3g tol=%.0e; sweep points=%d non-decreasing steps=%d convexity breaks=%d slack=%.0e",
              worst_zero, kExponentZeroTol, kPoints, not_decreasing, not_convex, kConvexSlack)};
}

Outcome determinism() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "dki_acceptance_determinism";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const std::string book = (dir / "book.cb").string();
  std::ostringstream sink;
  if (cli::run({"--out", book, "codebook", "build", "--n", "12", "--beta", "1/5", "--construction", "exhaustive"},
               sink, sink) != cli::kOk) {
    return {false, "could not build the codebook"};
  }
  const std::vector<std::vector<std::string>> commands = {
      {"capacity"},
      {"kappa-region"},
      {"bounds", "--suite", "volumes", "--n", "10:200:10"},
      {"bounds", "--suite", "tails", "--n", "1:15:1"},
      {"bounds", "--suite", "zeta", "--n", "10,20"},
      {"codebook", "build", "--n", "24", "--beta", "1/5", "--max-size", "128"},
      {"codebook", "build", "--n", "12", "--A", "1/2", "--beta", "1/10", "--construction", "exhaustive"},
      {"codebook", "verify", "--in", book, "--coverage"},
      {"codebook", "stats", "--in", book},
      {"simulate", "--codebook", book, "--eps", "1/10", "--K", "4", "--threads", "4"},
      {"simulate", "--codebook", book, "--eps", "1/10", "--kappa", "1/10", "--targets", "nearest"},
      {"oracle", "--codebook", book, "--eps", "1/10", "--K", "2"},
      {"oracle", "--codebook", book, "--eps", "1/10", "--K", "3", "--converse-demo"},
      {"error-exponent"},
  };
  const auto read = [](const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    std::string kept;
    std::istringstream lines(text);
    for (std::string line; std::getline(lines, line);) {
      if (line.rfind("# timestamp=", 0) != 0) kept += line + '\n';
    }
    return kept;
  };
  int runs = 0;
  int mismatches = 0;
  std::string first;
  for (const auto& command : commands) {
    for (const char* format : {"csv", "jsonl"}) {
      std::array<std::string, 2> outputs;
      for (std::size_t rep = 0; rep < 2; ++rep) {
        const fs::path out = dir / ("run" + std::to_string(rep));
        std::vector<std::string> args{"--seed", "11", "--trials", "20000", "--format", format, "--out", out.string()};
        args.insert(args.end(), command.begin(), command.end());
        std::ostringstream err;
        const int code = cli::run(args, sink, err);
        if (code != cli::kOk) return {false, "'" + command.front() + "' exited " + std::to_string(code) + ": " + err.str()};
        outputs[rep] = read(out);
      }
      ++runs;
      if (outputs[0] != outputs[1] || outputs[0].empty()) {
        ++mismatches;
        if (first.empty()) first = " first=" + command.front() + "/" + format;
      }
    }
  }
  fs::remove_all(dir);
  return {mismatches == 0, fmt("command pairs=%d mismatches=%d", runs, mismatches) + first};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "capacity formula", 1.0, capacity_formula},
      {2, "converse identity", 60.0, converse_identity},
      {3, "type-I exactness and union dominance", 0.0, type1_exactness},
      {4, "volume and tail bound suites", 300.0, bound_suites},
      {5, "greedy construction guarantees", 300.0, gv_construction},
      {6, "Monte Carlo calibration", 600.0, calibration},
      {7, "kappa region and type-II decay", 600.0, kappa_and_decay},
      {8, "type-II decomposition dominance", 0.0, decomposition},
      {9, "error exponent shape", 0.0, error_exponent_shape},
      {10, "CLI determinism", 0.0, determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    std::string timing = fmt("time=%.2fs", seconds);
    if (c.limit_seconds > 0) {
      timing += fmt(" limit=%.0fs", c.limit_seconds);
      if (seconds >= c.limit_seconds) o.pass = false;
    }
    if (!o.pass) ++failed;
    std::printf("%s %2d %s: %s %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), timing.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
