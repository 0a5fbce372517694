// SPDX-License-Identifier: Apache-2.0

#include "commands.hpp"

#include "output.hpp"
#include "sweep.hpp"

#include "dki/binmath.hpp"
#include "dki/bounds.hpp"
#include "dki/codebook.hpp"
#include "dki/estimate.hpp"
#include "dki/identification.hpp"
#include "dki/oracle.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ctime>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

namespace dki::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Common {
  std::uint64_t seed = 1;
  std::uint64_t stream = 0;
  std::uint64_t trials = 10000;
  std::string format = "csv";
  std::string out = "-";
  bool no_timestamp = false;
  unsigned threads = 1;
};

// Exact decimal when the denominator is 2^a 5^b, otherwise "p/q".
std::string decimal(const Rational& r) {
  BigCount scale = 1;
  for (int digits = 0; digits <= 40; ++digits, scale *= 10) {
    const Rational scaled = r * scale;
    if (denominator(scaled) != 1) continue;
    BigCount v = numerator(scaled);
    const bool negative = v < 0;
    std::string s = (negative ? -v : v).str();
    if (digits > 0) {
      if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<std::size_t>(digits + 1) - s.size(), '0');
      s.insert(s.size() - static_cast<std::size_t>(digits), ".");
    }
    return negative ? "-" + s : s;
  }
  return to_string(r);
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

Format parse_format(const std::string& s) { return s == "jsonl" ? Format::kJsonl : Format::kCsv; }

Rational rational_arg(const std::string& name, const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const DomainError& e) {
    throw UsageError("--" + name + ": " + e.what());
  }
}

std::vector<Rational> sweep_arg(const std::string& name, const std::string& text) {
  try {
    return parse_sweep(text);
  } catch (const DomainError& e) {
    throw UsageError("--" + name + ": " + e.what());
  }
}

std::vector<int> int_sweep_arg(const std::string& name, const std::string& text) {
  try {
    return parse_int_sweep(text);
  } catch (const DomainError& e) {
    throw UsageError("--" + name + ": " + e.what());
  }
}

LoadedCodebook read_codebook(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open codebook file '" + path + "'");
  return load_codebook_raw(in);
}

Codebook read_valid_codebook(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open codebook file '" + path + "'");
  return load_codebook(in, true);
}

// Output sink: everything is buffered and written once the command finishes.
class Sink {
 public:
  Sink(const Common& common, std::ostream& fallback) : common_(common), fallback_(fallback) {}

  std::ostream& stream() { return buffer_; }

  std::optional<std::string> timestamp() const {
    if (common_.no_timestamp || parse_format(common_.format) == Format::kJsonl) return std::nullopt;
    return utc_timestamp();
  }

  TableWriter table(const std::string& command, Config config, std::vector<std::string> columns) {
    config.emplace_back("format", common_.format);
    return TableWriter(buffer_, parse_format(common_.format), command, config, std::move(columns), timestamp());
  }

  void flush() {
    if (common_.out == "-") {
      fallback_ << buffer_.str();
      return;
    }
    std::ofstream file(common_.out, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot open output file '" + common_.out + "'");
    file << buffer_.str();
    if (!file) throw IoError("failed writing output file '" + common_.out + "'");
  }

 private:
  const Common& common_;
  std::ostream& fallback_;
  std::ostringstream buffer_;
};

std::string join_params(const std::vector<std::pair<std::string, std::string>>& params) {
  std::string s;
  for (const auto& [k, v] : params) s += (s.empty() ? "" : ";") + k + "=" + v;
  return s;
}

std::string join_values(const std::vector<Rational>& values) {
  std::string s;
  for (const auto& v : values) s += (s.empty() ? "" : ",") + decimal(v);
  return s;
}

std::string join_ints(const std::vector<int>& values) {
  std::string s;
  for (const auto v : values) s += (s.empty() ? "" : ",") + std::to_string(v);
  return s;
}

std::size_t target_size(const BigCount& k, std::size_t available) {
  if (k > BigCount(available)) {
    throw UsageError("K=" + k.str() + " exceeds the " + std::to_string(available) + " available messages");
  }
  return static_cast<std::size_t>(k);
}

// K for a codebook-backed command, from either --K or --kappa.
BigCount resolve_k(int n, const std::string& k_text, const std::string& kappa_text) {
  if (!kappa_text.empty()) return target_size_from_kappa(n, rational_arg("kappa", kappa_text));
  try {
    BigCount k(k_text);
    if (k < 1) throw UsageError("--K must be at least 1");
    return k;
  } catch (const std::runtime_error&) {
    throw UsageError("--K must be a positive integer, got '" + k_text + "'");
  }
}

TargetSet pick_targets(const Codebook& cb, std::size_t i, std::size_t k, bool include_i, const std::string& mode,
                       Seed seed) {
  if (mode == "nearest") {
    if (!include_i) return nearest_target_set(cb, i, k);
    if (k == 0) throw UsageError("K must be at least 1");
    auto idx = nearest_target_set(cb, i, k - 1).indices();
    idx.push_back(i);
    return TargetSet(std::move(idx), cb.size());
  }
  // Target selection draws from a stream disjoint from the channel noise.
  const Seed selection{seed.seed, ~seed.stream};
  return include_i ? random_target_set(cb.size(), k, selection, i) : random_target_set(cb.size(), k, selection, {}, i);
}

// --- subcommands ----------------------------------------------------------

struct CapacityArgs {
  std::string a = "0.05:1.5:0.05";
};

int cmd_capacity(const CapacityArgs& args, Sink& sink) {
  const auto values = sweep_arg("A", args.a);
  auto table = sink.table("capacity", {{"A", join_values(values)}}, {"A", "capacity"});
  for (const auto& a : values) table.row({decimal(a), dki_capacity(a)});
  return kOk;
}

struct KappaArgs {
  std::string eps = "0.05:0.45:0.05";
  std::string beta = "0.05:0.4:0.05";
};

int cmd_kappa_region(const KappaArgs& args, Sink& sink) {
  const auto eps_values = sweep_arg("eps", args.eps);
  const auto beta_values = sweep_arg("beta", args.beta);
  auto table = sink.table("kappa-region", {{"eps", join_values(eps_values)}, {"beta", join_values(beta_values)}},
                          {"eps", "beta", "kappa_theorem", "kappa_asymptotic", "status", "reason"});
  for (const auto& eps : eps_values) {
    for (const auto& beta : beta_values) {
      try {
        const KappaRegion k = kappa_region(eps, beta);
        table.row({decimal(eps), decimal(beta), k.theorem, k.asymptotic, "ok", ""});
      } catch (const DomainError& e) {
        table.row({decimal(eps), decimal(beta), "", "", "error", e.what()});
      }
    }
  }
  return kOk;
}

struct BoundsArgs {
  std::string suite;
  std::string n;
  std::string eps;
  std::string beta;
  int q = 2;
};

int cmd_bounds(const BoundsArgs& args, Sink& sink) {
  std::vector<BoundReport> reports;
  Config config{{"suite", args.suite}};
  if (args.suite == "volumes") {
    VolumeGrid g = default_volume_grid();
    if (!args.n.empty()) g.n = int_sweep_arg("n", args.n);
    if (!args.eps.empty()) g.eps = sweep_arg("eps", args.eps);
    g.q = args.q;
    config.insert(config.end(), {{"n", join_ints(g.n)}, {"eps", join_values(g.eps)}, {"q", std::to_string(g.q)}});
    reports = volume_suite(g);
  } else if (args.suite == "tails") {
    TailGrid g = default_tail_grid();
    if (!args.n.empty()) g.n = int_sweep_arg("n", args.n);
    if (!args.eps.empty()) g.eps = sweep_arg("eps", args.eps);
    config.insert(config.end(), {{"n", join_ints(g.n)}, {"eps", join_values(g.eps)}});
    reports = tail_suite(g);
  } else {
    ZetaGrid g = default_zeta_grid();
    if (!args.n.empty()) g.n = int_sweep_arg("n", args.n);
    if (!args.eps.empty()) g.eps = sweep_arg("eps", args.eps);
    if (!args.beta.empty()) g.beta = sweep_arg("beta", args.beta);
    config.insert(config.end(),
                  {{"n", join_ints(g.n)}, {"eps", join_values(g.eps)}, {"beta", join_values(g.beta)}});
    reports = zeta_suite(g);
  }
  auto table = sink.table("bounds", config, {"suite", "bound", "params", "lhs_log2", "rhs_log2", "status", "reason"});
  bool violated = false;
  for (const auto& r : reports) {
    violated = violated || r.violated();
    const bool skipped = r.status == BoundReport::Status::kSkipped;
    table.row({args.suite, r.bound, join_params(r.params), skipped ? Cell("") : Cell(r.lhs.log2_value()),
               skipped ? Cell("") : Cell(r.rhs.log2_value()), to_string(r.status), r.reason});
  }
  return violated ? kViolation : kOk;
}

struct BuildArgs {
  int n = 0;
  std::string a = "1";
  std::string beta;
  std::string construction = "greedy-random";
  std::uint64_t budget = 100000;
  std::uint64_t max_size = 0;
};

int cmd_codebook_build(const BuildArgs& args, const Common& common, Sink& sink) {
  const CodebookParams params(args.n, rational_arg("A", args.a), rational_arg("beta", args.beta));
  const Codebook cb = args.construction == "exhaustive"
                          ? exhaustive_construct(params)
                          : gv_greedy_construct(params, Seed{common.seed, common.stream}, args.budget, args.max_size);
  save_codebook(cb, sink.stream());
  return kOk;
}

struct CodebookFileArgs {
  std::string in;
  bool coverage = false;
};

int cmd_codebook_verify(const CodebookFileArgs& args, Sink& sink) {
  const LoadedCodebook loaded = read_codebook(args.in);
  const Codebook& cb = loaded.codebook;
  auto table = sink.table("codebook verify", {{"in", args.in}, {"coverage", args.coverage ? "true" : "false"}},
                          {"check", "status", "detail"});
  const auto violations = verify(cb, loaded.recorded_min_distance);
  for (const auto& v : violations) table.row({to_string(v.kind), "violated", v.detail});
  bool failed = !violations.empty();
  if (args.coverage) {
    const CoverageCertificate cert = coverage_certificate(cb);
    failed = failed || !cert.exhausted();
    table.row({"coverage", cert.exhausted() ? "holds" : "violated",
               "checked=" + std::to_string(cert.checked) + ";uncovered=" + std::to_string(cert.uncovered) +
                   (cert.first_uncovered ? ";first=" + to_hex(*cert.first_uncovered) : "")});
  }
  table.row({"summary", failed ? "violated" : "holds",
             "M=" + std::to_string(cb.size()) + ";min_distance=" + std::to_string(cb.min_distance())});
  return failed ? kViolation : kOk;
}

int cmd_codebook_stats(const CodebookFileArgs& args, Sink& sink) {
  const Codebook cb = read_valid_codebook(args.in);
  const auto& p = cb.params();
  auto table = sink.table("codebook stats", {{"in", args.in}},
                          {"n", "A", "beta", "construction", "M", "min_distance", "empirical_rate",
                           "gv_size_lower_bound", "admissible_volume"});
  table.row({p.n(), decimal(p.weight_fraction()), decimal(p.beta()), to_string(cb.construction().kind),
             static_cast<std::uint64_t>(cb.size()), cb.min_distance(), empirical_rate(cb),
             to_double(gv_size_lower_bound(p)), Cell(admissible_volume(p).str())});
  return kOk;
}

struct SimulateArgs {
  std::string codebook;
  std::string eps;
  std::string k = "1";
  std::string kappa;
  std::size_t i = 1;
  std::string type = "both";
  std::string targets = "random";
};

int cmd_simulate(const SimulateArgs& args, const Common& common, Sink& sink) {
  const Codebook cb = read_valid_codebook(args.codebook);
  const Rational eps = rational_arg("eps", args.eps);
  const BigCount k = resolve_k(cb.n(), args.k, args.kappa);
  const DkiParams p(cb.n(), eps, cb.params().weight_fraction(), cb.params().beta(), k);
  static_cast<void>(cb.codeword(args.i));
  const AnalyticBounds bounds = analytic_bounds(p);
  const Seed seed{common.seed, common.stream};

  std::vector<ErrorType> types;
  if (args.type != "type2") types.push_back(ErrorType::kTypeI);
  if (args.type != "type1") types.push_back(ErrorType::kTypeII);
  std::vector<std::pair<ErrorType, TargetSet>> plans;
  for (const auto t : types) {
    const bool include = t == ErrorType::kTypeI;
    const std::size_t kk = target_size(k, include ? cb.size() : cb.size() - 1);
    plans.emplace_back(t, pick_targets(cb, args.i, kk, include, args.targets, seed));
  }

  auto table = sink.table("simulate",
                          {{"codebook", args.codebook},
                           {"eps", decimal(eps)},
                           {"K", k.str()},
                           {"kappa", args.kappa},
                           {"i", std::to_string(args.i)},
                           {"type", args.type},
                           {"targets", args.targets},
                           {"trials", std::to_string(common.trials)},
                           {"seed", std::to_string(common.seed)},
                           {"stream", std::to_string(common.stream)}},
                          {"error_type", "i", "K", "n", "thr", "targets", "trials", "hits", "p_hat", "ci_low",
                           "ci_high", "analytic_bound"});
  for (const auto& [t, ks] : plans) {
    const ErrorEstimate e = mc_estimate(cb, ks, args.i, p, common.trials, seed, common.threads);
    const double bound = t == ErrorType::kTypeI ? bounds.zeta1.linear() : bounds.type2_bound.linear();
    std::string members;
    for (const auto j : ks.indices()) members += (members.empty() ? "" : " ") + std::to_string(j);
    table.row({to_string(t), static_cast<std::uint64_t>(args.i), Cell(k.str()), p.n(), p.threshold(), members,
               e.trials, e.hits, e.p_hat, e.ci_low, e.ci_high, std::min(bound, 1.0)});
  }
  return kOk;
}

struct OracleArgs {
  std::string codebook;
  std::string eps;
  std::string k = "1";
  std::size_t i = 1;
  std::string targets = "random";
  bool converse_demo = false;
};

int cmd_oracle(const OracleArgs& args, const Common& common, Sink& sink) {
  Codebook cb = read_valid_codebook(args.codebook);
  if (cb.n() > kMaxOracleLength) {
    throw UsageError("the exhaustive oracle enumerates 2^n outputs and is limited to n <= " +
                     std::to_string(kMaxOracleLength) + "; this codebook has n=" + std::to_string(cb.n()));
  }
  const Rational eps = rational_arg("eps", args.eps);
  const BigCount k = resolve_k(cb.n(), args.k, "");
  const DkiParams p(cb.n(), eps, cb.params().weight_fraction(), cb.params().beta(), k);
  const Seed seed{common.seed, common.stream};
  const Config config{{"codebook", args.codebook},     {"eps", decimal(eps)},
                      {"K", k.str()},                  {"i", std::to_string(args.i)},
                      {"targets", args.targets},       {"converse_demo", args.converse_demo ? "true" : "false"},
                      {"seed", std::to_string(common.seed)}, {"stream", std::to_string(common.stream)}};

  if (args.converse_demo) {
    // Message M+1 reuses c_i; i is a target and M+1 is not.
    std::vector<Word> words = cb.words();
    words.push_back(cb.codeword(args.i));
    const Codebook twin(cb.params(), std::move(words), cb.construction());
    const std::size_t shadow = twin.size();
    std::vector<std::size_t> idx;
    if (target_size(k, cb.size()) > 1) {
      const TargetSet others =
          random_target_set(cb.size(), static_cast<std::size_t>(k) - 1, Seed{seed.seed, ~seed.stream}, {}, args.i);
      idx = others.indices();
    }
    idx.push_back(args.i);
    const TargetSet ks(std::move(idx), twin.size());
    const Rational t1 = brute_force_type1(twin, args.i, ks, p);
    const Rational t2 = brute_force_type2(twin, shadow, ks, p);
    const Rational sum = t1 + t2;
    auto table = sink.table("oracle", config, {"quantity", "message", "exact", "value"});
    table.row({"type1", static_cast<std::uint64_t>(args.i), to_string(t1), to_double(t1)});
    table.row({"type2", static_cast<std::uint64_t>(shadow), to_string(t2), to_double(t2)});
    table.row({"sum", "", to_string(sum), to_double(sum)});
    return sum == 1 ? kOk : kViolation;
  }

  auto table = sink.table("oracle", config,
                          {"error_type", "i", "K", "thr", "targets", "exact", "value", "single_decoder",
                           "union_bound"});
  const Rational single = exact_type1_rational(p);
  {
    const TargetSet ks = pick_targets(cb, args.i, target_size(k, cb.size()), true, args.targets, seed);
    const Rational t1 = brute_force_type1(cb, args.i, ks, p);
    std::string members;
    for (const auto j : ks.indices()) members += (members.empty() ? "" : " ") + std::to_string(j);
    table.row({"type1", static_cast<std::uint64_t>(args.i), Cell(k.str()), p.threshold(), members, to_string(t1),
               to_double(t1), to_double(single), ""});
  }
  if (cb.size() > 1) {
    const TargetSet ks = pick_targets(cb, args.i, target_size(k, cb.size() - 1), false, args.targets, seed);
    const Rational t2 = brute_force_type2(cb, args.i, ks, p);
    std::string members;
    for (const auto j : ks.indices()) members += (members.empty() ? "" : " ") + std::to_string(j);
    table.row({"type2", static_cast<std::uint64_t>(args.i), Cell(k.str()), p.threshold(), members, to_string(t2),
               to_double(t2), "", to_double(union_bound_type2(cb, args.i, ks, p))});
  }
  return kOk;
}

struct ExponentArgs {
  std::string rate = "0:0.5:0.05";
  std::string eps = "0.1";
};

int cmd_error_exponent(const ExponentArgs& args, Sink& sink) {
  const auto rates = sweep_arg("R", args.rate);
  const Rational eps_exact = rational_arg("eps", args.eps);
  if (eps_exact <= 0 || eps_exact * 2 >= 1) throw UsageError("--eps must lie in (0, 1/2)");
  const Probability eps(eps_exact);
  auto table = sink.table("error-exponent", {{"R", join_values(rates)}, {"eps", decimal(eps_exact)}},
                          {"R", "delta", "critical", "regime", "E_r", "status", "reason"});
  for (const auto& r : rates) {
    try {
      const ErrorExponent e = error_exponent(to_double(r), eps);
      table.row({decimal(r), e.delta, e.critical, e.regime == ExponentRegime::kSphere ? "sphere" : "straight-line",
                 e.value, "ok", ""});
    } catch (const DomainError& err) {
      table.row({decimal(r), "", "", "", "", "error", err.what()});
    }
  }
  return kOk;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Deterministic K-identification over the binary symmetric channel", "dki"};
  app.require_subcommand(1);
  app.fallthrough();

  Common common;
  app.add_option("--seed", common.seed, "Generator seed")->capture_default_str();
  app.add_option("--stream", common.stream, "Generator stream id")->capture_default_str();
  app.add_option("--trials", common.trials, "Monte Carlo trials")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--format", common.format, "Output format")->capture_default_str()->check(
      CLI::IsMember({"csv", "jsonl"}));
  app.add_option("--out", common.out, "Output file, '-' for stdout")->capture_default_str();
  app.add_flag("--no-timestamp", common.no_timestamp, "Omit the timestamp comment from CSV output");
  app.add_option("--threads", common.threads, "Monte Carlo worker threads")->capture_default_str()->check(
      CLI::Range(1U, 256U));

  std::function<int(Sink&)> action;

  CapacityArgs capacity;
  auto* c_capacity = app.add_subcommand("capacity", "DKI capacity over a sweep of weight fractions A");
  c_capacity->add_option("--A", capacity.a, "Sweep of A")->capture_default_str();
  c_capacity->callback([&] { action = [&](Sink& s) { return cmd_capacity(capacity, s); }; });

  KappaArgs kappa;
  auto* c_kappa = app.add_subcommand("kappa-region", "Theorem and asymptotic kappa bounds");
  c_kappa->add_option("--eps", kappa.eps, "Sweep of eps")->capture_default_str();
  c_kappa->add_option("--beta", kappa.beta, "Sweep of beta")->capture_default_str();
  c_kappa->callback([&] { action = [&](Sink& s) { return cmd_kappa_region(kappa, s); }; });

  BoundsArgs bounds;
  auto* c_bounds = app.add_subcommand("bounds", "Evaluate a bound suite over a grid");
  c_bounds->add_option("--suite", bounds.suite, "volumes, tails or zeta")->required()->check(
      CLI::IsMember({"volumes", "tails", "zeta"}));
  c_bounds->add_option("--n", bounds.n, "Sweep of n");
  c_bounds->add_option("--eps", bounds.eps, "Sweep of eps");
  c_bounds->add_option("--beta", bounds.beta, "Sweep of beta (zeta suite)");
  c_bounds->add_option("--q", bounds.q, "Alphabet size (volumes suite)")->capture_default_str()->check(
      CLI::Range(2, 256));
  c_bounds->callback([&] { action = [&](Sink& s) { return cmd_bounds(bounds, s); }; });

  auto* c_codebook = app.add_subcommand("codebook", "Build, verify or summarize codebooks");
  c_codebook->require_subcommand(1);
  BuildArgs build;
  auto* c_build = c_codebook->add_subcommand("build", "Construct a codebook file");
  c_build->add_option("--n", build.n, "Codeword length")->required();
  c_build->add_option("--A", build.a, "Weight fraction; >= 1 means unconstrained")->capture_default_str();
  c_build->add_option("--beta", build.beta, "Packing radius fraction")->required();
  c_build->add_option("--construction", build.construction)->capture_default_str()->check(
      CLI::IsMember({"greedy-random", "exhaustive"}));
  c_build->add_option("--budget", build.budget, "Consecutive rejections before stopping")->capture_default_str();
  c_build->add_option("--max-size", build.max_size, "Stop at this many codewords; 0 for no cap")
      ->capture_default_str();
  c_build->callback([&] { action = [&](Sink& s) { return cmd_codebook_build(build, common, s); }; });

  CodebookFileArgs file_args;
  auto* c_verify = c_codebook->add_subcommand("verify", "Recheck every codebook invariant");
  c_verify->add_option("--in", file_args.in, "Codebook file")->required();
  c_verify->add_flag("--coverage", file_args.coverage, "Also certify exhaustion (n <= 20)");
  c_verify->callback([&] { action = [&](Sink& s) { return cmd_codebook_verify(file_args, s); }; });
  auto* c_stats = c_codebook->add_subcommand("stats", "Size, distance and rate of a codebook");
  c_stats->add_option("--in", file_args.in, "Codebook file")->required();
  c_stats->callback([&] { action = [&](Sink& s) { return cmd_codebook_stats(file_args, s); }; });

  SimulateArgs sim;
  auto* c_sim = app.add_subcommand("simulate", "Monte Carlo type-I and type-II error estimates");
  c_sim->add_option("--codebook", sim.codebook, "Codebook file")->required();
  c_sim->add_option("--eps", sim.eps, "Crossover probability")->required();
  auto* sim_k = c_sim->add_option("--K", sim.k, "Target set size")->capture_default_str();
  c_sim->add_option("--kappa", sim.kappa, "Target rate; K = ceil(2^(kappa n))")->excludes(sim_k);
  c_sim->add_option("--i", sim.i, "Sent message index (1-based)")->capture_default_str();
  c_sim->add_option("--type", sim.type)->capture_default_str()->check(CLI::IsMember({"both", "type1", "type2"}));
  c_sim->add_option("--targets", sim.targets)->capture_default_str()->check(CLI::IsMember({"random", "nearest"}));
  c_sim->callback([&] { action = [&](Sink& s) { return cmd_simulate(sim, common, s); }; });

  OracleArgs oracle;
  auto* c_oracle = app.add_subcommand("oracle", "Exact error probabilities by full enumeration (n <= 14)");
  c_oracle->add_option("--codebook", oracle.codebook, "Codebook file")->required();
  c_oracle->add_option("--eps", oracle.eps, "Crossover probability")->required();
  c_oracle->add_option("--K", oracle.k, "Target set size")->capture_default_str();
  c_oracle->add_option("--i", oracle.i, "Sent message index (1-based)")->capture_default_str();
  c_oracle->add_option("--targets", oracle.targets)->capture_default_str()->check(
      CLI::IsMember({"random", "nearest"}));
  c_oracle->add_flag("--converse-demo", oracle.converse_demo,
                     "Duplicate c_i as a non-target message and show type1 + type2 = 1");
  c_oracle->callback([&] { action = [&](Sink& s) { return cmd_oracle(oracle, common, s); }; });

  ExponentArgs exponent;
  auto* c_exp = app.add_subcommand("error-exponent", "Random-coding error exponent over a rate sweep");
  c_exp->add_option("--R", exponent.rate, "Sweep of rates")->capture_default_str();
  c_exp->add_option("--eps", exponent.eps, "Crossover probability")->capture_default_str();
  c_exp->callback([&] { action = [&](Sink& s) { return cmd_error_exponent(exponent, s); }; });

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "dki: " << e.what() << '\n';
    return kUsage;
  }

  try {
    Sink sink(common, out);
    const int code = action(sink);
    sink.flush();
    return code;
  } catch (const UsageError& e) {
    err << "dki: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "dki: " << e.what() << '\n';
    return kUsage;
  } catch (const CodebookFormatError& e) {
    err << "dki: corrupt codebook: " << e.what() << '\n';
    return kIo;
  } catch (const IoError& e) {
    err << "dki: " << e.what() << '\n';
    return kIo;
  }
}

}  // namespace dki::cli
