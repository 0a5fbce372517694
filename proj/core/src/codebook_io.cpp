// SPDX-License-Identifier: Apache-2.0

#include "dki/codebook.hpp"

#include <charconv>
#include <istream>
#include <map>
#include <ostream>
#include <string>

namespace dki {

namespace {

constexpr int kFormatVersion = 1;

template <typename T>
T parse_integer_field(const std::string& key, const std::string& text) {
  T value{};
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || text.empty()) {
    throw CodebookFormatError("header '" + key + "' is not a valid integer: '" + text + "'");
  }
  return value;
}

std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

}  // namespace

void save_codebook(const Codebook& cb, std::ostream& out) {
  const auto& p = cb.params();
  const auto& info = cb.construction();
  out << "version=" << kFormatVersion << '\n';
  out << "n=" << p.n() << '\n';
  out << "A=" << to_string(p.weight_fraction()) << '\n';
  out << "beta=" << to_string(p.beta()) << '\n';
  out << "construction=" << to_string(info.kind) << '\n';
  if (info.seed) {
    out << "seed=" << info.seed->seed << '\n';
    out << "stream=" << info.seed->stream << '\n';
  }
  if (info.kind == Construction::kGreedyRandom) {
    out << "budget=" << info.budget << '\n';
    out << "max_size=" << info.max_size << '\n';
  }
  out << "min_distance=" << cb.min_distance() << '\n';
  out << "M=" << cb.size() << '\n';
  for (const auto& w : cb.words()) out << to_hex(w) << '\n';
}

LoadedCodebook load_codebook_raw(std::istream& in) {
  static const std::map<std::string, bool> kKnown{
      {"version", true}, {"n", true},       {"A", true},        {"beta", true},         {"construction", true},
      {"seed", false},   {"stream", false}, {"budget", false},  {"max_size", false},    {"min_distance", true},
      {"M", true}};
  std::map<std::string, std::string> header;
  std::string line;
  while (std::getline(in, line)) {
    line = strip_cr(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw CodebookFormatError("malformed header line '" + line + "'");
    std::string key = line.substr(0, eq);
    if (!kKnown.contains(key)) throw CodebookFormatError("unknown header '" + key + "'");
    if (header.contains(key)) throw CodebookFormatError("duplicate header '" + key + "'");
    header.emplace(key, line.substr(eq + 1));
    if (key == "M") break;
  }
  for (const auto& [key, required] : kKnown) {
    if (required && !header.contains(key)) throw CodebookFormatError("missing header '" + key + "'");
  }
  if (parse_integer_field<int>("version", header["version"]) != kFormatVersion) {
    throw CodebookFormatError("unsupported codebook version " + header["version"]);
  }

  const int n = parse_integer_field<int>("n", header["n"]);
  ConstructionInfo info;
  try {
    info.kind = parse_construction(header["construction"]);
  } catch (const DomainError& e) {
    throw CodebookFormatError(e.what());
  }
  if (header.contains("seed")) {
    Seed seed{parse_integer_field<std::uint64_t>("seed", header["seed"]), 0};
    if (header.contains("stream")) seed.stream = parse_integer_field<std::uint64_t>("stream", header["stream"]);
    info.seed = seed;
  }
  if (header.contains("budget")) info.budget = parse_integer_field<std::uint64_t>("budget", header["budget"]);
  if (header.contains("max_size")) info.max_size = parse_integer_field<std::uint64_t>("max_size", header["max_size"]);

  const int recorded_min = parse_integer_field<int>("min_distance", header["min_distance"]);
  const auto m = parse_integer_field<std::uint64_t>("M", header["M"]);

  std::vector<Word> words;
  try {
    CodebookParams params(n, parse_rational(header["A"]), parse_rational(header["beta"]));
    while (std::getline(in, line)) {
      line = strip_cr(line);
      if (line.empty()) continue;
      if (words.size() == m) throw CodebookFormatError("more than M=" + std::to_string(m) + " words");
      words.push_back(parse_hex(line));
    }
    if (words.size() != m) {
      throw CodebookFormatError("expected M=" + std::to_string(m) + " words, found " + std::to_string(words.size()));
    }
    return {Codebook(std::move(params), std::move(words), info), recorded_min, m};
  } catch (const DomainError& e) {
    throw CodebookFormatError(e.what());
  }
}

Codebook load_codebook(std::istream& in, bool validate) {
  LoadedCodebook loaded = load_codebook_raw(in);
  if (validate) {
    const auto violations = verify(loaded.codebook, loaded.recorded_min_distance);
    if (!violations.empty()) {
      throw CodebookFormatError("codebook fails validation: " + to_string(violations.front().kind) + ": " +
                                violations.front().detail);
    }
  }
  return std::move(loaded.codebook);
}

}  // namespace dki
