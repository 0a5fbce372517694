// SPDX-License-Identifier: Apache-2.0
//
// Table output as CSV with a '#' config header, or as JSON lines whose first
// object carries the config.

#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dki::cli {

enum class Format { kCsv, kJsonl };

/// One table cell: text plus whether it is a number in JSON output.
struct Cell {
  std::string text;
  bool numeric = false;

  Cell(std::string s) : text(std::move(s)) {}  // NOLINT(google-explicit-constructor)
  Cell(const char* s) : text(s) {}             // NOLINT(google-explicit-constructor)
  Cell(double v);                              // NOLINT(google-explicit-constructor)
  Cell(int v);                                 // NOLINT(google-explicit-constructor)
  Cell(std::uint64_t v);                       // NOLINT(google-explicit-constructor)
};

using Config = std::vector<std::pair<std::string, std::string>>;

class TableWriter {
 public:
  /// timestamp, when set, goes into a CSV comment line only.
  TableWriter(std::ostream& out, Format format, const std::string& command, const Config& config,
              std::vector<std::string> columns, const std::optional<std::string>& timestamp);

  void row(const std::vector<Cell>& cells);

 private:
  std::ostream& out_;
  Format format_;
  std::vector<std::string> columns_;
};

}  // namespace dki::cli
