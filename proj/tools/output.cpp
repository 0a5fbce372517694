// SPDX-License-Identifier: Apache-2.0

#include "output.hpp"

#include "dki/numeric.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace dki::cli {

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (const char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

nlohmann::ordered_json json_value(const Cell& c) {
  if (!c.numeric) return c.text;
  // Non-finite values have no JSON number form.
  if (c.text == "inf" || c.text == "-inf" || c.text == "nan") return c.text;
  return nlohmann::ordered_json::parse(c.text);
}

}  // namespace

Cell::Cell(double v) : text(format_double(v)), numeric(true) {}
Cell::Cell(int v) : text(std::to_string(v)), numeric(true) {}
Cell::Cell(std::uint64_t v) : text(std::to_string(v)), numeric(true) {}

TableWriter::TableWriter(std::ostream& out, Format format, const std::string& command, const Config& config,
                         std::vector<std::string> columns, const std::optional<std::string>& timestamp)
    : out_(out), format_(format), columns_(std::move(columns)) {
  if (format_ == Format::kCsv) {
    out_ << "# dki " << command << '\n';
    for (const auto& [key, value] : config) out_ << "# " << key << '=' << value << '\n';
    if (timestamp) out_ << "# timestamp=" << *timestamp << '\n';
    for (std::size_t i = 0; i < columns_.size(); ++i) out_ << (i ? "," : "") << csv_escape(columns_[i]);
    out_ << '\n';
    return;
  }
  nlohmann::ordered_json header;
  header["command"] = command;
  nlohmann::ordered_json cfg = nlohmann::ordered_json::object();
  for (const auto& [key, value] : config) cfg[key] = value;
  header["config"] = cfg;
  header["columns"] = columns_;
  out_ << header.dump() << '\n';
}

void TableWriter::row(const std::vector<Cell>& cells) {
  if (cells.size() != columns_.size()) throw std::logic_error("row width does not match the header");
  if (format_ == Format::kCsv) {
    for (std::size_t i = 0; i < cells.size(); ++i) out_ << (i ? "," : "") << csv_escape(cells[i].text);
    out_ << '\n';
    return;
  }
  nlohmann::ordered_json obj;
  for (std::size_t i = 0; i < cells.size(); ++i) obj[columns_[i]] = json_value(cells[i]);
  out_ << obj.dump() << '\n';
}

}  // namespace dki::cli
