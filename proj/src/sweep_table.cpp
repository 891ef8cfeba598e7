// Copyright 2026 The mirrorgate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mirrorgate/sweep_table.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "mirrorgate/types.hpp"

namespace mirrorgate::cli {

namespace {

void require_clean(const std::string& s, std::string_view forbidden,
                   const char* what) {
  if (s.find_first_of(forbidden) != std::string::npos) {
    throw InvalidArgument(std::string("SweepTable: ") + what +
                          " contains a reserved character: '" + s + "'");
  }
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    out.push_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

double parse_number(std::string_view s, std::size_t line_no) {
  s = trim(s);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw InvalidArgument("SweepTable: line " + std::to_string(line_no) +
                          ": not a number: '" + std::string(s) + "'");
  }
  return value;
}

}  // namespace

std::string format_number(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc{}) throw NumericalError("format_number: to_chars failed");
  return std::string(buf, ptr);
}

SweepTable::SweepTable(std::vector<std::string> column_names)
    : columns(std::move(column_names)) {
  for (const auto& c : columns) require_clean(c, ",\n\r#", "column name");
}

void SweepTable::set_meta(const std::string& key, const std::string& value) {
  require_clean(key, ":\n\r", "metadata key");
  require_clean(value, "\n\r", "metadata value");
  for (auto& [k, v] : metadata) {
    if (k == key) {
      v = value;
      return;
    }
  }
  metadata.emplace_back(key, value);
}

std::optional<std::string> SweepTable::meta(const std::string& key) const {
  for (const auto& [k, v] : metadata) {
    if (k == key) return v;
  }
  return std::nullopt;
}

void SweepTable::add_row(std::vector<double> row) {
  if (row.size() != columns.size()) {
    throw InvalidArgument("SweepTable: row has " + std::to_string(row.size()) +
                          " values but there are " +
                          std::to_string(columns.size()) + " columns");
  }
  rows.push_back(std::move(row));
}

std::string SweepTable::to_csv() const {
  std::string out;
  for (const auto& [k, v] : metadata) out += "# " + k + ": " + v + "\n";
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) out += ',';
    out += columns[i];
  }
  out += '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += format_number(row[i]);
    }
    out += '\n';
  }
  return out;
}

nlohmann::ordered_json SweepTable::to_json() const {
  nlohmann::ordered_json j;
  j["metadata"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : metadata) j["metadata"][k] = v;
  j["columns"] = columns;
  j["rows"] = rows;
  return j;
}

SweepTable SweepTable::parse_csv(std::string_view text) {
  SweepTable t;
  bool have_header = false;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;

    if (line.front() == '#') {
      if (have_header) {
        throw InvalidArgument("SweepTable: line " + std::to_string(line_no) +
                              ": metadata after the header row");
      }
      line.remove_prefix(1);
      if (!line.empty() && line.front() == ' ') line.remove_prefix(1);
      const auto colon = line.find(':');
      if (colon == std::string_view::npos) {
        throw InvalidArgument("SweepTable: line " + std::to_string(line_no) +
                              ": metadata needs 'key: value'");
      }
      std::string_view value = line.substr(colon + 1);
      if (!value.empty() && value.front() == ' ') value.remove_prefix(1);
      t.metadata.emplace_back(std::string(line.substr(0, colon)), std::string(value));
      continue;
    }

    const auto fields = split(line, ',');
    if (!have_header) {
      for (const auto f : fields) t.columns.emplace_back(f);
      have_header = true;
      continue;
    }
    if (fields.size() != t.columns.size()) {
      throw InvalidArgument("SweepTable: line " + std::to_string(line_no) + " has " +
                            std::to_string(fields.size()) + " fields, expected " +
                            std::to_string(t.columns.size()));
    }
    std::vector<double> row;
    row.reserve(fields.size());
    for (const auto f : fields) row.push_back(parse_number(f, line_no));
    t.rows.push_back(std::move(row));
  }
  if (!have_header) throw InvalidArgument("SweepTable: no header row");
  return t;
}

}  // namespace mirrorgate::cli
