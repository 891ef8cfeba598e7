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

#pragma once

// Numeric table with an ordered metadata block, serialized as CSV ('#'
// metadata lines, one header row, shortest round-trip numbers) or JSON.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace mirrorgate::cli {

inline constexpr const char* kToolVersion = "0.1.0";

struct SweepTable {
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  SweepTable() = default;
  explicit SweepTable(std::vector<std::string> column_names);

  /// Replaces an existing key in place, otherwise appends.
  void set_meta(const std::string& key, const std::string& value);
  std::optional<std::string> meta(const std::string& key) const;

  /// Throws InvalidArgument unless row.size() == columns.size().
  void add_row(std::vector<double> row);

  std::string to_csv() const;
  nlohmann::ordered_json to_json() const;

  /// Inverse of to_csv. Throws InvalidArgument on malformed input.
  static SweepTable parse_csv(std::string_view text);

  friend bool operator==(const SweepTable&, const SweepTable&) = default;
};

/// Shortest decimal string that parses back to the same double.
std::string format_number(double value);

}  // namespace mirrorgate::cli
