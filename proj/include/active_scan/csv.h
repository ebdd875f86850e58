// Copyright 2026 The active-scan Authors.
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

// Minimal CSV for the numeric tables this project emits. Fields never
// contain commas or quotes, so no quoting is done.

#ifndef ACTIVE_SCAN_CSV_H_
#define ACTIVE_SCAN_CSV_H_

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "active_scan/errors.h"

namespace active_scan {

// Shortest decimal form that parses back to the same double.
std::string FormatDouble(double value);

double ParseDouble(std::string_view field, std::size_t line = 0);
std::uint64_t ParseUnsigned(std::string_view field, std::size_t line = 0);
std::int64_t ParseSigned(std::string_view field, std::size_t line = 0);

class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}

  void Row(std::span<const std::string> fields);
  void Row(std::initializer_list<std::string> fields) {
    Row(std::span<const std::string>(fields.begin(), fields.size()));
  }

 private:
  std::ostream& out_;
};

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  // Index of a header column; throws ParseError when absent.
  std::size_t Column(std::string_view name) const;
};

// Lines starting with '#' and blank lines are skipped.
CsvTable read_csv(std::istream& in, bool has_header = true);

}  // namespace active_scan

#endif  // ACTIVE_SCAN_CSV_H_
