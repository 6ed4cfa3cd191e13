// Copyright 2026 The asbell Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ASBELL_REPORT_H
#define ASBELL_REPORT_H

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

namespace asbell::report {

using Cell = std::variant<std::int64_t, double, std::string>;

/// One rectangular result set, rendered as CSV or an aligned text table.
struct Table {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

/// 10 significant digits, shortest form ("%.10g").
std::string format_number(double value);

/// `value` rounded to 10 significant digits, so that JSON output carries the
/// same decimal as the CSV rendering of the same number.
double round_significant(double value);

/// Header row, comma separator, LF line endings. Fields containing a comma,
/// quote or newline are quoted.
std::string render_csv(const Table &table);

/// Column-aligned text with 4 decimals for reals.
std::string render_pretty(const Table &table);

}  // namespace asbell::report

#endif
