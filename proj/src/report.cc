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

#include "asbell/report.h"

#include <algorithm>
#include <cmath>
#include <string>

#include <fmt/core.h>

namespace asbell::report {

namespace {

std::string csv_field(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

std::string cell_csv(const Cell &cell) {
    if (const auto *i = std::get_if<std::int64_t>(&cell)) {
        return std::to_string(*i);
    }
    if (const auto *d = std::get_if<double>(&cell)) {
        return format_number(*d);
    }
    return csv_field(std::get<std::string>(cell));
}

std::string cell_pretty(const Cell &cell) {
    if (const auto *i = std::get_if<std::int64_t>(&cell)) {
        return std::to_string(*i);
    }
    if (const auto *d = std::get_if<double>(&cell)) {
        return std::isfinite(*d) ? fmt::format("{:.4f}", *d) : fmt::format("{}", *d);
    }
    return std::get<std::string>(cell);
}

}  // namespace

std::string format_number(double value) {
    if (value == 0) {
        return "0";
    }
    return fmt::format("{:.10g}", value);
}

double round_significant(double value) {
    if (!std::isfinite(value)) {
        return value;
    }
    return std::stod(format_number(value));
}

std::string render_csv(const Table &table) {
    std::string out;
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        out += (c ? "," : "") + csv_field(table.columns[c]);
    }
    out += '\n';
    for (const auto &row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            out += (c ? "," : "") + cell_csv(row[c]);
        }
        out += '\n';
    }
    return out;
}

std::string render_pretty(const Table &table) {
    std::vector<std::vector<std::string>> text;
    text.push_back(table.columns);
    for (const auto &row : table.rows) {
        std::vector<std::string> line;
        for (const auto &cell : row) {
            line.push_back(cell_pretty(cell));
        }
        text.push_back(std::move(line));
    }
    std::vector<std::size_t> width(table.columns.size(), 0);
    for (const auto &line : text) {
        for (std::size_t c = 0; c < line.size() && c < width.size(); ++c) {
            width[c] = std::max(width[c], line[c].size());
        }
    }
    std::string out;
    for (std::size_t r = 0; r < text.size(); ++r) {
        for (std::size_t c = 0; c < text[r].size(); ++c) {
            // Numbers right-aligned, labels left-aligned.
            const bool numeric = r > 0 && !std::holds_alternative<std::string>(table.rows[r - 1][c]);
            out += c ? "  " : "";
            out += numeric ? fmt::format("{:>{}}", text[r][c], width[c]) : fmt::format("{:<{}}", text[r][c], width[c]);
        }
        while (!out.empty() && out.back() == ' ') {
            out.pop_back();
        }
        out += '\n';
        if (r == 0) {
            std::size_t total = 0;
            for (std::size_t w : width) {
                total += w;
            }
            out += std::string(total + 2 * (width.empty() ? 0 : width.size() - 1), '-') + '\n';
        }
    }
    return out;
}

}  // namespace asbell::report
