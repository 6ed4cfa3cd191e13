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

#include "asbell/inequality.h"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "assignment_walk.h"
#include "asbell/errors.h"

namespace asbell {

CoefficientMatrix::CoefficientMatrix(int n) : n_(n) {
    if (n < 1) {
        throw DimensionError("coefficient matrix order must be at least 1, got " + std::to_string(n));
    }
    entries_.assign(static_cast<std::size_t>(n) * n, 0);
}

CoefficientMatrix CoefficientMatrix::from_rows(const std::vector<std::vector<std::int64_t>> &rows) {
    const int n = static_cast<int>(rows.size());
    if (n == 0) {
        throw DimensionError("coefficient matrix must have at least one row");
    }
    CoefficientMatrix m(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n) {
            throw DimensionError(
                "coefficient matrix must be square: row " + std::to_string(i) + " has " +
                std::to_string(rows[i].size()) + " entries, expected " + std::to_string(n));
        }
        std::copy(rows[i].begin(), rows[i].end(), m.entries_.begin() + static_cast<std::ptrdiff_t>(i) * n);
    }
    return m;
}

std::vector<std::vector<std::int64_t>> CoefficientMatrix::rows() const {
    std::vector<std::vector<std::int64_t>> out;
    out.reserve(n_);
    for (int i = 0; i < n_; ++i) {
        auto r = row(i);
        out.emplace_back(r.begin(), r.end());
    }
    return out;
}

bool CoefficientMatrix::is_symmetric() const {
    for (int i = 0; i < n_; ++i) {
        for (int j = i + 1; j < n_; ++j) {
            if ((*this)(i, j) != (*this)(j, i)) {
                return false;
            }
        }
    }
    return true;
}

ClassicalAssignment::ClassicalAssignment(Party party, std::vector<int> values)
    : party_(party), values_(std::move(values)) {
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (values_[i] != 1 && values_[i] != -1) {
            throw InvalidParameterError(
                "assignment value at index " + std::to_string(i) + " must be +1 or -1, got " +
                std::to_string(values_[i]));
        }
    }
}

ClassicalAssignment ClassicalAssignment::from_rank(Party party, int n, std::uint64_t rank) {
    std::vector<int> values(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        values[i] = ((rank >> (n - 1 - i)) & 1) != 0 ? 1 : -1;
    }
    return ClassicalAssignment(party, std::move(values));
}

ClassicalAssignment ClassicalAssignment::flipped() const {
    std::vector<int> values = values_;
    for (int &v : values) {
        v = -v;
    }
    return ClassicalAssignment(party_, std::move(values));
}

void require_as_order(int n) {
    if (n < 2 || n % 2 != 0) {
        throw InvalidParameterError("number of settings N must be even and >= 2, got " + std::to_string(n));
    }
}

CoefficientMatrix build_as_matrix(int n) {
    require_as_order(n);
    if (n > kMaxMatrixOrder) {
        throw ResourceLimitError(
            "AS matrix order is capped at " + std::to_string(kMaxMatrixOrder) + ", got " + std::to_string(n));
    }
    CoefficientMatrix m(n);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            std::int64_t entry = 0;
            if (i + j <= n + 1) {
                entry = 1;
            } else if (i + j == n + 2) {
                entry = -(std::min(i, j) - 1);
            }
            m(i - 1, j - 1) = entry;
        }
    }
    return m;
}

std::int64_t lhv_bound_closed_form(int n) {
    require_as_order(n);
    const std::int64_t half = n / 2;
    return half * (half + 1);
}

std::int64_t classical_value(const CoefficientMatrix &m, const ClassicalAssignment &alice, const ClassicalAssignment &bob) {
    const int n = m.order();
    if (alice.size() != n || bob.size() != n) {
        throw DimensionError(
            "assignment lengths (" + std::to_string(alice.size()) + ", " + std::to_string(bob.size()) +
            ") do not match matrix order " + std::to_string(n));
    }
    std::int64_t total = 0;
    for (int i = 0; i < n; ++i) {
        std::int64_t row_total = 0;
        for (int j = 0; j < n; ++j) {
            row_total += m(i, j) * bob[j];
        }
        total += alice[i] * row_total;
    }
    return total;
}

LhvBoundResult lhv_bound_bruteforce(const CoefficientMatrix &m) {
    const int n = m.order();
    std::int64_t best = -1;
    std::uint64_t best_rank = 0;
    std::vector<int> best_response(static_cast<std::size_t>(n), -1);
    detail::walk_assignments(m, [&](std::uint64_t rank, std::span<const std::int64_t> sums) {
        std::int64_t value = 0;
        for (std::int64_t c : sums) {
            value += c < 0 ? -c : c;
        }
        // Strict comparison keeps the earliest (lexicographically smallest) maximiser.
        if (value > best) {
            best = value;
            best_rank = rank;
            for (int j = 0; j < n; ++j) {
                best_response[j] = sums[j] > 0 ? 1 : -1;
            }
        }
    });
    return LhvBoundResult{
        best,
        ClassicalAssignment::from_rank(Party::Alice, n, best_rank),
        ClassicalAssignment(Party::Bob, std::move(best_response)),
    };
}

}  // namespace asbell
