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

#ifndef ASBELL_SRC_ASSIGNMENT_WALK_H
#define ASBELL_SRC_ASSIGNMENT_WALK_H

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "asbell/errors.h"
#include "asbell/inequality.h"

namespace asbell::detail {

inline void require_enumerable(int n) {
    if (n > kMaxEnumerationOrder) {
        throw ResourceLimitError(
            "exhaustive enumeration supports at most N = " + std::to_string(kMaxEnumerationOrder) +
            " settings, got N = " + std::to_string(n));
    }
}

/// Visits every Alice assignment in lexicographic order (-1 < +1, index 0
/// most significant) together with its column sums c_j = sum_i m[i][j] A_i.
/// Moving from rank r to r + 1 flips the trailing bits only, so the sums are
/// maintained with amortised O(2N) integer updates per step.
template <typename Visit>
void walk_assignments(const CoefficientMatrix &m, Visit &&visit) {
    const int n = m.order();
    require_enumerable(n);
    std::vector<int> signs(static_cast<std::size_t>(n), -1);
    std::vector<std::int64_t> sums(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            sums[j] -= m(i, j);
        }
    }
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t rank = 0;; ++rank) {
        visit(rank, std::span<const std::int64_t>(sums));
        if (rank + 1 == total) {
            break;
        }
        // Bits that differ between rank and rank + 1; bit p is setting n-1-p.
        std::uint64_t changed = rank ^ (rank + 1);
        for (int p = 0; changed != 0; ++p, changed >>= 1) {
            if ((changed & 1) == 0) {
                continue;
            }
            const int i = n - 1 - p;
            signs[i] = -signs[i];
            const auto row = m.row(i);
            const std::int64_t twice = 2 * signs[i];
            for (int j = 0; j < n; ++j) {
                sums[j] += twice * row[j];
            }
        }
    }
}

}  // namespace asbell::detail

#endif
