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

#ifndef ASBELL_INEQUALITY_H
#define ASBELL_INEQUALITY_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace asbell {

/// Largest order for which the 2^N assignment enumeration is attempted.
inline constexpr int kMaxEnumerationOrder = 24;
/// Largest AS matrix order that build_as_matrix will allocate.
inline constexpr int kMaxMatrixOrder = 4096;

/// Square integer matrix of correlation coefficients. Entry (i, j) multiplies
/// the term A_i B_j, with Alice's setting as the row and Bob's as the column.
/// Indices are 0-based here; the usual mathematical labelling is 1-based.
class CoefficientMatrix {
   public:
    /// Zero matrix of order n (n >= 1).
    explicit CoefficientMatrix(int n);

    /// Throws DimensionError unless `rows` is non-empty and square.
    static CoefficientMatrix from_rows(const std::vector<std::vector<std::int64_t>> &rows);

    int order() const {
        return n_;
    }
    std::int64_t operator()(int i, int j) const {
        return entries_[static_cast<std::size_t>(i) * n_ + j];
    }
    std::int64_t &operator()(int i, int j) {
        return entries_[static_cast<std::size_t>(i) * n_ + j];
    }
    std::span<const std::int64_t> row(int i) const {
        return {entries_.data() + static_cast<std::size_t>(i) * n_, static_cast<std::size_t>(n_)};
    }
    std::vector<std::vector<std::int64_t>> rows() const;

    bool is_symmetric() const;

    bool operator==(const CoefficientMatrix &other) const = default;

   private:
    int n_;
    std::vector<std::int64_t> entries_;
};

enum class Party { Alice, Bob };

/// Deterministic outcome assignment: one value in {+1, -1} per setting.
class ClassicalAssignment {
   public:
    /// Throws InvalidParameterError if any value is not exactly +1 or -1.
    ClassicalAssignment(Party party, std::vector<int> values);

    /// The rank-th assignment of `n` values in lexicographic order with -1 < +1.
    static ClassicalAssignment from_rank(Party party, int n, std::uint64_t rank);

    Party party() const {
        return party_;
    }
    const std::vector<int> &values() const {
        return values_;
    }
    int size() const {
        return static_cast<int>(values_.size());
    }
    int operator[](int i) const {
        return values_[static_cast<std::size_t>(i)];
    }

    /// Every value negated.
    ClassicalAssignment flipped() const;

    bool operator==(const ClassicalAssignment &other) const = default;

   private:
    Party party_;
    std::vector<int> values_;
};

struct LhvBoundResult {
    std::int64_t value;
    ClassicalAssignment alice_witness;
    ClassicalAssignment bob_witness;
};

/// Throws InvalidParameterError unless n is even and at least 2.
void require_as_order(int n);

/// The Abner-Shimony coefficient matrix AS_N. With 1-based indices,
///   entry[i][j] = 1             if i + j <= n + 1
///               = -(min(i,j)-1) if i + j == n + 2
///               = 0             otherwise.
/// The rule was read off the explicit N = 2, 4, 6, 8 matrices and is
/// pinned against them in the tests.
CoefficientMatrix build_as_matrix(int n);

/// (n/2)(n/2 + 1).
std::int64_t lhv_bound_closed_form(int n);

/// Sum over i, j of m[i][j] a_i b_j.
std::int64_t classical_value(const CoefficientMatrix &m, const ClassicalAssignment &alice, const ClassicalAssignment &bob);

/// Exact local-hidden-variable bound by enumerating Alice's 2^N assignments;
/// Bob answers each column with the sign of its sum. Ties go to the
/// lexicographically smallest Alice assignment (-1 before +1) and a zero
/// column sum is answered with -1.
LhvBoundResult lhv_bound_bruteforce(const CoefficientMatrix &m);

}  // namespace asbell

#endif
