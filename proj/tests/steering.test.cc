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

#include "asbell/steering.h"

#include <cmath>
#include <random>

#include "gtest/gtest.h"

#include "asbell/catalog.h"
#include "asbell/errors.h"
#include "asbell/published.h"
#include "asbell/quantum.h"
#include "test_support.h"

using namespace asbell;

namespace {

// Largest |sum_j c_j b_j| over all assignments; a plain reference loop.
double reference_norm_max(const CoefficientMatrix &m, const MeasurementSet &bob) {
    const int n = m.order();
    double best = 0;
    for (std::uint64_t rank = 0; rank < (std::uint64_t{1} << n); ++rank) {
        const auto a = ClassicalAssignment::from_rank(Party::Alice, n, rank);
        Vec3 r;
        for (int j = 0; j < n; ++j) {
            double c = 0;
            for (int i = 0; i < n; ++i) {
                c += static_cast<double>(m(i, j) * a[i]);
            }
            r += c * bob[j].vec();
        }
        best = std::max(best, r.norm());
    }
    return best;
}

}  // namespace

TEST(steering_lhs_bound, published_closed_forms) {
    EXPECT_NEAR(steering_lhs_bound(build_as_matrix(4), published_directions(4).bob).value, 2 * std::sqrt(23.0 / 3.0), 1e-9);
    EXPECT_NEAR(steering_lhs_bound(build_as_matrix(6), published_directions(6).bob).value, std::sqrt(358.0 / 3.0), 1e-9);
    EXPECT_NEAR(steering_lhs_bound(build_as_matrix(8), published_directions(8).bob).value,
                std::sqrt(2 * (10444 + std::sqrt(20305.0)) / 65), 1e-9);
    for (int n : {4, 6, 8}) {
        const auto pub = published_steering_values(n);
        ASSERT_TRUE(pub);
        EXPECT_NEAR(steering_lhs_bound(build_as_matrix(n), published_directions(n).bob).value, pub->c_lhs, 1e-9);
    }
}

TEST(steering_lhs_bound, two_settings) {
    const auto m = build_as_matrix(2);
    const auto e = published_directions(2);
    const auto canonical = steering_lhs_bound(m, *e.canonical_bob);
    EXPECT_NEAR(canonical.value, 2, 1e-15);
    EXPECT_EQ(canonical.alice_witness.values(), (std::vector<int>{-1, -1}));
    EXPECT_NEAR(steering_lhs_bound(m, e.bob).value, 2, 1e-15);
}

TEST(steering_lhs_bound, ten_settings_disagrees_with_printed_decimal) {
    // Independent numpy enumeration of the same 1024 assignments gives 27.232058090823607.
    const auto r = steering_lhs_bound(build_as_matrix(10), published_directions(10).bob);
    EXPECT_NEAR(r.value, 27.232058090823607, 1e-9);
    EXPECT_GT(std::abs(r.value - published_steering_values(10)->c_lhs), 0.1);
}

TEST(steering_lhs_bound, witness_invariants) {
    for (int n : catalog_orders()) {
        const auto m = build_as_matrix(n);
        const MeasurementSet bob = published_directions(n).default_bob();
        const auto r = steering_lhs_bound(m, bob);
        Vec3 resultant;
        for (int j = 0; j < n; ++j) {
            double c = 0;
            for (int i = 0; i < n; ++i) {
                c += static_cast<double>(m(i, j) * r.alice_witness[i]);
            }
            EXPECT_EQ(c, r.column_sums[j]);
            resultant += c * bob[j].vec();
        }
        EXPECT_EQ(r.value, resultant.norm());
        EXPECT_NEAR(r.bob_state_direction.dot(BlochVector::normalized_or_z(resultant)), 1, 1e-15);
        EXPECT_NEAR(r.value, reference_norm_max(m, bob), 1e-12);
        // Lexicographic tie-break: the winner of each +-pair starts with -1.
        EXPECT_EQ(r.alice_witness[0], -1);
        EXPECT_NEAR(steering_lhs_bound(m, bob).value, r.value, 0);
    }
}

TEST(steering_lhs_bound, zero_resultant_defaults_to_z) {
    const auto r = steering_lhs_bound(CoefficientMatrix(3), MeasurementSet({BlochVector(), BlochVector(), BlochVector()}));
    EXPECT_EQ(r.value, 0);
    EXPECT_EQ(r.bob_state_direction, BlochVector::from_components(0, 0, 1));
    EXPECT_EQ(r.alice_witness.values(), (std::vector<int>{-1, -1, -1}));
}

TEST(steering_lhs_bound, errors) {
    EXPECT_THROW(steering_lhs_bound(build_as_matrix(4), published_directions(2).bob), DimensionError);
    std::mt19937_64 rng(1);
    EXPECT_THROW(steering_lhs_bound(build_as_matrix(26), test_support::random_set(rng, 26)), ResourceLimitError);
}

TEST(steering_lhs_bound, bounded_by_lhv_and_strict_for_catalogs) {
    std::mt19937_64 rng(21);
    for (int n : catalog_orders()) {
        const auto m = build_as_matrix(n);
        const double lhv = static_cast<double>(lhv_bound_bruteforce(m).value);
        const double lhs = steering_lhs_bound(m, published_directions(n).default_bob()).value;
        EXPECT_LE(lhs, lhv + 1e-12);
        if (n > 2) {
            EXPECT_LT(lhs, lhv) << n;
        }
        for (int trial = 0; trial < 100; ++trial) {
            EXPECT_LE(steering_lhs_bound(m, test_support::random_set(rng, n)).value, lhv + 1e-12);
        }
    }
}

TEST(steering_lhs_bound, rotation_invariant) {
    std::mt19937_64 rng(4);
    for (int n : catalog_orders()) {
        const auto m = build_as_matrix(n);
        const MeasurementSet bob = published_directions(n).default_bob();
        const double base = steering_lhs_bound(m, bob).value;
        for (int trial = 0; trial < 10; ++trial) {
            EXPECT_NEAR(steering_lhs_bound(m, test_support::rotate(test_support::random_rotation(rng), bob)).value, base, 1e-10);
        }
    }
}

TEST(steering_lhs_bound, witness_flip_keeps_value) {
    for (int n : catalog_orders()) {
        const auto m = build_as_matrix(n);
        const MeasurementSet bob = published_directions(n).default_bob();
        const auto r = steering_lhs_bound(m, bob);
        const auto flipped = r.alice_witness.flipped();
        Vec3 resultant;
        for (int j = 0; j < n; ++j) {
            double c = 0;
            for (int i = 0; i < n; ++i) {
                c += static_cast<double>(m(i, j) * flipped[i]);
            }
            resultant += c * bob[j].vec();
        }
        EXPECT_NEAR(resultant.norm(), r.value, 1e-12);
    }
}

TEST(steering_lhs_bound_oracle, matches_shortcut) {
    for (int n : catalog_orders()) {
        const auto m = build_as_matrix(n);
        const MeasurementSet bob = published_directions(n).default_bob();
        EXPECT_NEAR(steering_lhs_bound_oracle(m, bob), steering_lhs_bound(m, bob).value, 1e-6) << n;
    }
    EXPECT_NEAR(steering_lhs_bound_oracle(build_as_matrix(4), published_directions(4).bob), 5.5377492419453835, 1e-6);
    EXPECT_NEAR(steering_lhs_bound_oracle(build_as_matrix(8), published_directions(8).bob), 18.0482, 1e-4);
    std::mt19937_64 rng(8);
    for (int n = 2; n <= 6; n += 2) {
        const auto bob = test_support::random_set(rng, n);
        EXPECT_NEAR(steering_lhs_bound_oracle(build_as_matrix(n), bob), steering_lhs_bound(build_as_matrix(n), bob).value, 1e-6);
    }
}

TEST(werner_thresholds, published_values) {
    auto thresholds = [](int n) {
        return werner_thresholds(build_as_matrix(n), published_directions(n).default_bob(), max_quantum_closed_form(n));
    };
    const auto t2 = thresholds(2);
    EXPECT_NEAR(t2.v_lhv, 1 / std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(t2.v_lhs, 1 / std::sqrt(2.0), 1e-12);
    const auto t4 = thresholds(4);
    EXPECT_NEAR(t4.v_lhv, 3 * std::sqrt(3.0) / (5 * std::sqrt(2.0)), 1e-12);
    EXPECT_NEAR(t4.v_lhs, std::sqrt(23.0) / (5 * std::sqrt(2.0)), 1e-12);
    EXPECT_NEAR(thresholds(6).v_lhs, std::sqrt(179.0) / (14 * std::sqrt(2.0)), 1e-12);
    EXPECT_NEAR(thresholds(8).v_lhs, 0.6726, 5e-5);
    for (int n : catalog_orders()) {
        const auto t = thresholds(n);
        EXPECT_NEAR(t.v_lhv, 3 * std::sqrt(n * (2.0 + n)) / (4 + 4.0 * n), 1e-12);
        EXPECT_GT(t.v_lhs, 0);
        if (n == 2) {
            EXPECT_NEAR(t.v_lhs, t.v_lhv, 1e-15);
        } else {
            EXPECT_LT(t.v_lhs, t.v_lhv);
        }
    }
}

TEST(werner_thresholds, rejects_nonpositive_maximum) {
    const auto m = build_as_matrix(2);
    const MeasurementSet bob = published_directions(2).default_bob();
    EXPECT_THROW(werner_thresholds(m, bob, 0), InvalidParameterError);
    EXPECT_THROW(werner_thresholds(m, bob, -1), InvalidParameterError);
    EXPECT_THROW(werner_thresholds(m, bob, NAN), InvalidParameterError);
}
