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

#include "asbell/quantum.h"

#include <cmath>
#include <numbers>
#include <random>

#include "gtest/gtest.h"

#include "asbell/errors.h"
#include "asbell/optimizer.h"
#include "asbell/two_qubit.h"
#include "test_support.h"

using namespace asbell;

namespace {

constexpr double kPi = std::numbers::pi;

void expect_vec(const BlochVector &v, double x, double y, double z, double tol = 1e-15) {
    EXPECT_NEAR(v.x(), x, tol);
    EXPECT_NEAR(v.y(), y, tol);
    EXPECT_NEAR(v.z(), z, tol);
}

}  // namespace

TEST(bloch_from_spherical, poles_and_equator) {
    expect_vec(BlochVector::from_spherical(0, 1.234), 0, 0, 1);
    expect_vec(BlochVector::from_spherical(kPi / 2, 0), 1, 0, 0);
    expect_vec(BlochVector::from_spherical(kPi, 0), 0, 0, -1);
}

TEST(BlochVector, renormalises_near_unit_and_rejects_far) {
    const auto v = BlochVector::from_components(0, 0, 1 + 5e-10);
    EXPECT_DOUBLE_EQ(v.z(), 1.0);
    EXPECT_THROW(BlochVector::from_components(0, 0, 1 + 1e-8), InvalidDirectionError);
    EXPECT_THROW(BlochVector::from_components(0, 0, 0), InvalidDirectionError);
    EXPECT_THROW(BlochVector::from_components(NAN, 0, 1), InvalidDirectionError);
    expect_vec(BlochVector::normalized_or_z({0, 0, 0}), 0, 0, 1);
}

TEST(WernerState, validates_visibility) {
    EXPECT_THROW(WernerState(-0.1), InvalidParameterError);
    EXPECT_THROW(WernerState(1.5), InvalidParameterError);
    EXPECT_THROW(WernerState(NAN), InvalidParameterError);
    EXPECT_EQ(WernerState::singlet().visibility(), 1.0);
}

TEST(correlation, examples) {
    const auto z = BlochVector::from_components(0, 0, 1);
    const auto x = BlochVector::from_components(1, 0, 0);
    const auto y = BlochVector::from_components(0, 1, 0);
    EXPECT_EQ(correlation(z, z, WernerState(1)), -1);
    EXPECT_EQ(correlation(z, x, WernerState(0.3)), 0);
    EXPECT_EQ(correlation(z, z, WernerState(0)), 0);

    EXPECT_NEAR(correlation_density_matrix(z, z, WernerState(1)), -1, 1e-15);
    EXPECT_NEAR(correlation_density_matrix(x, y, WernerState(1)), 0, 1e-15);
}

TEST(correlation_density_matrix, matches_analytic_on_random_inputs) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> unit(0, 1);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto a = test_support::random_direction(rng);
        const auto b = test_support::random_direction(rng);
        const WernerState state(trial == 0 ? 0.7 : unit(rng));
        const double analytic = -state.visibility() * a.dot(b);
        EXPECT_NEAR(correlation_density_matrix(a, b, state), analytic, 1e-12);
        EXPECT_NEAR(correlation(a, b, state), analytic, 1e-15);
        EXPECT_LE(std::abs(correlation(a, b, state)), state.visibility() + 1e-15);
    }
}

TEST(two_qubit, werner_density_matrix_is_a_state) {
    using namespace two_qubit;
    for (double v : {0.0, 0.35, 1.0}) {
        const Mat4 rho = werner_density_matrix(v);
        Complex trace = 0;
        for (int r = 0; r < 4; ++r) {
            trace += rho[r][r];
            for (int c = 0; c < 4; ++c) {
                EXPECT_NEAR(std::abs(rho[r][c] - std::conj(rho[c][r])), 0, 1e-15);
            }
        }
        EXPECT_NEAR(trace.real(), 1, 1e-15);
        EXPECT_NEAR(trace.imag(), 0, 1e-15);
    }
    // Pauli algebra: sigma_x sigma_y = i sigma_z, so tr(sigma_x sigma_y sigma_z) = 2i.
    const Mat2 sx = pauli_x(), sy = pauli_y(), sz = pauli_z();
    Mat2 xy{};
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            for (int k = 0; k < 2; ++k) {
                xy[r][c] += sx[r][k] * sy[k][c];
            }
        }
    }
    EXPECT_NEAR(std::abs(trace_product(xy, sz) - Complex(0, 2)), 0, 1e-15);
}

TEST(bell_quantum_value, chsh_geometry) {
    const auto m = build_as_matrix(2);
    const auto z = BlochVector::from_components(0, 0, 1);
    const auto x = BlochVector::from_components(1, 0, 0);
    const double s = 1 / std::sqrt(2.0);
    const MeasurementSet bob({z, x});
    const MeasurementSet alice({BlochVector::from_components(-s, 0, -s), BlochVector::from_components(s, 0, -s)});
    EXPECT_NEAR(bell_quantum_value(m, alice, bob, WernerState(1)), 2 * std::sqrt(2.0), 1e-14);
    EXPECT_EQ(bell_quantum_value(m, alice, bob, WernerState(0)), 0);
}

TEST(bell_quantum_value, dimension_mismatch) {
    const MeasurementSet two({BlochVector(), BlochVector()});
    const MeasurementSet three({BlochVector(), BlochVector(), BlochVector()});
    EXPECT_THROW(bell_quantum_value(build_as_matrix(2), two, three, WernerState(1)), DimensionError);
}

TEST(bell_quantum_value, linear_in_visibility) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> unit(0, 1);
    for (int n = 2; n <= 10; n += 2) {
        const auto m = build_as_matrix(n);
        for (int trial = 0; trial < 20; ++trial) {
            const auto alice = test_support::random_set(rng, n);
            const auto bob = test_support::random_set(rng, n);
            const double v = unit(rng);
            EXPECT_EQ(bell_quantum_value(m, alice, bob, WernerState(v)), v * bell_quantum_value(m, alice, bob, WernerState(1)));
        }
    }
}

TEST(bell_quantum_value, joint_rotation_invariance) {
    std::mt19937_64 rng(5);
    for (int n = 2; n <= 10; n += 2) {
        const auto m = build_as_matrix(n);
        for (int trial = 0; trial < 20; ++trial) {
            const auto alice = test_support::random_set(rng, n);
            const auto bob = test_support::random_set(rng, n);
            const auto r = test_support::random_rotation(rng);
            EXPECT_NEAR(bell_quantum_value(m, test_support::rotate(r, alice), test_support::rotate(r, bob), WernerState(1)),
                        bell_quantum_value(m, alice, bob, WernerState(1)), 1e-10);
        }
    }
}

TEST(bell_quantum_value, random_sets_stay_below_closed_form) {
    std::mt19937_64 rng(9);
    for (int n = 2; n <= 8; n += 2) {
        const auto m = build_as_matrix(n);
        const double bound = max_quantum_closed_form(n);
        for (int trial = 0; trial < 500; ++trial) {
            const auto bob = test_support::random_set(rng, n);
            // Random Alice and the best response to a random Bob both stay below.
            EXPECT_LE(bell_quantum_value(m, test_support::random_set(rng, n), bob, WernerState(1)), bound + 1e-9);
            EXPECT_LE(bell_quantum_value(m, alice_best_response(m, bob), bob, WernerState(1)), bound + 1e-9);
        }
    }
}

TEST(max_quantum_closed_form, values) {
    EXPECT_NEAR(max_quantum_closed_form(2), 2 * std::sqrt(2.0), 1e-14);
    EXPECT_NEAR(max_quantum_closed_form(4), 10 * std::sqrt(2.0 / 3.0), 1e-14);
    EXPECT_NEAR(max_quantum_closed_form(6), 28 / std::sqrt(3.0), 1e-13);
    EXPECT_NEAR(max_quantum_closed_form(8), 12 * std::sqrt(5.0), 1e-13);
    EXPECT_NEAR(max_quantum_closed_form(10), 22 * std::sqrt(10.0 / 3.0), 1e-13);
    EXPECT_NEAR(max_quantum_closed_form(12), 13 * std::sqrt(168.0) / 3, 1e-13);
    EXPECT_THROW(max_quantum_closed_form(3), InvalidParameterError);
}
