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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <fmt/core.h>

#include "assignment_walk.h"
#include "asbell/errors.h"
#include "asbell/two_qubit.h"

namespace asbell {

namespace {

void require_bob(const CoefficientMatrix &m, const MeasurementSet &bob) {
    if (bob.size() != m.order()) {
        throw DimensionError(
            fmt::format("Bob measurement set has {} directions, matrix order is {}", bob.size(), m.order()));
    }
}

Vec3 resultant(std::span<const std::int64_t> sums, const MeasurementSet &bob) {
    Vec3 r;
    for (int j = 0; j < bob.size(); ++j) {
        r += static_cast<double>(sums[j]) * bob[j].vec();
    }
    return r;
}

}  // namespace

SteeringBoundResult steering_lhs_bound(const CoefficientMatrix &m, const MeasurementSet &bob) {
    require_bob(m, bob);
    const int n = m.order();

    double best = -1;
    detail::walk_assignments(m, [&](std::uint64_t, std::span<const std::int64_t> sums) {
        best = std::max(best, resultant(sums, bob).norm());
    });

    // Second pass: earliest assignment in lexicographic order that ties the maximum.
    std::uint64_t witness_rank = 0;
    bool found = false;
    std::vector<std::int64_t> witness_sums;
    detail::walk_assignments(m, [&](std::uint64_t rank, std::span<const std::int64_t> sums) {
        if (!found && resultant(sums, bob).norm() >= best - kSteeringTieTolerance) {
            found = true;
            witness_rank = rank;
            witness_sums.assign(sums.begin(), sums.end());
        }
    });

    const Vec3 r = resultant(witness_sums, bob);
    SteeringBoundResult out;
    out.value = r.norm();
    out.alice_witness = ClassicalAssignment::from_rank(Party::Alice, n, witness_rank);
    out.bob_state_direction = BlochVector::normalized_or_z(r);
    if (r.norm() < 1e-12) {
        out.value = 0;
    }
    out.column_sums.assign(witness_sums.begin(), witness_sums.end());
    return out;
}

double steering_lhs_bound_oracle(const CoefficientMatrix &m, const MeasurementSet &bob, const SteeringOracleOptions &options) {
    require_bob(m, bob);
    detail::require_enumerable(m.order());
    if (options.grid_points < 1 || !(options.min_step > 0)) {
        throw InvalidParameterError("oracle needs grid_points >= 1 and a positive min_step");
    }
    using namespace two_qubit;
    const int n = m.order();

    std::vector<Mat2> observables;
    observables.reserve(static_cast<std::size_t>(n));
    for (const auto &b : bob) {
        observables.push_back(spin_observable(b.vec()));
    }
    // <sigma.b_j> in the pure state with Bloch vector s, via tr(rho_s B_j).
    auto expectations = [&](const Vec3 &s, std::vector<double> &out) {
        const Mat2 rho = qubit_state(s);
        for (int j = 0; j < n; ++j) {
            out[j] = trace_product(rho, observables[j]).real();
        }
    };

    const int g = options.grid_points;
    std::vector<Vec3> grid(static_cast<std::size_t>(g));
    std::vector<double> table(static_cast<std::size_t>(g) * n);
    std::vector<double> scratch(static_cast<std::size_t>(n));
    const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (int k = 0; k < g; ++k) {
        const double z = 1.0 - (2.0 * k + 1.0) / g;
        const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        grid[k] = {r * std::cos(golden_angle * k), r * std::sin(golden_angle * k), z};
        expectations(grid[k], scratch);
        std::copy(scratch.begin(), scratch.end(), table.begin() + static_cast<std::ptrdiff_t>(k) * n);
    }

    std::vector<double> weights(static_cast<std::size_t>(n));
    auto steer_value = [&](const Vec3 &s) {
        expectations(s, scratch);
        double v = 0;
        for (int j = 0; j < n; ++j) {
            v += weights[j] * scratch[j];
        }
        return v;
    };

    double best = 0;
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t rank = 0; rank < total; ++rank) {
        const ClassicalAssignment a = ClassicalAssignment::from_rank(Party::Alice, n, rank);
        for (int j = 0; j < n; ++j) {
            double w = 0;
            for (int i = 0; i < n; ++i) {
                w += static_cast<double>(m(i, j) * a[i]);
            }
            weights[j] = w;
        }

        int start = 0;
        double start_value = -1e300;
        for (int k = 0; k < g; ++k) {
            double v = 0;
            for (int j = 0; j < n; ++j) {
                v += weights[j] * table[static_cast<std::size_t>(k) * n + j];
            }
            if (v > start_value) {
                start_value = v;
                start = k;
            }
        }

        Vec3 s = grid[start];
        double value = steer_value(s);
        for (double step = 0.1; step >= options.min_step;) {
            // Orthonormal tangent frame at s.
            const Vec3 helper = std::abs(s.z) < 0.9 ? Vec3{0, 0, 1} : Vec3{1, 0, 0};
            Vec3 t1 = helper.cross(s);
            t1 *= 1.0 / t1.norm();
            const Vec3 t2 = s.cross(t1);
            bool moved = false;
            for (const Vec3 &t : {t1, -t1, t2, -t2}) {
                Vec3 trial = std::cos(step) * s + std::sin(step) * t;
                trial *= 1.0 / trial.norm();
                const double v = steer_value(trial);
                if (v > value) {
                    value = v;
                    s = trial;
                    moved = true;
                    break;
                }
            }
            if (!moved) {
                step *= 0.5;
            }
        }
        best = std::max(best, value);
    }
    return best;
}

ThresholdPair werner_thresholds(const CoefficientMatrix &m, const MeasurementSet &bob, double quantum_max) {
    if (!(quantum_max > 0) || !std::isfinite(quantum_max)) {
        throw InvalidParameterError(fmt::format("quantum maximum must be positive, got {}", quantum_max));
    }
    const double c_lhv = static_cast<double>(lhv_bound_bruteforce(m).value);
    const double c_lhs = steering_lhs_bound(m, bob).value;
    return ThresholdPair{c_lhv / quantum_max, c_lhs / quantum_max};
}

}  // namespace asbell
