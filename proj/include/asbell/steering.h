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

#ifndef ASBELL_STEERING_H
#define ASBELL_STEERING_H

#include <vector>

#include "asbell/bloch.h"
#include "asbell/inequality.h"

namespace asbell {

/// Assignments whose norm is within this of the maximum count as ties.
inline constexpr double kSteeringTieTolerance = 1e-12;

struct SteeringBoundResult {
    /// Local-hidden-state bound C_LHS = |sum_j c_j b_j| for the witness.
    double value = 0;
    ClassicalAssignment alice_witness{Party::Alice, {}};
    /// Bloch vector of Bob's optimal hidden state; +z if the resultant vanishes.
    BlochVector bob_state_direction;
    /// c_j = sum_i m[i][j] A_i for the witness.
    std::vector<double> column_sums;
};

struct ThresholdPair {
    double v_lhv = 0;
    double v_lhs = 0;
};

/// Maximum of sum_{i,j} m[i][j] A_i <sigma.b_j> over A in {+-1}^N and Bob's
/// qubit states. For fixed A the best state points along sum_j c_j b_j, so
/// the bound is the largest resultant norm over the 2^N assignments. Among
/// assignments within kSteeringTieTolerance of the maximum the
/// lexicographically smallest is reported.
SteeringBoundResult steering_lhs_bound(const CoefficientMatrix &m, const MeasurementSet &bob);

struct SteeringOracleOptions {
    /// Fibonacci-lattice points used to seed the per-assignment state search.
    int grid_points = 2000;
    /// Pattern search stops when its step (radians) drops below this.
    double min_step = 1e-10;
};

/// The same bound computed without the resultant-norm shortcut: for every
/// assignment the steering expression is evaluated through explicit qubit
/// density matrices over a grid of Bob states and then refined by a pattern
/// search on the sphere. Intended for N <= 12.
double steering_lhs_bound_oracle(
    const CoefficientMatrix &m, const MeasurementSet &bob, const SteeringOracleOptions &options = {});

/// Werner visibilities below which the Bell and steering expressions admit
/// LHV and LHS models: C_LHV / quantum_max and C_LHS / quantum_max.
ThresholdPair werner_thresholds(const CoefficientMatrix &m, const MeasurementSet &bob, double quantum_max);

}  // namespace asbell

#endif
