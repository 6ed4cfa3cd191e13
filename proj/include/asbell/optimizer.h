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

#ifndef ASBELL_OPTIMIZER_H
#define ASBELL_OPTIMIZER_H

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "asbell/bloch.h"
#include "asbell/inequality.h"

namespace asbell {

struct OptimizationResult {
    double value = 0;
    MeasurementSet alice;
    MeasurementSet bob;
    int iterations = 0;
    bool converged = false;
    int restart_index = 0;
    /// Value after every half-step (Alice update, Bob update, ...), starting
    /// with the initial Alice best response. Only filled on request.
    std::optional<std::vector<double>> trajectory;
};

struct SeesawOptions {
    /// Stop once a full iteration improves the value by less than this.
    double tol = 1e-12;
    int max_iter = 10'000;
    bool record_trajectory = false;
};

struct MultistartOptions {
    int restarts = 32;
    std::uint64_t seed = 0;
    SeesawOptions seesaw;
    /// Worker threads; 0 picks std::thread::hardware_concurrency().
    int threads = 0;
};

/// Singlet-optimal Alice directions for fixed Bob: a_i = -normalize(sum_j m[i][j] b_j),
/// falling back to +z when the resultant is below 1e-12.
MeasurementSet alice_best_response(const CoefficientMatrix &m, const MeasurementSet &bob);

/// Mirror of alice_best_response using column resultants sum_i m[i][j] a_i.
MeasurementSet bob_best_response(const CoefficientMatrix &m, const MeasurementSet &alice);

/// Alternating best responses from `initial_bob`, maximising the singlet value.
/// Throws InvalidParameterError for tol <= 0 or max_iter < 1.
OptimizationResult seesaw(const CoefficientMatrix &m, const MeasurementSet &initial_bob, const SeesawOptions &options = {});

/// Best of `restarts` see-saw runs from uniformly random Bob sets. The start
/// of restart k depends only on (seed, k), and the winner is the largest value
/// with the lowest restart index breaking exact ties, so the result does not
/// depend on the thread count.
OptimizationResult multistart_seesaw(const CoefficientMatrix &m, const MultistartOptions &options = {});

/// Uniform random directions drawn from the stream keyed by (seed, stream).
class DirectionSampler {
   public:
    DirectionSampler(std::uint64_t seed, std::uint64_t stream);

    BlochVector next();
    MeasurementSet next_set(int n);
    /// Standard normal deviate (Box-Muller over the 53-bit uniform).
    double next_normal();
    /// Uniform in the open interval (0, 1).
    double next_uniform();

   private:
    std::mt19937_64 engine_;
    std::optional<double> spare_normal_;
};

}  // namespace asbell

#endif
