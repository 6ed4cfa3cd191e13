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

#include "asbell/optimizer.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <thread>

#include <fmt/core.h>

#include "asbell/errors.h"
#include "asbell/quantum.h"

namespace asbell {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

void require_size(const CoefficientMatrix &m, const MeasurementSet &set, const char *who) {
    if (set.size() != m.order()) {
        throw DimensionError(fmt::format(
            "{} measurement set has {} directions, matrix order is {}", who, set.size(), m.order()));
    }
}

void require_valid(const SeesawOptions &options) {
    if (!(options.tol > 0)) {
        throw InvalidParameterError(fmt::format("see-saw tolerance must be positive, got {}", options.tol));
    }
    if (options.max_iter < 1) {
        throw InvalidParameterError(fmt::format("see-saw max_iter must be at least 1, got {}", options.max_iter));
    }
}

double singlet_value(const CoefficientMatrix &m, const MeasurementSet &alice, const MeasurementSet &bob) {
    return bell_quantum_value(m, alice, bob, WernerState::singlet());
}

}  // namespace

DirectionSampler::DirectionSampler(std::uint64_t seed, std::uint64_t stream)
    : engine_(splitmix64(splitmix64(seed) ^ splitmix64(stream ^ 0x5bd1e995ULL))) {
}

double DirectionSampler::next_uniform() {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
}

double DirectionSampler::next_normal() {
    if (spare_normal_) {
        const double v = *spare_normal_;
        spare_normal_.reset();
        return v;
    }
    const double radius = std::sqrt(-2.0 * std::log(next_uniform()));
    const double angle = 2.0 * std::numbers::pi * next_uniform();
    spare_normal_ = radius * std::sin(angle);
    return radius * std::cos(angle);
}

BlochVector DirectionSampler::next() {
    for (;;) {
        const Vec3 v{next_normal(), next_normal(), next_normal()};
        if (v.norm() > 1e-6) {
            return BlochVector::normalized_or_z(v);
        }
    }
}

MeasurementSet DirectionSampler::next_set(int n) {
    std::vector<BlochVector> dirs;
    dirs.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        dirs.push_back(next());
    }
    return MeasurementSet(std::move(dirs));
}

MeasurementSet alice_best_response(const CoefficientMatrix &m, const MeasurementSet &bob) {
    require_size(m, bob, "Bob");
    const int n = m.order();
    std::vector<BlochVector> alice;
    alice.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        Vec3 resultant;
        for (int j = 0; j < n; ++j) {
            resultant += static_cast<double>(m(i, j)) * bob[j].vec();
        }
        alice.push_back(BlochVector::normalized_or_z(-resultant));
    }
    return MeasurementSet(std::move(alice));
}

MeasurementSet bob_best_response(const CoefficientMatrix &m, const MeasurementSet &alice) {
    require_size(m, alice, "Alice");
    const int n = m.order();
    std::vector<BlochVector> bob;
    bob.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        Vec3 resultant;
        for (int i = 0; i < n; ++i) {
            resultant += static_cast<double>(m(i, j)) * alice[i].vec();
        }
        bob.push_back(BlochVector::normalized_or_z(-resultant));
    }
    return MeasurementSet(std::move(bob));
}

OptimizationResult seesaw(const CoefficientMatrix &m, const MeasurementSet &initial_bob, const SeesawOptions &options) {
    require_valid(options);
    require_size(m, initial_bob, "Bob");

    OptimizationResult result;
    result.bob = initial_bob;
    result.alice = alice_best_response(m, result.bob);
    result.value = singlet_value(m, result.alice, result.bob);
    std::vector<double> trajectory;
    if (options.record_trajectory) {
        trajectory.push_back(result.value);
    }

    for (int iter = 1; iter <= options.max_iter; ++iter) {
        const double previous = result.value;
        result.bob = bob_best_response(m, result.alice);
        if (options.record_trajectory) {
            trajectory.push_back(singlet_value(m, result.alice, result.bob));
        }
        result.alice = alice_best_response(m, result.bob);
        result.value = singlet_value(m, result.alice, result.bob);
        if (options.record_trajectory) {
            trajectory.push_back(result.value);
        }
        result.iterations = iter;
        if (result.value - previous < options.tol) {
            result.converged = true;
            break;
        }
    }
    if (options.record_trajectory) {
        result.trajectory = std::move(trajectory);
    }
    return result;
}

OptimizationResult multistart_seesaw(const CoefficientMatrix &m, const MultistartOptions &options) {
    if (options.restarts < 1) {
        throw InvalidParameterError(fmt::format("restarts must be at least 1, got {}", options.restarts));
    }
    if (options.threads < 0) {
        throw InvalidParameterError(fmt::format("threads must be non-negative, got {}", options.threads));
    }
    // Validated up front so worker threads never throw.
    require_valid(options.seesaw);

    std::vector<OptimizationResult> results(static_cast<std::size_t>(options.restarts));
    auto run = [&](int k) {
        DirectionSampler sampler(options.seed, static_cast<std::uint64_t>(k));
        results[k] = seesaw(m, sampler.next_set(m.order()), options.seesaw);
        results[k].restart_index = k;
    };

    int workers = options.threads == 0 ? static_cast<int>(std::thread::hardware_concurrency()) : options.threads;
    workers = std::clamp(workers, 1, options.restarts);
    if (workers == 1) {
        for (int k = 0; k < options.restarts; ++k) {
            run(k);
        }
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (int k = w; k < options.restarts; k += workers) {
                    run(k);
                }
            });
        }
    }

    std::size_t best = 0;
    for (std::size_t k = 1; k < results.size(); ++k) {
        if (results[k].value > results[best].value) {
            best = k;
        }
    }
    return std::move(results[best]);
}

}  // namespace asbell
