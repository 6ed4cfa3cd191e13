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

#include "asbell/verification.h"

#include <array>
#include <cmath>

#include <fmt/core.h>

#include "asbell/errors.h"
#include "asbell/inequality.h"
#include "asbell/quantum.h"

namespace asbell {

namespace {

constexpr double kCollinearTolerance = 1e-9;

MeasurementSet reflect(const MeasurementSet &set, const std::array<int, 3> &signs) {
    std::vector<BlochVector> out;
    for (const auto &d : set) {
        out.push_back(BlochVector::from_components(signs[0] * d.x(), signs[1] * d.y(), signs[2] * d.z()));
    }
    return MeasurementSet(std::move(out));
}

std::string axes_label(const std::array<int, 3> &signs) {
    std::string out;
    const char *names[] = {"x", "y", "z"};
    for (int k = 0; k < 3; ++k) {
        if (signs[k] < 0) {
            out += out.empty() ? names[k] : std::string("/") + names[k];
        }
    }
    return out;
}

}  // namespace

double default_verification_tolerance(int n) {
    return n >= 10 ? 1e-3 : 1e-6;
}

VerificationReport verify_directions(int n, const DirectionCatalogEntry &entry) {
    return verify_directions(n, entry, default_verification_tolerance(n));
}

VerificationReport verify_directions(int n, const DirectionCatalogEntry &entry, double tolerance) {
    if (entry.n != n || entry.bob.size() != n) {
        throw DimensionError(fmt::format("catalog entry is for N = {} with {} Bob directions, asked to verify N = {}",
                                         entry.n, entry.bob.size(), n));
    }
    const CoefficientMatrix m = build_as_matrix(n);
    const WernerState singlet = WernerState::singlet();

    VerificationReport report;
    report.n = n;
    report.target = max_quantum_closed_form(n);
    report.tolerance = tolerance;

    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (std::abs(entry.bob[i].dot(entry.bob[j])) > 1.0 - kCollinearTolerance) {
                report.anomalies.push_back(fmt::format(
                    "Bob directions b_{} and b_{} are collinear (b_{}.b_{} = {:.12g})", i + 1, j + 1, i + 1, j + 1,
                    entry.bob[i].dot(entry.bob[j])));
            }
        }
    }

    const MeasurementSet best_alice = alice_best_response(m, entry.bob);
    report.best_response_value = bell_quantum_value(m, best_alice, entry.bob, singlet);
    report.best_response_deviation = std::abs(report.best_response_value - report.target);
    report.best_response_passed = report.best_response_deviation <= tolerance;
    if (!report.best_response_passed) {
        report.anomalies.push_back(fmt::format(
            "catalog Bob set with best-response Alice reaches {:.12g}, short of the maximum {:.12g} by {:.3g}",
            report.best_response_value, report.target, report.target - report.best_response_value));
    }

    if (entry.alice) {
        if (entry.alice->size() != n) {
            throw DimensionError(fmt::format("catalog Alice set has {} directions, N = {}", entry.alice->size(), n));
        }
        report.alice_source = "published";
        report.achieved = bell_quantum_value(m, *entry.alice, entry.bob, singlet);
    } else {
        report.alice_source = "best_response";
        report.achieved = report.best_response_value;
    }
    report.deviation = std::abs(report.achieved - report.target);
    report.passed = report.deviation <= tolerance;

    if (entry.alice && !report.passed) {
        report.anomalies.push_back(fmt::format(
            "published Alice set evaluates to {:.12g} against the maximum {:.12g} (deviation {:.6g})", report.achieved,
            report.target, report.deviation));
        // A sign-convention mismatch shows up as a reflection of Alice's set.
        for (int mask = 1; mask < 8; ++mask) {
            const std::array<int, 3> signs{(mask & 1) ? -1 : 1, (mask & 2) ? -1 : 1, (mask & 4) ? -1 : 1};
            const double value = bell_quantum_value(m, reflect(*entry.alice, signs), entry.bob, singlet);
            if (std::abs(value - report.target) <= tolerance) {
                report.anomalies.push_back(fmt::format(
                    "negating the {} components of the published Alice set recovers {:.12g}", axes_label(signs),
                    value));
            }
        }
    }

    report.seesaw_witness = seesaw(m, entry.bob);

    if (entry.canonical_bob) {
        const MeasurementSet alice = alice_best_response(m, *entry.canonical_bob);
        report.canonical_value = bell_quantum_value(m, alice, *entry.canonical_bob, singlet);
        report.canonical_passed = std::abs(*report.canonical_value - report.target) <= tolerance;
        if (!*report.canonical_passed) {
            report.anomalies.push_back(
                fmt::format("canonical Bob set reaches only {:.12g}", *report.canonical_value));
        }
    }
    return report;
}

}  // namespace asbell
