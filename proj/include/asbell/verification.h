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

#ifndef ASBELL_VERIFICATION_H
#define ASBELL_VERIFICATION_H

#include <optional>
#include <string>
#include <vector>

#include "asbell/catalog.h"
#include "asbell/optimizer.h"

namespace asbell {

/// Outcome of checking that a direction catalog attains the closed-form
/// quantum maximum. Problems found are listed in `anomalies`; they are data,
/// never exceptions.
struct VerificationReport {
    int n = 0;
    double target = 0;
    double tolerance = 0;
    /// "published" when the catalog supplies Alice, else "best_response".
    std::string alice_source;
    double achieved = 0;
    double deviation = 0;
    bool passed = false;

    /// Catalog Bob set with Alice replaced by her best response.
    double best_response_value = 0;
    double best_response_deviation = 0;
    bool best_response_passed = false;

    /// See-saw run started from the catalog Bob set.
    OptimizationResult seesaw_witness;

    /// Best-response value against canonical_bob, when the catalog has one.
    std::optional<double> canonical_value;
    std::optional<bool> canonical_passed;

    std::vector<std::string> anomalies;
};

/// Default attainment tolerance: 1e-6, widened to 1e-3 for N = 10 whose
/// angles are published to four decimals.
double default_verification_tolerance(int n);

VerificationReport verify_directions(int n, const DirectionCatalogEntry &entry);
VerificationReport verify_directions(int n, const DirectionCatalogEntry &entry, double tolerance);

}  // namespace asbell

#endif
