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

#ifndef ASBELL_CATALOG_H
#define ASBELL_CATALOG_H

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "asbell/bloch.h"

namespace asbell {

/// Published measurement directions for one AS_N inequality.
struct DirectionCatalogEntry {
    int n = 0;
    MeasurementSet bob;
    /// Absent when the published angles do not determine every direction.
    std::optional<MeasurementSet> alice;
    /// N = 2 only: the orthogonal pair {+z, +x}, used by default because the
    /// published N = 2 Bob angles are collinear.
    std::optional<MeasurementSet> canonical_bob;
    std::string provenance_notes;

    /// Bob set used for LHS bounds and thresholds.
    const MeasurementSet &default_bob() const {
        return canonical_bob ? *canonical_bob : bob;
    }
};

/// 1 / sqrt((n/2)(n/2 + 1)).
double unified_offset(int n);

/// The unified two-parameter family for n >= 4, built from n - 2 angles:
///   d_1 = ( Y, sqrt(1-Y^2) sin t_0, sqrt(1-Y^2) cos t_0)
///   d_2 = (-Y, sqrt(1-Y^2) sin t_0, sqrt(1-Y^2) cos t_0)
///   d_i = ( 0, sin t_{i-2}, cos t_{i-2})        3 <= i <= n-1
///   d_n = ( 1, 0, 0)
/// with Y = unified_offset(n). Throws InvalidParameterError unless n is even,
/// n >= 4 and angles.size() == n - 2.
MeasurementSet unified_directions(int n, std::span<const double> angles);

/// Catalog for n in {2, 4, 6, 8, 10}; InvalidParameterError otherwise.
DirectionCatalogEntry published_directions(int n);

/// Even orders for which published_directions has an entry.
std::vector<int> catalog_orders();

}  // namespace asbell

#endif
