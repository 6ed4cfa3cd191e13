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

#include "asbell/bloch.h"

#include <cmath>
#include <string>

#include <fmt/core.h>

#include "asbell/errors.h"

namespace asbell {

BlochVector BlochVector::from_components(double x, double y, double z) {
    const double norm = std::sqrt(x * x + y * y + z * z);
    if (!std::isfinite(norm) || std::abs(norm - 1.0) > kRenormalizeTolerance) {
        throw InvalidDirectionError(fmt::format(
            "direction ({}, {}, {}) has norm {:.17g}; expected a unit vector", x, y, z, norm));
    }
    BlochVector b;
    if (norm == 1.0) {
        b.v_ = {x, y, z};
    } else {
        b.v_ = {x / norm, y / norm, z / norm};
    }
    return b;
}

BlochVector BlochVector::from_spherical(double theta, double phi) {
    const double s = std::sin(theta);
    return from_components(s * std::cos(phi), s * std::sin(phi), std::cos(theta));
}

BlochVector BlochVector::normalized_or_z(const Vec3 &v, double zero_threshold) {
    const double norm = v.norm();
    BlochVector b;
    if (norm < zero_threshold) {
        return b;
    }
    b.v_ = {v.x / norm, v.y / norm, v.z / norm};
    return b;
}

WernerState::WernerState(double visibility) : visibility_(visibility) {
    if (!(visibility >= 0.0 && visibility <= 1.0)) {
        throw InvalidParameterError(fmt::format("Werner visibility must lie in [0, 1], got {}", visibility));
    }
}

}  // namespace asbell
