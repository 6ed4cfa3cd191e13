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

#include "asbell/catalog.h"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include <fmt/core.h>

#include "asbell/errors.h"
#include "asbell/inequality.h"

namespace asbell {

namespace {

using std::acos;
using std::asin;
using std::sqrt;

MeasurementSet in_plane(std::span<const double> angles) {
    std::vector<BlochVector> dirs;
    for (double t : angles) {
        dirs.push_back(BlochVector::from_components(0.0, std::sin(t), std::cos(t)));
    }
    return MeasurementSet(std::move(dirs));
}

std::string list_angles(const char *symbol, std::span<const double> angles, int first_index) {
    std::string out;
    for (std::size_t k = 0; k < angles.size(); ++k) {
        out += fmt::format("{}{}_{} = {:.12g}", k == 0 ? "" : ", ", symbol, first_index + static_cast<int>(k), angles[k]);
    }
    return out;
}

DirectionCatalogEntry two_settings() {
    const double phi0 = -std::numbers::pi / 2 - acos(1.0 / sqrt(2.0));
    const std::array<double, 2> theta{0.0, std::numbers::pi};
    const std::array<double, 2> phi{phi0, -phi0};
    DirectionCatalogEntry e;
    e.n = 2;
    e.bob = in_plane(theta);
    e.alice = in_plane(phi);
    e.canonical_bob = MeasurementSet({BlochVector::from_components(0, 0, 1), BlochVector::from_components(1, 0, 0)});
    e.provenance_notes =
        "N=2 published in-plane form d_i = (0, sin t_i, cos t_i) with " + list_angles("theta", theta, 0) + " and " +
        list_angles("phi", phi, 0) +
        ". The published Bob pair is antiparallel, which caps the quantum value at 2, so the orthogonal pair "
        "b_1 = +z, b_2 = +x is stored as canonical_bob and used by default.";
    return e;
}

DirectionCatalogEntry four_settings() {
    const double theta1 = 0.5 * acos(-5.0 / (3.0 * sqrt(6.0)));
    const double theta0 = acos(4.0 / (3.0 * sqrt(5.0))) - theta1;
    const double phi0 = acos(-4.0 / (3.0 * sqrt(5.0))) + theta1;
    const double phi1 = acos(5.0 / (3.0 * sqrt(6.0))) + theta1;
    const std::array<double, 2> theta{theta0, theta1};
    const std::array<double, 2> phi{phi0, phi1};
    DirectionCatalogEntry e;
    e.n = 4;
    e.bob = unified_directions(4, theta);
    e.alice = unified_directions(4, phi);
    e.provenance_notes =
        "N=4 unified form, Y = 1/sqrt(6), closed-form angles " + list_angles("theta", theta, 0) + "; " +
        list_angles("phi", phi, 0) +
        ". Alice's middle directions use (0, sin phi, cos phi); the middle-index range is read as 3 <= i <= N-1.";
    return e;
}

DirectionCatalogEntry six_settings() {
    const double theta3 = -asin(4.0 / (3.0 * sqrt(11.0)));
    const double phi1 = theta3 + acos(5.0 / (6.0 * sqrt(3.0)));
    const double theta2 = -acos(-5.0 / (2.0 * sqrt(21.0))) + acos(sqrt(83.0) / (2.0 * sqrt(231.0)));
    const double phi2 = theta2 + acos(7.0 / (6.0 * sqrt(3.0)));
    const double theta1 = theta2 - phi1 + phi2;
    const double phi3 = theta1 + acos(5.0 / (6.0 * sqrt(3.0)));
    const double theta0 = phi3 - acos(-4.0 / (3.0 * sqrt(11.0)));
    const std::array<double, 4> theta{theta0, theta1, theta2, theta3};
    const std::array<double, 3> phi{phi1, phi2, phi3};
    DirectionCatalogEntry e;
    e.n = 6;
    e.bob = unified_directions(6, theta);
    e.provenance_notes = "N=6 unified form, Y = 1/(2 sqrt(3)), closed-form angles " + list_angles("theta", theta, 0) +
                         ". Published Alice angles " + list_angles("phi", phi, 1) +
                         " omit phi_0, so Alice is left absent and completed by best response when verifying.";
    return e;
}

DirectionCatalogEntry eight_settings() {
    const double theta5 = -asin(4.0 / (3.0 * sqrt(19.0)));
    const double phi1 = theta5 + acos(5.0 / (6.0 * sqrt(5.0)));
    const double theta4 = -acos(-5.0 / (2.0 * sqrt(39.0))) + acos(sqrt(155.0) / (2.0 * sqrt(741.0)));
    const double theta3 = -acos(-sqrt(4.0 / 15.0)) +
                          acos((235.0 * sqrt(589.0) + 53.0 * sqrt(12445.0)) / (7410.0 * sqrt(12.0)));
    const double phi2 = theta4 + acos(7.0 / (6.0 * sqrt(5.0)));
    const double phi3 = theta3 + acos(3.0 / (2.0 * sqrt(5.0)));
    const double theta2 = theta3 - phi2 + phi3;
    const double phi5 = theta2 - theta5 + phi2;
    const double theta1 = theta2 - phi1 + phi2;
    const double phi4 = theta1 - theta4 + phi1;
    const double theta0 = phi5 - acos(-4.0 / (3.0 * sqrt(19.0)));
    const std::array<double, 6> theta{theta0, theta1, theta2, theta3, theta4, theta5};
    const std::array<double, 5> phi{phi1, phi2, phi3, phi4, phi5};
    DirectionCatalogEntry e;
    e.n = 8;
    e.bob = unified_directions(8, theta);
    e.provenance_notes = "N=8 unified form, Y = 1/(2 sqrt(5)), closed-form angles " + list_angles("theta", theta, 0) +
                         ". Published Alice angles " + list_angles("phi", phi, 1) +
                         " omit phi_0, so Alice is left absent and completed by best response when verifying.";
    return e;
}

DirectionCatalogEntry ten_settings() {
    const std::array<double, 8> theta{-2.5496, 3.1742, -1.9715, -1.5541, -1.0945, -0.7886, -0.5108, -0.2502};
    DirectionCatalogEntry e;
    e.n = 10;
    e.bob = unified_directions(10, theta);
    e.provenance_notes = "N=10 unified form, Y = 1/sqrt(30), Bob angles published to four decimals: " +
                         list_angles("theta", theta, 0) + ". No Alice angles were published; Alice is completed by best response.";
    return e;
}

}  // namespace

double unified_offset(int n) {
    require_as_order(n);
    const double half = n / 2;
    return 1.0 / sqrt(half * (half + 1.0));
}

MeasurementSet unified_directions(int n, std::span<const double> angles) {
    require_as_order(n);
    if (n < 4) {
        throw InvalidParameterError("the unified direction family needs N >= 4, got " + std::to_string(n));
    }
    if (static_cast<int>(angles.size()) != n - 2) {
        throw InvalidParameterError(
            fmt::format("unified directions for N = {} need {} angles, got {}", n, n - 2, angles.size()));
    }
    const double y = unified_offset(n);
    const double rest = sqrt(1.0 - y * y);
    std::vector<BlochVector> dirs;
    dirs.reserve(static_cast<std::size_t>(n));
    dirs.push_back(BlochVector::from_components(y, rest * std::sin(angles[0]), rest * std::cos(angles[0])));
    dirs.push_back(BlochVector::from_components(-y, rest * std::sin(angles[0]), rest * std::cos(angles[0])));
    for (int i = 3; i <= n - 1; ++i) {
        const double t = angles[static_cast<std::size_t>(i - 2)];
        dirs.push_back(BlochVector::from_components(0.0, std::sin(t), std::cos(t)));
    }
    dirs.push_back(BlochVector::from_components(1.0, 0.0, 0.0));
    return MeasurementSet(std::move(dirs));
}

DirectionCatalogEntry published_directions(int n) {
    switch (n) {
        case 2:
            return two_settings();
        case 4:
            return four_settings();
        case 6:
            return six_settings();
        case 8:
            return eight_settings();
        case 10:
            return ten_settings();
        default:
            throw InvalidParameterError(
                "published directions exist only for N in {2, 4, 6, 8, 10}, got " + std::to_string(n));
    }
}

std::vector<int> catalog_orders() {
    return {2, 4, 6, 8, 10};
}

}  // namespace asbell
