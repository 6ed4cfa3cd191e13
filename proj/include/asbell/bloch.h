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

#ifndef ASBELL_BLOCH_H
#define ASBELL_BLOCH_H

#include <cmath>
#include <cstddef>
#include <vector>

namespace asbell {

/// Unit-norm tolerance for BlochVector.
inline constexpr double kUnitNormTolerance = 1e-12;
/// Inputs within this distance of unit norm are renormalised; others are rejected.
inline constexpr double kRenormalizeTolerance = 1e-9;

struct Vec3 {
    double x = 0;
    double y = 0;
    double z = 0;

    Vec3 &operator+=(const Vec3 &o) {
        x += o.x;
        y += o.y;
        z += o.z;
        return *this;
    }
    Vec3 &operator-=(const Vec3 &o) {
        x -= o.x;
        y -= o.y;
        z -= o.z;
        return *this;
    }
    Vec3 &operator*=(double s) {
        x *= s;
        y *= s;
        z *= s;
        return *this;
    }
    friend Vec3 operator+(Vec3 a, const Vec3 &b) {
        return a += b;
    }
    friend Vec3 operator-(Vec3 a, const Vec3 &b) {
        return a -= b;
    }
    friend Vec3 operator*(double s, Vec3 a) {
        return a *= s;
    }
    friend Vec3 operator-(const Vec3 &a) {
        return {-a.x, -a.y, -a.z};
    }
    bool operator==(const Vec3 &) const = default;

    double dot(const Vec3 &o) const {
        return x * o.x + y * o.y + z * o.z;
    }
    Vec3 cross(const Vec3 &o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    double norm() const {
        return std::sqrt(dot(*this));
    }
};

/// Unit vector on the Bloch sphere. Used both as the axis of a dichotomic
/// observable sigma.n and as the Bloch vector of a pure qubit state.
class BlochVector {
   public:
    /// +z, the canonical direction for degenerate (zero resultant) cases.
    BlochVector() = default;

    /// Renormalises when |norm - 1| <= kRenormalizeTolerance, otherwise throws
    /// InvalidDirectionError.
    static BlochVector from_components(double x, double y, double z);
    static BlochVector from_vec(const Vec3 &v) {
        return from_components(v.x, v.y, v.z);
    }

    /// (sin(theta) cos(phi), sin(theta) sin(phi), cos(theta)).
    static BlochVector from_spherical(double theta, double phi);

    /// v / |v|, or +z when |v| < `zero_threshold`.
    static BlochVector normalized_or_z(const Vec3 &v, double zero_threshold = 1e-12);

    double x() const {
        return v_.x;
    }
    double y() const {
        return v_.y;
    }
    double z() const {
        return v_.z;
    }
    const Vec3 &vec() const {
        return v_;
    }
    double dot(const BlochVector &o) const {
        return v_.dot(o.v_);
    }

    BlochVector operator-() const {
        BlochVector r;
        r.v_ = -v_;
        return r;
    }
    bool operator==(const BlochVector &) const = default;

   private:
    Vec3 v_{0, 0, 1};
};

/// Ordered directions, one per measurement setting of a single party.
class MeasurementSet {
   public:
    MeasurementSet() = default;
    explicit MeasurementSet(std::vector<BlochVector> directions) : directions_(std::move(directions)) {
    }

    int size() const {
        return static_cast<int>(directions_.size());
    }
    const BlochVector &operator[](int i) const {
        return directions_[static_cast<std::size_t>(i)];
    }
    auto begin() const {
        return directions_.begin();
    }
    auto end() const {
        return directions_.end();
    }
    const std::vector<BlochVector> &directions() const {
        return directions_;
    }

    bool operator==(const MeasurementSet &) const = default;

   private:
    std::vector<BlochVector> directions_;
};

/// V |psi-><psi-| + (1 - V) I/4 with |psi-> the two-qubit singlet.
class WernerState {
   public:
    /// Throws InvalidParameterError unless 0 <= visibility <= 1.
    explicit WernerState(double visibility);

    static WernerState singlet() {
        return WernerState(1.0);
    }

    double visibility() const {
        return visibility_;
    }

   private:
    double visibility_;
};

}  // namespace asbell

#endif
