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

#include "asbell/two_qubit.h"

#include <cmath>

namespace asbell::two_qubit {

Mat2 identity2() {
    return {{{1.0, 0.0}, {0.0, 1.0}}};
}

Mat2 pauli_x() {
    return {{{0.0, 1.0}, {1.0, 0.0}}};
}

Mat2 pauli_y() {
    return {{{Complex(0, 0), Complex(0, -1)}, {Complex(0, 1), Complex(0, 0)}}};
}

Mat2 pauli_z() {
    return {{{1.0, 0.0}, {0.0, -1.0}}};
}

Mat2 spin_observable(const Vec3 &n) {
    const Mat2 sx = pauli_x();
    const Mat2 sy = pauli_y();
    const Mat2 sz = pauli_z();
    Mat2 out{};
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            out[r][c] = n.x * sx[r][c] + n.y * sy[r][c] + n.z * sz[r][c];
        }
    }
    return out;
}

Mat2 qubit_state(const Vec3 &bloch) {
    const Mat2 id = identity2();
    const Mat2 obs = spin_observable(bloch);
    Mat2 out{};
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            out[r][c] = 0.5 * (id[r][c] + obs[r][c]);
        }
    }
    return out;
}

Mat4 kron(const Mat2 &a, const Mat2 &b) {
    Mat4 out{};
    for (int ar = 0; ar < 2; ++ar) {
        for (int ac = 0; ac < 2; ++ac) {
            for (int br = 0; br < 2; ++br) {
                for (int bc = 0; bc < 2; ++bc) {
                    out[2 * ar + br][2 * ac + bc] = a[ar][ac] * b[br][bc];
                }
            }
        }
    }
    return out;
}

Mat4 werner_density_matrix(double visibility) {
    // |psi-> = (|01> - |10>) / sqrt(2)
    std::array<Complex, 4> psi{0.0, 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0), 0.0};
    Mat4 rho{};
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            rho[r][c] = visibility * psi[r] * std::conj(psi[c]);
            if (r == c) {
                rho[r][c] += (1.0 - visibility) / 4.0;
            }
        }
    }
    return rho;
}

Complex trace_product(const Mat2 &a, const Mat2 &b) {
    Complex t = 0;
    for (int r = 0; r < 2; ++r) {
        for (int k = 0; k < 2; ++k) {
            t += a[r][k] * b[k][r];
        }
    }
    return t;
}

Complex trace_product(const Mat4 &a, const Mat4 &b) {
    Complex t = 0;
    for (int r = 0; r < 4; ++r) {
        for (int k = 0; k < 4; ++k) {
            t += a[r][k] * b[k][r];
        }
    }
    return t;
}

}  // namespace asbell::two_qubit
