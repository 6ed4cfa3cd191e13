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

#ifndef ASBELL_TWO_QUBIT_H
#define ASBELL_TWO_QUBIT_H

#include <array>
#include <complex>

#include "asbell/bloch.h"

namespace asbell::two_qubit {

using Complex = std::complex<double>;
using Mat2 = std::array<std::array<Complex, 2>, 2>;
/// Row/column index 2*a + b for computational basis state |a b>.
using Mat4 = std::array<std::array<Complex, 4>, 4>;

Mat2 identity2();
Mat2 pauli_x();
Mat2 pauli_y();
Mat2 pauli_z();

/// n_x sigma_x + n_y sigma_y + n_z sigma_z.
Mat2 spin_observable(const Vec3 &n);

/// (I + s.sigma) / 2.
Mat2 qubit_state(const Vec3 &bloch);

Mat4 kron(const Mat2 &a, const Mat2 &b);
Mat4 werner_density_matrix(double visibility);

Complex trace_product(const Mat2 &a, const Mat2 &b);
Complex trace_product(const Mat4 &a, const Mat4 &b);

}  // namespace asbell::two_qubit

#endif
