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

#ifndef ASBELL_QUANTUM_H
#define ASBELL_QUANTUM_H

#include "asbell/bloch.h"
#include "asbell/inequality.h"

namespace asbell {

/// <(sigma.a) (x) (sigma.b)> in a Werner state: -V (a.b).
double correlation(const BlochVector &a, const BlochVector &b, const WernerState &state);

/// Same quantity evaluated as tr(rho O) with explicit 4x4 complex matrices.
/// Independent of correlation(); the two agree to ~1e-15.
double correlation_density_matrix(const BlochVector &a, const BlochVector &b, const WernerState &state);

/// Sum over i, j of m[i][j] <A_i B_j> with A_i = sigma.alice[i], B_j = sigma.bob[j].
double bell_quantum_value(
    const CoefficientMatrix &m, const MeasurementSet &alice, const MeasurementSet &bob, const WernerState &state);

/// (n + 1) sqrt(n (n + 2)) / 3, the maximal singlet value of the AS_n expression.
double max_quantum_closed_form(int n);

}  // namespace asbell

#endif
