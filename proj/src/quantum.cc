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

#include "asbell/quantum.h"

#include <cmath>
#include <string>

#include "asbell/errors.h"
#include "asbell/two_qubit.h"

namespace asbell {

double correlation(const BlochVector &a, const BlochVector &b, const WernerState &state) {
    return -state.visibility() * a.dot(b);
}

double correlation_density_matrix(const BlochVector &a, const BlochVector &b, const WernerState &state) {
    using namespace two_qubit;
    const Mat4 rho = werner_density_matrix(state.visibility());
    const Mat4 observable = kron(spin_observable(a.vec()), spin_observable(b.vec()));
    return trace_product(rho, observable).real();
}

double bell_quantum_value(
    const CoefficientMatrix &m, const MeasurementSet &alice, const MeasurementSet &bob, const WernerState &state) {
    const int n = m.order();
    if (alice.size() != n || bob.size() != n) {
        throw DimensionError(
            "measurement set sizes (" + std::to_string(alice.size()) + ", " + std::to_string(bob.size()) +
            ") do not match matrix order " + std::to_string(n));
    }
    // Summed at V = 1 and scaled once, so value(V) == V * value(1) bit for bit.
    const WernerState singlet = WernerState::singlet();
    double total = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const auto coefficient = m(i, j);
            if (coefficient != 0) {
                total += static_cast<double>(coefficient) * correlation(alice[i], bob[j], singlet);
            }
        }
    }
    return state.visibility() * total;
}

double max_quantum_closed_form(int n) {
    require_as_order(n);
    const double dn = n;
    return (dn + 1) * std::sqrt(dn * (dn + 2)) / 3.0;
}

}  // namespace asbell
