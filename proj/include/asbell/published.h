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

#ifndef ASBELL_PUBLISHED_H
#define ASBELL_PUBLISHED_H

#include <optional>
#include <string>

namespace asbell {

/// Literature values for the AS steering family with the unified Bob
/// directions, kept so that reports can show them next to computed numbers.
/// `*_text` is the closed form as published (or the printed decimal when no
/// closed form exists); the doubles are those expressions evaluated.
struct PublishedSteeringValues {
    int n = 0;
    std::string c_lhs_text;
    double c_lhs = 0;
    std::string v_lhs_text;
    double v_lhs = 0;
    /// Decimal places printed for values that were only published as decimals.
    /// Zero for closed forms.
    int c_lhs_digits = 0;
    int v_lhs_digits = 0;
};

/// Defined for n in {2, 4, 6, 8, 10}.
std::optional<PublishedSteeringValues> published_steering_values(int n);

}  // namespace asbell

#endif
