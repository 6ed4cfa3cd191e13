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

#include "asbell/published.h"

#include <cmath>

namespace asbell {

std::optional<PublishedSteeringValues> published_steering_values(int n) {
    using std::sqrt;
    switch (n) {
        case 2:
            return PublishedSteeringValues{2, "2", 2.0, "1/sqrt(2)", 1.0 / sqrt(2.0), 0, 0};
        case 4:
            return PublishedSteeringValues{
                4, "2*sqrt(23/3)", 2.0 * sqrt(23.0 / 3.0), "sqrt(23)/(5*sqrt(2))", sqrt(23.0) / (5.0 * sqrt(2.0)), 0, 0};
        case 6:
            return PublishedSteeringValues{
                6, "sqrt(358/3)", sqrt(358.0 / 3.0), "sqrt(179)/(14*sqrt(2))", sqrt(179.0) / (14.0 * sqrt(2.0)), 0, 0};
        case 8:
            return PublishedSteeringValues{
                8, "sqrt(2*(10444+sqrt(20305))/65)", sqrt(2.0 * (10444.0 + sqrt(20305.0)) / 65.0), "0.6726", 0.6726, 0, 4};
        case 10:
            return PublishedSteeringValues{10, "27.0955", 27.0955, "0.6779", 0.6779, 4, 4};
        default:
            return std::nullopt;
    }
}

}  // namespace asbell
