// Copyright 2026 The vqlslab Authors
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

#include "vqls/common.hpp"

#include <algorithm>
#include <cmath>

namespace vqls {

double wrap_angle(double theta) noexcept {
    double r = std::fmod(theta, kTwoPi);
    if (r < 0.0) {
        r += kTwoPi;
    }
    if (r >= kTwoPi) {
        r = 0.0;
    }
    return r;
}

double unit_to_angle(double t) noexcept {
    const double a = t * kTwoPi;
    const double below = std::nextafter(kTwoPi, 0.0);
    return std::clamp(a, 0.0, below);
}

} // namespace vqls
