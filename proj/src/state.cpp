// Copyright 2026 The sqw Authors
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

#include "sqw/state.hpp"

#include <cmath>
#include <string>

namespace sqw {

WalkState WalkState::from_amplitudes(Amplitudes amplitudes) {
    double norm2 = 0.0;
    for (const Complex &a : amplitudes) {
        norm2 += std::norm(a);
    }
    if (std::abs(norm2 - 1.0) > kUnitTolerance) {
        throw Error(ErrorKind::NotNormalized, "state has squared norm " + std::to_string(norm2));
    }
    return WalkState(std::move(amplitudes));
}

WalkState WalkState::basis(std::size_t dimension, std::size_t index) {
    if (index >= dimension) {
        throw Error(ErrorKind::OutOfRangeVertex,
                    "basis index " + std::to_string(index) + " >= dimension " + std::to_string(dimension),
                    static_cast<std::int64_t>(index));
    }
    Amplitudes amplitudes(dimension, Complex(0.0, 0.0));
    amplitudes[index] = 1.0;
    return WalkState(std::move(amplitudes));
}

double WalkState::norm() const {
    double norm2 = 0.0;
    for (const Complex &a : amplitudes_) {
        norm2 += std::norm(a);
    }
    return std::sqrt(norm2);
}

}  // namespace sqw
