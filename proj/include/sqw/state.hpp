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

#pragma once

#include <cstddef>
#include <span>

#include "sqw/error.hpp"

namespace sqw {

/// Pure state over the vertex basis; unit l2 norm within kUnitTolerance.
class WalkState {
   public:
    /// Throws NotNormalized when the norm is off by more than kUnitTolerance.
    static WalkState from_amplitudes(Amplitudes amplitudes);
    static WalkState basis(std::size_t dimension, std::size_t index);
    /// Takes the output of a norm-preserving map without rechecking it.
    static WalkState adopt(Amplitudes amplitudes) { return WalkState(std::move(amplitudes)); }

    std::size_t dimension() const noexcept { return amplitudes_.size(); }
    std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
    const Complex &operator[](std::size_t i) const { return amplitudes_[i]; }
    double norm() const;

    Amplitudes release() && { return std::move(amplitudes_); }

   private:
    explicit WalkState(Amplitudes amplitudes) : amplitudes_(std::move(amplitudes)) {}

    Amplitudes amplitudes_;
};

}  // namespace sqw
