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

#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sqw {

using Complex = std::complex<double>;
using Amplitudes = std::vector<Complex>;

enum class ErrorKind {
    OutOfRangeVertex,
    SelfLoop,
    EmptyPolygon,
    InvalidPolygon,
    NotAClique,
    OverlappingPolygons,
    UncoveredVertex,
    OddRingSize,
    DegenerateAngle,
    IsolatedVertex,
    DimensionMismatch,
    EmptyFactorList,
    DimensionCapExceeded,
    NotNormalized,
    LabelMismatch,
    WavefrontWrapped,
    DegenerateBlock,
    QuadratureNotConverged,
    SingularIntegrand,
    DomainError,
    UnsupportedCoin,
    ParseError,
};

std::string_view error_kind_name(ErrorKind kind);

/// Every failure raised by the library. `detail()` carries the offending
/// polygon index, vertex, or step when the kind has one.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string &message, std::optional<std::int64_t> detail = std::nullopt);

    ErrorKind kind() const noexcept { return kind_; }
    std::optional<std::int64_t> detail() const noexcept { return detail_; }

   private:
    ErrorKind kind_;
    std::optional<std::int64_t> detail_;
};

/// Tolerance on every unit vector the library accepts.
inline constexpr double kUnitTolerance = 1e-12;

}  // namespace sqw
