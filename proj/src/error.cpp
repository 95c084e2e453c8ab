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

#include "sqw/error.hpp"

namespace sqw {

std::string_view error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::OutOfRangeVertex: return "OutOfRangeVertex";
        case ErrorKind::SelfLoop: return "SelfLoop";
        case ErrorKind::EmptyPolygon: return "EmptyPolygon";
        case ErrorKind::InvalidPolygon: return "InvalidPolygon";
        case ErrorKind::NotAClique: return "NotAClique";
        case ErrorKind::OverlappingPolygons: return "OverlappingPolygons";
        case ErrorKind::UncoveredVertex: return "UncoveredVertex";
        case ErrorKind::OddRingSize: return "OddRingSize";
        case ErrorKind::DegenerateAngle: return "DegenerateAngle";
        case ErrorKind::IsolatedVertex: return "IsolatedVertex";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::EmptyFactorList: return "EmptyFactorList";
        case ErrorKind::DimensionCapExceeded: return "DimensionCapExceeded";
        case ErrorKind::NotNormalized: return "NotNormalized";
        case ErrorKind::LabelMismatch: return "LabelMismatch";
        case ErrorKind::WavefrontWrapped: return "WavefrontWrapped";
        case ErrorKind::DegenerateBlock: return "DegenerateBlock";
        case ErrorKind::QuadratureNotConverged: return "QuadratureNotConverged";
        case ErrorKind::SingularIntegrand: return "SingularIntegrand";
        case ErrorKind::DomainError: return "DomainError";
        case ErrorKind::UnsupportedCoin: return "UnsupportedCoin";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string &message, std::optional<std::int64_t> detail)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind), detail_(detail) {}

}  // namespace sqw
