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
#include <functional>
#include <vector>

#include "sqw/kernels.hpp"

namespace sqw {

/// Uniform trapezoid rule on [-pi, pi) for periodic integrands, refined by
/// doubling the node count until two successive estimates agree.
struct QuadratureOptions {
    std::size_t start_nodes = 512;
    std::size_t max_nodes = std::size_t{1} << 22;
    double tolerance = 1e-10;
    /// Node j sits at -pi + (j + offset) 2 pi / n. The half-step default keeps
    /// nodes off k = 0 and k = +-pi.
    double offset = 0.5;
    kernels::Backend backend = kernels::Backend::OpenMP;
};

/// Defaults, with start_nodes taken from SQW_QUAD_NODES when set.
QuadratureOptions default_quadrature();

std::vector<double> periodic_nodes(std::size_t count, double offset);

struct QuadratureResult {
    double value = 0.0;
    std::size_t nodes = 0;
};

/// Integral of f over [-pi, pi]. Throws QuadratureNotConverged when
/// max_nodes is reached first.
QuadratureResult integrate_periodic(const std::function<double(double)> &f, const QuadratureOptions &options);

}  // namespace sqw
