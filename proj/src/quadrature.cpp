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

#include "sqw/quadrature.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "sqw/error.hpp"
#include "sqw/io.hpp"

namespace sqw {

QuadratureOptions default_quadrature() {
    QuadratureOptions options;
    if (const char *env = std::getenv("SQW_QUAD_NODES"); env != nullptr && *env != '\0') {
        char *end = nullptr;
        const unsigned long long n = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0' || n < 2) {
            throw Error(ErrorKind::ParseError, std::string("SQW_QUAD_NODES must be an integer >= 2, got '") + env + "'");
        }
        options.start_nodes = static_cast<std::size_t>(n);
    }
    return options;
}

std::vector<double> periodic_nodes(std::size_t count, double offset) {
    std::vector<double> nodes(count);
    const double h = 2.0 * M_PI / static_cast<double>(count);
    for (std::size_t j = 0; j < count; ++j) {
        nodes[j] = -M_PI + (static_cast<double>(j) + offset) * h;
    }
    return nodes;
}

namespace {

double trapezoid(const std::function<double(double)> &f, std::size_t n, const QuadratureOptions &options) {
    const std::vector<double> nodes = periodic_nodes(n, options.offset);
    std::vector<Complex> samples(n);
    kernels::tabulate(options.backend, samples, [&](std::size_t j) { return Complex(f(nodes[j]), 0.0); });
    double sum = 0.0;
    for (const Complex &s : samples) {
        sum += s.real();
    }
    return sum * 2.0 * M_PI / static_cast<double>(n);
}

}  // namespace

QuadratureResult integrate_periodic(const std::function<double(double)> &f, const QuadratureOptions &options) {
    std::size_t n = std::max<std::size_t>(options.start_nodes, 2);
    double previous = trapezoid(f, n, options);
    while (2 * n <= options.max_nodes) {
        n *= 2;
        const double current = trapezoid(f, n, options);
        if (std::abs(current - previous) <= options.tolerance) {
            return {current, n};
        }
        previous = current;
    }
    throw Error(ErrorKind::QuadratureNotConverged,
                "trapezoid estimates still differ beyond " + format_double(options.tolerance) + " at " +
                    std::to_string(n) + " nodes",
                static_cast<std::int64_t>(n));
}

}  // namespace sqw
