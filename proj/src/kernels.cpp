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

#include "sqw/kernels.hpp"

#include <cmath>
#include <string>

namespace sqw::kernels {

namespace {

void check_shapes(const ProjectorView &p, std::span<const Complex> in, std::span<Complex> out) {
    if (in.size() != p.dimension || out.size() != p.dimension) {
        throw Error(ErrorKind::DimensionMismatch, "operator dimension " + std::to_string(p.dimension) +
                                                      ", input " + std::to_string(in.size()) + ", output " +
                                                      std::to_string(out.size()));
    }
}

inline void polygon_update(const ProjectorView &p, std::size_t k, Complex proj_scale, std::span<const Complex> in,
                           std::span<Complex> out) {
    const std::size_t begin = p.offsets[k];
    const std::size_t end = p.offsets[k + 1];
    Complex overlap = 0.0;
    for (std::size_t i = begin; i < end; ++i) {
        overlap += std::conj(p.amplitudes[i]) * in[p.support[i]];
    }
    const Complex c = proj_scale * overlap;
    for (std::size_t i = begin; i < end; ++i) {
        out[p.support[i]] += c * p.amplitudes[i];
    }
}

inline Complex fourier_term(std::span<const double> nodes, std::span<const Complex> values, double position) {
    Complex acc = 0.0;
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        acc += values[j] * std::polar(1.0, -position * nodes[j]);
    }
    return acc;
}

}  // namespace

namespace serial {

void affine_projector(const ProjectorView &p, Complex scale, Complex proj_scale, std::span<const Complex> in,
                      std::span<Complex> out) {
    check_shapes(p, in, out);
    for (std::size_t i = 0; i < p.dimension; ++i) {
        out[i] = scale * in[i];
    }
    const std::size_t polygons = p.offsets.empty() ? 0 : p.offsets.size() - 1;
    for (std::size_t k = 0; k < polygons; ++k) {
        polygon_update(p, k, proj_scale, in, out);
    }
}

void tabulate(std::span<Complex> out, const std::function<Complex(std::size_t)> &sample) {
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = sample(i);
    }
}

void fourier_sum(std::span<const double> nodes, std::span<const Complex> values, std::span<const double> positions,
                 double weight, std::span<Complex> out) {
    for (std::size_t i = 0; i < positions.size(); ++i) {
        out[i] = weight * fourier_term(nodes, values, positions[i]);
    }
}

}  // namespace serial

namespace omp {

void affine_projector(const ProjectorView &p, Complex scale, Complex proj_scale, std::span<const Complex> in,
                      std::span<Complex> out) {
    check_shapes(p, in, out);
    const auto n = static_cast<std::ptrdiff_t>(p.dimension);
    const auto polygons = static_cast<std::ptrdiff_t>(p.offsets.empty() ? 0 : p.offsets.size() - 1);
#pragma omp parallel if (p.dimension > kParallelThreshold)
    {
#pragma omp for schedule(static)
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            out[static_cast<std::size_t>(i)] = scale * in[static_cast<std::size_t>(i)];
        }
        // supports are disjoint, so polygons write to disjoint entries
#pragma omp for schedule(static)
        for (std::ptrdiff_t k = 0; k < polygons; ++k) {
            polygon_update(p, static_cast<std::size_t>(k), proj_scale, in, out);
        }
    }
}

void tabulate(std::span<Complex> out, const std::function<Complex(std::size_t)> &sample) {
    const auto n = static_cast<std::ptrdiff_t>(out.size());
#pragma omp parallel for schedule(static) if (out.size() > 256)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        out[static_cast<std::size_t>(i)] = sample(static_cast<std::size_t>(i));
    }
}

void fourier_sum(std::span<const double> nodes, std::span<const Complex> values, std::span<const double> positions,
                 double weight, std::span<Complex> out) {
    const auto n = static_cast<std::ptrdiff_t>(positions.size());
#pragma omp parallel for schedule(dynamic, 8) if (positions.size() * nodes.size() > kParallelThreshold)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const auto u = static_cast<std::size_t>(i);
        out[u] = weight * fourier_term(nodes, values, positions[u]);
    }
}

}  // namespace omp

}  // namespace sqw::kernels
