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

// Data-parallel inner loops. Every kernel has a serial reference in
// `kernels::serial` and an OpenMP version in `kernels::omp` with identical
// floating-point results: parallel loops never reduce across iterations.

#include <cstddef>
#include <functional>
#include <span>

#include "sqw/error.hpp"

namespace sqw::kernels {

/// Flat (CSR-like) layout of a family of disjointly supported unit vectors.
/// Polygon k occupies support[offsets[k] .. offsets[k+1]).
struct ProjectorView {
    std::size_t dimension = 0;
    std::span<const std::size_t> offsets;
    std::span<const std::size_t> support;
    std::span<const Complex> amplitudes;
};

enum class Backend { Serial, OpenMP };

/// Work below this many elements stays on one thread.
inline constexpr std::size_t kParallelThreshold = 1 << 12;

namespace serial {

/// out = scale * in + proj_scale * P in, with P the sum of projectors onto
/// the view's vectors. `in` and `out` must not alias.
void affine_projector(const ProjectorView &p, Complex scale, Complex proj_scale, std::span<const Complex> in,
                      std::span<Complex> out);

/// out[i] = sample(i) for i < out.size().
void tabulate(std::span<Complex> out, const std::function<Complex(std::size_t)> &sample);

/// out[i] = weight * sum_j values[j] * exp(-i * positions[i] * nodes[j]).
void fourier_sum(std::span<const double> nodes, std::span<const Complex> values, std::span<const double> positions,
                 double weight, std::span<Complex> out);

}  // namespace serial

namespace omp {

void affine_projector(const ProjectorView &p, Complex scale, Complex proj_scale, std::span<const Complex> in,
                      std::span<Complex> out);

void tabulate(std::span<Complex> out, const std::function<Complex(std::size_t)> &sample);

void fourier_sum(std::span<const double> nodes, std::span<const Complex> values, std::span<const double> positions,
                 double weight, std::span<Complex> out);

}  // namespace omp

inline void affine_projector(Backend backend, const ProjectorView &p, Complex scale, Complex proj_scale,
                             std::span<const Complex> in, std::span<Complex> out) {
    backend == Backend::Serial ? serial::affine_projector(p, scale, proj_scale, in, out)
                               : omp::affine_projector(p, scale, proj_scale, in, out);
}

inline void tabulate(Backend backend, std::span<Complex> out, const std::function<Complex(std::size_t)> &sample) {
    backend == Backend::Serial ? serial::tabulate(out, sample) : omp::tabulate(out, sample);
}

inline void fourier_sum(Backend backend, std::span<const double> nodes, std::span<const Complex> values,
                        std::span<const double> positions, double weight, std::span<Complex> out) {
    backend == Backend::Serial ? serial::fourier_sum(nodes, values, positions, weight, out)
                               : omp::fourier_sum(nodes, values, positions, weight, out);
}

}  // namespace sqw::kernels
