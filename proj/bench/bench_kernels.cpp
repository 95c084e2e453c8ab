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

#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "sqw/graph.hpp"
#include "sqw/kernels.hpp"
#include "sqw/operators.hpp"
#include "sqw/quadrature.hpp"

namespace {

using sqw::Complex;
using sqw::kernels::Backend;

sqw::OrthogonalReflection ring_reflection(std::size_t n) {
    auto [even, odd] = sqw::line_tessellations(n, 1.1, 0.7, 0.3, -0.4);
    (void)odd;
    return sqw::reflection_from_tessellation(even);
}

template <Backend B>
void BM_affine_projector(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto h = ring_reflection(n);
    std::vector<Complex> in(n, Complex(1.0 / std::sqrt(static_cast<double>(n)), 0.0));
    std::vector<Complex> out(n);
    for (auto _ : state) {
        sqw::kernels::affine_projector(B, h.view(), Complex(0.6, -0.8), Complex(0.0, 1.6), in, out);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}

template <Backend B>
void BM_fourier_sum(benchmark::State &state) {
    const auto nodes = sqw::periodic_nodes(static_cast<std::size_t>(state.range(0)), 0.5);
    std::vector<Complex> values(nodes.size());
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        values[j] = std::polar(1.0, 3.0 * nodes[j]);
    }
    std::vector<double> positions;
    for (int x = -130; x <= 130; ++x) {
        positions.push_back(x);
    }
    std::vector<Complex> out(positions.size());
    for (auto _ : state) {
        sqw::kernels::fourier_sum(B, nodes, values, positions, 1.0 / static_cast<double>(nodes.size()), out);
        benchmark::DoNotOptimize(out.data());
    }
}

template <Backend B>
void BM_tabulate(benchmark::State &state) {
    std::vector<Complex> out(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        sqw::kernels::tabulate(B, out, [](std::size_t j) { return std::polar(1.0, 1e-3 * static_cast<double>(j)); });
        benchmark::DoNotOptimize(out.data());
    }
}

}  // namespace

BENCHMARK(BM_affine_projector<Backend::Serial>)->RangeMultiplier(8)->Range(1 << 10, 1 << 22);
BENCHMARK(BM_affine_projector<Backend::OpenMP>)->RangeMultiplier(8)->Range(1 << 10, 1 << 22);
BENCHMARK(BM_fourier_sum<Backend::Serial>)->RangeMultiplier(4)->Range(512, 1 << 14);
BENCHMARK(BM_fourier_sum<Backend::OpenMP>)->RangeMultiplier(4)->Range(512, 1 << 14);
BENCHMARK(BM_tabulate<Backend::Serial>)->RangeMultiplier(8)->Range(1 << 10, 1 << 20);
BENCHMARK(BM_tabulate<Backend::OpenMP>)->RangeMultiplier(8)->Range(1 << 10, 1 << 20);

BENCHMARK_MAIN();
