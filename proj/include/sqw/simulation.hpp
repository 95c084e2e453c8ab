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
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

#include "sqw/operators.hpp"
#include "sqw/state.hpp"

namespace sqw {

/// Trajectory of length steps + 1 starting with psi0.
std::vector<WalkState> evolve(const EvolutionOperator &u, const WalkState &psi0, int steps,
                              Backend backend = Backend::OpenMP);

/// Streaming variant: keeps only the current state and calls `visit(t, state)`
/// for t = 0..steps.
void evolve_streaming(const EvolutionOperator &u, const WalkState &psi0, int steps,
                      const std::function<void(int, const WalkState &)> &visit, Backend backend = Backend::OpenMP);

/// Ring index i maps to line coordinate i for i < n/2 and i - n otherwise.
std::vector<std::int64_t> ring_positions(std::size_t ring_size);

struct ProbabilityDistribution {
    std::vector<double> probabilities;
    std::vector<std::int64_t> positions;
};

/// p_v = |psi_v|^2. Throws LabelMismatch when the label count differs from
/// the state dimension.
ProbabilityDistribution distribution(const WalkState &psi, std::span<const std::int64_t> positions);

struct MomentSummary {
    std::int64_t step = 0;
    double mean = 0.0;
    double x2 = 0.0;
    double sigma = 0.0;
    /// raw[n] = <x^n> for n = 0..max_order.
    std::vector<double> raw;
};

MomentSummary moments(const ProbabilityDistribution &d, int max_order = 2, std::int64_t step = 0);

/// Probability within `guard_band` sites of the point antipodal to `origin`.
double antipodal_mass(const WalkState &psi, std::size_t guard_band, std::size_t origin = 0);

inline constexpr double kWrapTolerance = 1e-12;

/// Throws WavefrontWrapped(step) at the first state whose antipodal mass
/// reaches kWrapTolerance.
void wrap_check(std::span<const WalkState> trajectory, std::size_t guard_band, std::size_t origin = 0);
void wrap_check(const WalkState &psi, int step, std::size_t guard_band, std::size_t origin = 0);

/// Smallest ring that keeps a t-step line walk from wrapping.
inline std::size_t min_ring_size(int steps) { return 4 * (static_cast<std::size_t>(steps) + 1); }

/// TSV with header `position\tprobability`, sorted by position, equal
/// positions merged, zero rows dropped.
void write_distribution_tsv(std::ostream &os, const ProbabilityDistribution &d);
/// TSV with header `t\tmean\tx2\tsigma`.
void write_moments_tsv(std::ostream &os, std::span<const MomentSummary> rows);

}  // namespace sqw
