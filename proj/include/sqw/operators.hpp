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
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "sqw/graph.hpp"
#include "sqw/kernels.hpp"
#include "sqw/state.hpp"

namespace sqw {

using kernels::Backend;

/// H = 2 sum_k |a_k><a_k| - I for unit vectors a_k with pairwise disjoint
/// supports. Stored as the vectors only; H is never materialized.
class OrthogonalReflection {
   public:
    /// Throws OutOfRangeVertex or OverlappingPolygons. Vertices outside every
    /// polygon are allowed and pick up the eigenvalue -1.
    OrthogonalReflection(std::size_t dimension, std::span<const Polygon> polygons);

    std::size_t dimension() const noexcept { return dimension_; }
    std::size_t polygon_count() const noexcept { return offsets_.size() - 1; }
    const std::vector<Polygon> &polygons() const noexcept { return polygons_; }

    kernels::ProjectorView view() const noexcept { return {dimension_, offsets_, support_, amplitudes_}; }

   private:
    std::size_t dimension_ = 0;
    std::vector<Polygon> polygons_;
    std::vector<std::size_t> offsets_;
    std::vector<std::size_t> support_;
    std::vector<Complex> amplitudes_;
};

/// The tessellation must partition its vertex set (validate_partition).
OrthogonalReflection reflection_from_tessellation(const Tessellation &t);
/// Full validation against `g`, including the clique condition.
OrthogonalReflection reflection_from_tessellation(const Graph &g, const Tessellation &t);

/// e^{i angle H} = cos(angle) I + i sin(angle) H, exact since H^2 = I.
struct LocalUnitary {
    double angle = 0.0;
    OrthogonalReflection reflection;
};

WalkState apply_reflection(const OrthogonalReflection &h, const WalkState &psi, Backend backend = Backend::OpenMP);
WalkState apply_exp(const LocalUnitary &u, const WalkState &psi, Backend backend = Backend::OpenMP);

/// psi - (1 - e^{2i theta}) sum_k <a_k|psi> |a_k>, which is
/// e^{i theta} e^{i theta H} psi.
WalkState grover_phase_apply(double theta, const OrthogonalReflection &h, const WalkState &psi,
                             Backend backend = Backend::OpenMP);

/// Product of local unitaries; factors()[0] acts first.
class EvolutionOperator {
   public:
    explicit EvolutionOperator(std::vector<LocalUnitary> factors);

    std::size_t dimension() const noexcept { return dimension_; }
    std::span<const LocalUnitary> factors() const noexcept { return factors_; }

    WalkState step(const WalkState &psi, Backend backend = Backend::OpenMP) const;

    /// One step from `in` into `out` using `scratch`; all three sized
    /// dimension() and distinct.
    void step_into(std::span<const Complex> in, std::span<Complex> out, std::span<Complex> scratch,
                   Backend backend = Backend::OpenMP) const;

   private:
    std::size_t dimension_ = 0;
    std::vector<LocalUnitary> factors_;
};

/// Throws EmptyFactorList or DimensionMismatch. The first pair acts first.
EvolutionOperator compose(std::vector<std::pair<double, OrthogonalReflection>> factors);

inline constexpr std::size_t kDefaultDenseCap = 4096;

/// Column j is step(e_j). Throws DimensionCapExceeded above `cap`.
Eigen::MatrixXcd dense_matrix(const EvolutionOperator &u, std::size_t cap = kDefaultDenseCap);

/// Dense 2 sum_k |a_k><a_k| - I, for checks.
Eigen::MatrixXcd dense_matrix(const OrthogonalReflection &h, std::size_t cap = kDefaultDenseCap);

}  // namespace sqw
