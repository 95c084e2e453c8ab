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

#include "sqw/operators.hpp"

#include <cmath>
#include <string>

namespace sqw {

OrthogonalReflection::OrthogonalReflection(std::size_t dimension, std::span<const Polygon> polygons)
    : dimension_(dimension), polygons_(polygons.begin(), polygons.end()) {
    std::vector<bool> used(dimension, false);
    offsets_.reserve(polygons.size() + 1);
    offsets_.push_back(0);
    for (std::size_t k = 0; k < polygons_.size(); ++k) {
        const Polygon &p = polygons_[k];
        for (std::size_t i = 0; i < p.size(); ++i) {
            Vertex v = p.vertices()[i];
            if (v >= dimension) {
                throw Error(ErrorKind::OutOfRangeVertex,
                            "polygon " + std::to_string(k) + " references vertex " + std::to_string(v) +
                                " in a space of dimension " + std::to_string(dimension),
                            static_cast<std::int64_t>(v));
            }
            if (used[v]) {
                throw Error(ErrorKind::OverlappingPolygons,
                            "vertex " + std::to_string(v) + " lies in more than one polygon",
                            static_cast<std::int64_t>(v));
            }
            used[v] = true;
            support_.push_back(v);
            amplitudes_.push_back(p.amplitudes()[i]);
        }
        offsets_.push_back(support_.size());
    }
}

OrthogonalReflection reflection_from_tessellation(const Tessellation &t) {
    validate_partition(t);
    return OrthogonalReflection(t.vertex_count, t.polygons);
}

OrthogonalReflection reflection_from_tessellation(const Graph &g, const Tessellation &t) {
    validate_tessellation(g, t);
    return OrthogonalReflection(t.vertex_count, t.polygons);
}

namespace {

// e^{i theta H} = (cos - i sin) I + 2 i sin P
std::pair<Complex, Complex> exp_coefficients(double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    return {Complex(c, -s), Complex(0.0, 2.0 * s)};
}

void check_dimension(std::size_t expected, std::size_t actual) {
    if (expected != actual) {
        throw Error(ErrorKind::DimensionMismatch,
                    "expected dimension " + std::to_string(expected) + ", got " + std::to_string(actual));
    }
}

}  // namespace

WalkState apply_reflection(const OrthogonalReflection &h, const WalkState &psi, Backend backend) {
    check_dimension(h.dimension(), psi.dimension());
    Amplitudes out(psi.dimension());
    kernels::affine_projector(backend, h.view(), -1.0, 2.0, psi.amplitudes(), out);
    return WalkState::adopt(std::move(out));
}

WalkState apply_exp(const LocalUnitary &u, const WalkState &psi, Backend backend) {
    check_dimension(u.reflection.dimension(), psi.dimension());
    auto [scale, proj_scale] = exp_coefficients(u.angle);
    Amplitudes out(psi.dimension());
    kernels::affine_projector(backend, u.reflection.view(), scale, proj_scale, psi.amplitudes(), out);
    return WalkState::adopt(std::move(out));
}

WalkState grover_phase_apply(double theta, const OrthogonalReflection &h, const WalkState &psi, Backend backend) {
    check_dimension(h.dimension(), psi.dimension());
    const Complex proj_scale = std::polar(1.0, 2.0 * theta) - 1.0;
    Amplitudes out(psi.dimension());
    kernels::affine_projector(backend, h.view(), 1.0, proj_scale, psi.amplitudes(), out);
    return WalkState::adopt(std::move(out));
}

EvolutionOperator::EvolutionOperator(std::vector<LocalUnitary> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) {
        throw Error(ErrorKind::EmptyFactorList, "evolution operator needs at least one factor");
    }
    dimension_ = factors_.front().reflection.dimension();
    for (const auto &f : factors_) {
        check_dimension(dimension_, f.reflection.dimension());
    }
}

void EvolutionOperator::step_into(std::span<const Complex> in, std::span<Complex> out, std::span<Complex> scratch,
                                  Backend backend) const {
    check_dimension(dimension_, in.size());
    check_dimension(dimension_, out.size());
    check_dimension(dimension_, scratch.size());
    // Ping-pong so the last factor lands in `out`.
    std::span<const Complex> src = in;
    for (std::size_t f = 0; f < factors_.size(); ++f) {
        const bool to_out = (factors_.size() - 1 - f) % 2 == 0;
        std::span<Complex> dst = to_out ? out : scratch;
        auto [scale, proj_scale] = exp_coefficients(factors_[f].angle);
        kernels::affine_projector(backend, factors_[f].reflection.view(), scale, proj_scale, src, dst);
        src = dst;
    }
}

WalkState EvolutionOperator::step(const WalkState &psi, Backend backend) const {
    check_dimension(dimension_, psi.dimension());
    Amplitudes out(dimension_);
    Amplitudes scratch(dimension_);
    step_into(psi.amplitudes(), out, scratch, backend);
    return WalkState::adopt(std::move(out));
}

EvolutionOperator compose(std::vector<std::pair<double, OrthogonalReflection>> factors) {
    std::vector<LocalUnitary> unitaries;
    unitaries.reserve(factors.size());
    for (auto &[angle, h] : factors) {
        unitaries.push_back(LocalUnitary{angle, std::move(h)});
    }
    return EvolutionOperator(std::move(unitaries));
}

Eigen::MatrixXcd dense_matrix(const EvolutionOperator &u, std::size_t cap) {
    const std::size_t n = u.dimension();
    if (n > cap) {
        throw Error(ErrorKind::DimensionCapExceeded,
                    "dimension " + std::to_string(n) + " exceeds dense cap " + std::to_string(cap),
                    static_cast<std::int64_t>(n));
    }
    Eigen::MatrixXcd m(n, n);
    Amplitudes in(n, 0.0), out(n), scratch(n);
    for (std::size_t j = 0; j < n; ++j) {
        in[j] = 1.0;
        u.step_into(in, out, scratch);
        in[j] = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = out[i];
        }
    }
    return m;
}

Eigen::MatrixXcd dense_matrix(const OrthogonalReflection &h, std::size_t cap) {
    const std::size_t n = h.dimension();
    if (n > cap) {
        throw Error(ErrorKind::DimensionCapExceeded,
                    "dimension " + std::to_string(n) + " exceeds dense cap " + std::to_string(cap),
                    static_cast<std::int64_t>(n));
    }
    const auto dim = static_cast<Eigen::Index>(n);
    Eigen::MatrixXcd m = -Eigen::MatrixXcd::Identity(dim, dim);
    for (const Polygon &p : h.polygons()) {
        Eigen::VectorXcd a = Eigen::VectorXcd::Zero(dim);
        for (std::size_t i = 0; i < p.size(); ++i) {
            a(static_cast<Eigen::Index>(p.vertices()[i])) = p.amplitudes()[i];
        }
        m += 2.0 * a * a.adjoint();
    }
    return m;
}

}  // namespace sqw
