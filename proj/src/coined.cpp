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

#include "sqw/coined.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "sqw/io.hpp"
#include "sqw/simulation.hpp"

namespace sqw {

using nlohmann::json;

CoinSpec coin_from_json(const json &descriptor, std::size_t arc_count) {
    if (!descriptor.is_object() || !descriptor.contains("type") || !descriptor.at("type").is_string()) {
        throw Error(ErrorKind::ParseError, "coin descriptor needs a string 'type'");
    }
    const auto type = descriptor.at("type").get<std::string>();
    CoinSpec spec;
    if (descriptor.contains("theta")) {
        spec.theta = angle_from_json(descriptor.at("theta"));
    }
    if (type == "grover") {
        spec.kind = CoinSpec::Kind::Grover;
    } else if (type == "pauli-x") {
        spec.kind = CoinSpec::Kind::PauliX;
    } else if (type == "reflection") {
        spec.kind = CoinSpec::Kind::Reflection;
        if (!descriptor.contains("polygons")) {
            throw Error(ErrorKind::ParseError, "reflection coin needs 'polygons'");
        }
        spec.polygons = tessellation_from_json(descriptor.at("polygons"), arc_count).polygons;
    } else {
        throw Error(ErrorKind::UnsupportedCoin,
                    "coin type '" + type + "' is not of the form e^{i theta H} with H an orthogonal reflection");
    }
    return spec;
}

OrthogonalReflection flipflop_shift(const ExpansionMap &expansion) {
    const Graph &g = expansion.original;
    std::vector<Polygon> polygons;
    polygons.reserve(g.edge_count());
    for (std::size_t label = 0; label < g.edge_count(); ++label) {
        const Edge &e = g.edge(label);
        polygons.push_back(
            uniform_polygon({expansion.expanded_vertex({e.u, label}), expansion.expanded_vertex({e.v, label})}));
    }
    return OrthogonalReflection(expansion.arcs.size(), polygons);
}

OrthogonalReflection flipflop_shift(const Graph &g) { return flipflop_shift(clique_expansion(g)); }

OrthogonalReflection grover_coin_reflection(const ExpansionMap &expansion) {
    const std::size_t n = expansion.original.vertex_count();
    std::vector<Polygon> polygons;
    polygons.reserve(n);
    for (Vertex v = 0; v < n; ++v) {
        std::vector<Vertex> arcs;
        for (std::size_t i = expansion.vertex_offsets[v]; i < expansion.vertex_offsets[v + 1]; ++i) {
            arcs.push_back(i);
        }
        polygons.push_back(uniform_polygon(std::move(arcs)));
    }
    return OrthogonalReflection(expansion.arcs.size(), polygons);
}

OrthogonalReflection grover_coin_reflection(const Graph &g) { return grover_coin_reflection(clique_expansion(g)); }

OrthogonalReflection pauli_x_coin_reflection(const ExpansionMap &expansion) {
    std::vector<Polygon> polygons;
    for (Vertex v = 0; v < expansion.original.vertex_count(); ++v) {
        const std::size_t begin = expansion.vertex_offsets[v];
        const std::size_t end = expansion.vertex_offsets[v + 1];
        std::size_t i = begin;
        for (; i + 1 < end; i += 2) {
            polygons.push_back(uniform_polygon({i, i + 1}));
        }
        if (i < end) {
            polygons.push_back(uniform_polygon({i}));
        }
    }
    return OrthogonalReflection(expansion.arcs.size(), polygons);
}

namespace {

Tessellation as_tessellation(const OrthogonalReflection &h) { return Tessellation{h.dimension(), h.polygons()}; }

void require_vertex_local(const ExpansionMap &expansion, std::span<const Polygon> polygons) {
    for (std::size_t k = 0; k < polygons.size(); ++k) {
        const auto arcs = polygons[k].vertices();
        for (Vertex a : arcs) {
            if (a >= expansion.arcs.size()) {
                throw Error(ErrorKind::OutOfRangeVertex, "coin polygon " + std::to_string(k) + " references arc " +
                                                             std::to_string(a), static_cast<std::int64_t>(a));
            }
            if (expansion.arcs[a].vertex != expansion.arcs[arcs.front()].vertex) {
                throw Error(ErrorKind::UnsupportedCoin,
                            "coin polygon " + std::to_string(k) + " mixes arcs of different vertices",
                            static_cast<std::int64_t>(k));
            }
        }
    }
}

}  // namespace

CoinedWalk make_coined_walk(const Graph &g, const CoinSpec &coin) {
    ExpansionMap expansion = clique_expansion(g);
    OrthogonalReflection shift = flipflop_shift(expansion);
    auto build_coin = [&]() {
        switch (coin.kind) {
            case CoinSpec::Kind::Grover:
                return grover_coin_reflection(expansion);
            case CoinSpec::Kind::PauliX:
                return pauli_x_coin_reflection(expansion);
            case CoinSpec::Kind::Reflection:
                require_vertex_local(expansion, coin.polygons);
                break;
        }
        OrthogonalReflection h(expansion.arcs.size(), coin.polygons);
        validate_tessellation(expansion.expanded, as_tessellation(h));
        return h;
    };
    OrthogonalReflection h = build_coin();
    return CoinedWalk{std::move(expansion), coin.theta, std::move(h), std::move(shift)};
}

Tessellation shift_tessellation(const CoinedWalk &cw) { return as_tessellation(cw.shift); }
Tessellation coin_tessellation(const CoinedWalk &cw) { return as_tessellation(cw.coin); }

EvolutionOperator embed_coined_as_sqw(const CoinedWalk &cw) {
    std::vector<std::pair<double, OrthogonalReflection>> factors;
    factors.emplace_back(cw.coin_angle, cw.coin);
    factors.emplace_back(M_PI / 2, cw.shift);
    return compose(std::move(factors));
}

double phase_invariant_distance(std::span<const Complex> a, std::span<const Complex> b) {
    if (a.size() != b.size()) {
        throw Error(ErrorKind::DimensionMismatch, "cannot compare states of dimension " + std::to_string(a.size()) +
                                                      " and " + std::to_string(b.size()));
    }
    Complex overlap = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        overlap += std::conj(b[i]) * a[i];
    }
    const Complex phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Complex(1.0, 0.0);
    double d2 = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        d2 += std::norm(a[i] - phase * b[i]);
    }
    return std::sqrt(d2);
}

namespace {

// The coined step written on arcs in edge-major order (edge e holds slots
// 2e and 2e+1 for its endpoints u < v), so the shift is a pair swap.
class DirectCoinedStep {
   public:
    explicit DirectCoinedStep(const CoinedWalk &cw) : edges_(cw.graph().edge_count()) {
        const ExpansionMap &ex = cw.expansion;
        to_edge_major_.resize(ex.arcs.size());
        for (std::size_t i = 0; i < ex.arcs.size(); ++i) {
            const Arc &arc = ex.arcs[i];
            const std::size_t side = cw.graph().edge(arc.edge).u == arc.vertex ? 0 : 1;
            to_edge_major_[i] = 2 * arc.edge + side;
        }

        const Eigen::MatrixXcd coin = dense_matrix(cw.coin, ex.arcs.size());
        for (Vertex v = 0; v < cw.graph().vertex_count(); ++v) {
            const auto begin = static_cast<Eigen::Index>(ex.vertex_offsets[v]);
            const auto d = static_cast<Eigen::Index>(ex.vertex_offsets[v + 1]) - begin;
            const Eigen::MatrixXcd local = coin.block(begin, begin, d, d);
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(local);
            Eigen::VectorXcd phases(d);
            for (Eigen::Index i = 0; i < d; ++i) {
                phases(i) = std::polar(1.0, cw.coin_angle * eig.eigenvalues()(i));
            }
            blocks_.push_back(eig.eigenvectors() * phases.asDiagonal() * eig.eigenvectors().adjoint());
            std::vector<std::size_t> slots;
            for (Eigen::Index i = 0; i < d; ++i) {
                slots.push_back(to_edge_major_[static_cast<std::size_t>(begin + i)]);
            }
            slots_.push_back(std::move(slots));
        }
    }

    Amplitudes to_edge_major(std::span<const Complex> arcs) const {
        Amplitudes out(arcs.size());
        for (std::size_t i = 0; i < arcs.size(); ++i) {
            out[to_edge_major_[i]] = arcs[i];
        }
        return out;
    }

    Amplitudes from_edge_major(std::span<const Complex> slots) const {
        Amplitudes out(slots.size());
        for (std::size_t i = 0; i < slots.size(); ++i) {
            out[i] = slots[to_edge_major_[i]];
        }
        return out;
    }

    void step(Amplitudes &psi) const {
        for (std::size_t v = 0; v < blocks_.size(); ++v) {
            const auto &slots = slots_[v];
            Eigen::VectorXcd local(static_cast<Eigen::Index>(slots.size()));
            for (std::size_t i = 0; i < slots.size(); ++i) {
                local(static_cast<Eigen::Index>(i)) = psi[slots[i]];
            }
            local = blocks_[v] * local;
            for (std::size_t i = 0; i < slots.size(); ++i) {
                psi[slots[i]] = local(static_cast<Eigen::Index>(i));
            }
        }
        // e^{i pi S / 2} = i S
        const Complex i(0.0, 1.0);
        for (std::size_t e = 0; e < edges_; ++e) {
            const Complex a = psi[2 * e];
            psi[2 * e] = i * psi[2 * e + 1];
            psi[2 * e + 1] = i * a;
        }
    }

   private:
    std::size_t edges_;
    std::vector<std::size_t> to_edge_major_;
    std::vector<Eigen::MatrixXcd> blocks_;
    std::vector<std::vector<std::size_t>> slots_;
};

}  // namespace

EquivalenceReport certify_equivalence(const CoinedWalk &cw, int steps, const WalkState &psi0) {
    if (psi0.dimension() != cw.arc_count()) {
        throw Error(ErrorKind::DimensionMismatch, "initial state has dimension " + std::to_string(psi0.dimension()) +
                                                      ", arc space has " + std::to_string(cw.arc_count()));
    }
    if (steps < 0) {
        throw Error(ErrorKind::DomainError, "step count must be non-negative");
    }
    const DirectCoinedStep direct(cw);
    const EvolutionOperator staggered = embed_coined_as_sqw(cw);

    EquivalenceReport report;
    report.bijection_used = cw.expansion;
    Amplitudes coined = direct.to_edge_major(psi0.amplitudes());
    evolve_streaming(staggered, psi0, steps, [&](int t, const WalkState &psi) {
        if (t > 0) {
            direct.step(coined);
        }
        const double d = phase_invariant_distance(direct.from_edge_major(coined), psi.amplitudes());
        report.max_state_deviation = std::max(report.max_state_deviation, d);
        report.steps_checked = t;
    });
    return report;
}

json equivalence_report_to_json(const EquivalenceReport &report) {
    json arcs = json::array();
    for (const Arc &arc : report.bijection_used.arcs) {
        arcs.push_back({arc.vertex, arc.edge});
    }
    return {{"max_state_deviation", report.max_state_deviation},
            {"steps_checked", report.steps_checked},
            {"bijection", std::move(arcs)}};
}

}  // namespace sqw
