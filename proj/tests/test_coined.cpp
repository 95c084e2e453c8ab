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

#include <random>

#include "gtest/gtest.h"

#include "oracle.hpp"
#include "sqw/simulation.hpp"

using namespace sqw;
using nlohmann::json;

namespace {

ErrorKind kind_of(const std::function<void()> &f) {
    try {
        f();
    } catch (const Error &e) {
        return e.kind();
    }
    ADD_FAILURE() << "expected an sqw::Error";
    return ErrorKind::ParseError;
}

Graph cycle_graph(std::size_t n) { return ring_graph(n); }

struct NamedGraph {
    std::string name;
    Graph graph;
};

std::vector<NamedGraph> suite() {
    return {{"P8", oracle::path_graph(8)},       {"C6", cycle_graph(6)},
            {"C8", cycle_graph(8)},              {"K4", oracle::complete_graph(4)},
            {"K8", oracle::complete_graph(8)},   {"fragment", oracle::mixed_degree_fragment()},
            {"K2", build_graph(2, {{0, 1}})},    {"star", build_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}})}};
}

// Coined step built from the arc definitions alone: flip-flop permutation
// times a block-diagonal coin.
Eigen::MatrixXcd coined_oracle(const ExpansionMap &m, double theta, CoinSpec::Kind kind) {
    const auto n = static_cast<Eigen::Index>(m.arcs.size());
    Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(n, n);
    for (std::size_t i = 0; i < m.arcs.size(); ++i) {
        const Arc a = m.arcs[i];
        const Vertex other = m.original.other_end(a.edge, a.vertex);
        s(static_cast<Eigen::Index>(m.expanded_vertex({other, a.edge})), static_cast<Eigen::Index>(i)) = 1.0;
    }
    Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(n, n);
    for (Vertex v = 0; v < m.original.vertex_count(); ++v) {
        const auto b = static_cast<Eigen::Index>(m.vertex_offsets[v]);
        const auto d = static_cast<Eigen::Index>(m.vertex_offsets[v + 1]) - b;
        if (kind == CoinSpec::Kind::Grover) {
            c.block(b, b, d, d) = Eigen::MatrixXcd::Constant(d, d, 2.0 / static_cast<double>(d)) -
                                  Eigen::MatrixXcd::Identity(d, d);
        } else {
            for (Eigen::Index i = 0; i + 1 < d; i += 2) {
                c(b + i, b + i + 1) = c(b + i + 1, b + i) = 1.0;
            }
            if (d % 2 == 1) {
                c(b + d - 1, b + d - 1) = 1.0;
            }
        }
    }
    return Complex(0.0, 1.0) * s * oracle::expi(theta, c);
}

}  // namespace

TEST(flipflop_shift, single_edge_is_pauli_x) {
    const auto s = dense_matrix(flipflop_shift(build_graph(2, {{0, 1}})));
    Eigen::Matrix2cd x;
    x << 0, 1, 1, 0;
    EXPECT_LE((s - x).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(flipflop_shift, permutes_arcs_and_squares_to_identity) {
    for (const auto &[name, g] : suite()) {
        const ExpansionMap m = clique_expansion(g);
        const auto s = flipflop_shift(m);
        ASSERT_EQ(s.dimension(), 2 * g.edge_count());
        for (std::size_t i = 0; i < m.arcs.size(); ++i) {
            const Arc a = m.arcs[i];
            const std::size_t j = m.expanded_vertex({g.other_end(a.edge, a.vertex), a.edge});
            const WalkState out = apply_reflection(s, WalkState::basis(m.arcs.size(), i));
            for (std::size_t k = 0; k < m.arcs.size(); ++k) {
                ASSERT_NEAR(std::abs(out[k] - (k == j ? 1.0 : 0.0)), 0.0, 1e-15) << name;
            }
            const WalkState back = apply_reflection(s, out);
            for (std::size_t k = 0; k < m.arcs.size(); ++k) {
                ASSERT_NEAR(std::abs(back[k] - (k == i ? 1.0 : 0.0)), 0.0, 1e-12) << name;
            }
        }
    }
    EXPECT_EQ(kind_of([] { flipflop_shift(build_graph(3, {{0, 1}})); }), ErrorKind::IsolatedVertex);
}

TEST(grover_coin_reflection, blocks) {
    const auto ring = dense_matrix(grover_coin_reflection(cycle_graph(5)));
    for (Eigen::Index v = 0; v < 5; ++v) {
        EXPECT_NEAR(std::abs(ring(2 * v, 2 * v)), 0.0, 1e-15);
        EXPECT_NEAR(std::abs(ring(2 * v, 2 * v + 1) - 1.0), 0.0, 1e-15);
    }

    const auto k5 = dense_matrix(grover_coin_reflection(oracle::complete_graph(5)));
    for (Eigen::Index i = 0; i < 4; ++i) {
        for (Eigen::Index j = 0; j < 4; ++j) {
            EXPECT_NEAR(std::abs(k5(i, j) - (i == j ? -0.5 : 0.5)), 0.0, 1e-15);
        }
    }

    const auto k2 = dense_matrix(grover_coin_reflection(build_graph(2, {{0, 1}})));
    EXPECT_LE((k2 - Eigen::MatrixXcd::Identity(2, 2)).cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_EQ(kind_of([] { grover_coin_reflection(build_graph(3, {{1, 2}})); }), ErrorKind::IsolatedVertex);
}

TEST(coined_walk, tessellations_cover_expanded_graph) {
    for (const auto &[name, g] : suite()) {
        for (auto kind : {CoinSpec::Kind::Grover, CoinSpec::Kind::PauliX}) {
            const CoinedWalk cw = make_coined_walk(g, CoinSpec{kind, 0.3, {}});
            EXPECT_EQ(cw.arc_count(), 2 * g.edge_count());
            const Tessellation shift = shift_tessellation(cw);
            const Tessellation coin = coin_tessellation(cw);
            EXPECT_NO_THROW(validate_tessellation(cw.expansion.expanded, shift)) << name;
            EXPECT_NO_THROW(validate_tessellation(cw.expansion.expanded, coin)) << name;
            if (kind == CoinSpec::Kind::Grover) {
                std::vector<Tessellation> both = {shift, coin};
                EXPECT_TRUE(union_covers_edges(cw.expansion.expanded, both).empty()) << name;
            }
        }
    }
}

TEST(embed_coined_as_sqw, matches_direct_coined_matrix) {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> angle(-M_PI, M_PI);
    for (const auto &[name, g] : suite()) {
        for (auto kind : {CoinSpec::Kind::Grover, CoinSpec::Kind::PauliX}) {
            const double theta = angle(rng);
            const CoinedWalk cw = make_coined_walk(g, CoinSpec{kind, theta, {}});
            const Eigen::MatrixXcd staggered = dense_matrix(embed_coined_as_sqw(cw));
            const Eigen::MatrixXcd direct = coined_oracle(cw.expansion, theta, kind);
            EXPECT_LE((staggered - direct).cwiseAbs().maxCoeff(), 1e-12) << name;
        }
    }
}

TEST(embed_coined_as_sqw, grover_quarter_turn_is_phased_coined_step) {
    const CoinedWalk cw = make_coined_walk(oracle::complete_graph(4), CoinSpec{CoinSpec::Kind::Grover, M_PI / 2, {}});
    const Eigen::MatrixXcd u = dense_matrix(embed_coined_as_sqw(cw));
    const Eigen::MatrixXcd s = dense_matrix(cw.shift);
    const Eigen::MatrixXcd g = dense_matrix(cw.coin);
    // iS . iG = -SG
    EXPECT_LE((u + s * g).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(embed_coined_as_sqw, single_edge_is_unitary) {
    const CoinedWalk cw = make_coined_walk(build_graph(2, {{0, 1}}), CoinSpec{CoinSpec::Kind::Grover, M_PI / 2, {}});
    const Eigen::MatrixXcd u = dense_matrix(embed_coined_as_sqw(cw));
    ASSERT_EQ(u.rows(), 2);
    EXPECT_LE((u.adjoint() * u - Eigen::MatrixXcd::Identity(2, 2)).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_EQ(cw.expansion.expanded.edge_count(), 1u);
}

TEST(certify_equivalence, suite) {
    std::mt19937_64 rng(32);
    for (const auto &[name, g] : suite()) {
        for (auto kind : {CoinSpec::Kind::Grover, CoinSpec::Kind::PauliX}) {
            const CoinedWalk cw = make_coined_walk(g, CoinSpec{kind, M_PI / 5, {}});
            const auto psi = oracle::random_state(cw.arc_count(), rng);
            EXPECT_EQ(certify_equivalence(cw, 0, psi).max_state_deviation, 0.0);
            const EquivalenceReport r = certify_equivalence(cw, 64, psi);
            EXPECT_EQ(r.steps_checked, 64);
            EXPECT_LE(r.max_state_deviation, 1e-10) << name;
            EXPECT_GE(r.max_state_deviation, 0.0);
        }
    }
    const CoinedWalk cycle = make_coined_walk(cycle_graph(6), CoinSpec{CoinSpec::Kind::PauliX, M_PI / 5, {}});
    EXPECT_LE(certify_equivalence(cycle, 50, WalkState::basis(12, 0)).max_state_deviation, 1e-10);

    const CoinedWalk k8 = make_coined_walk(oracle::complete_graph(8), CoinSpec{});
    EXPECT_LE(certify_equivalence(k8, 32, WalkState::basis(56, 3)).max_state_deviation, 1e-10);
    EXPECT_EQ(kind_of([&] { certify_equivalence(k8, 2, WalkState::basis(10, 0)); }), ErrorKind::DimensionMismatch);
}

TEST(phase_invariant_distance, ignores_global_phase) {
    std::mt19937_64 rng(33);
    const auto a = oracle::random_state(9, rng);
    Amplitudes b(a.amplitudes().begin(), a.amplitudes().end());
    for (auto &x : b) {
        x *= std::polar(1.0, 2.1);
    }
    EXPECT_LE(phase_invariant_distance(a.amplitudes(), b), 1e-15);
    const auto c = oracle::random_state(9, rng);
    EXPECT_GT(phase_invariant_distance(a.amplitudes(), c.amplitudes()), 0.01);
}

TEST(coin_from_json, descriptors) {
    EXPECT_EQ(coin_from_json(json{{"type", "grover"}}, 6).kind, CoinSpec::Kind::Grover);
    const CoinSpec px = coin_from_json(json{{"type", "pauli-x"}, {"theta", "pi/5"}}, 6);
    EXPECT_EQ(px.kind, CoinSpec::Kind::PauliX);
    EXPECT_NEAR(px.theta, M_PI / 5, 1e-15);
    EXPECT_EQ(kind_of([] { coin_from_json(json{{"type", "fourier"}}, 6); }), ErrorKind::UnsupportedCoin);
    EXPECT_EQ(kind_of([] { coin_from_json(json{{"kind", "grover"}}, 6); }), ErrorKind::ParseError);

    // a path 0-1-2: arcs (0,a) (1,a) (1,b) (2,b)
    const Graph path = oracle::path_graph(3);
    const CoinSpec local = coin_from_json(json::parse(R"({"type": "reflection", "theta": "pi/3",
        "polygons": [[0], [1, 2], [3]]})"), 4);
    const CoinedWalk cw = make_coined_walk(path, local);
    EXPECT_LE(certify_equivalence(cw, 10, WalkState::basis(4, 1)).max_state_deviation, 1e-10);

    const CoinSpec mixed = coin_from_json(json::parse(R"({"type": "reflection",
        "polygons": [[0, 1], [2], [3]]})"), 4);
    EXPECT_EQ(kind_of([&] { make_coined_walk(path, mixed); }), ErrorKind::UnsupportedCoin);
}

TEST(equivalence_report, json_shape) {
    const CoinedWalk cw = make_coined_walk(build_graph(2, {{0, 1}}), CoinSpec{});
    const json j = equivalence_report_to_json(certify_equivalence(cw, 3, WalkState::basis(2, 0)));
    EXPECT_EQ(j.at("steps_checked"), 3);
    EXPECT_LE(j.at("max_state_deviation").get<double>(), 1e-15);
    EXPECT_EQ(j.at("bijection"), json::parse("[[0, 0], [1, 0]]"));
}
