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

#include <random>

#include "gtest/gtest.h"

#include "oracle.hpp"

using namespace sqw;

namespace {

double max_abs(const Eigen::MatrixXcd &m) { return m.cwiseAbs().maxCoeff(); }

double distance(const WalkState &a, const WalkState &b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        d = std::max(d, std::abs(a[i] - b[i]));
    }
    return d;
}

double distance(const WalkState &a, const Eigen::VectorXcd &b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        d = std::max(d, std::abs(a[i] - b(static_cast<Eigen::Index>(i))));
    }
    return d;
}

OrthogonalReflection ring_pairs(std::size_t n, bool shifted) {
    std::vector<Polygon> ps;
    for (std::size_t x = 0; x < n / 2; ++x) {
        const Vertex a = 2 * x + (shifted ? 1 : 0);
        ps.push_back(uniform_polygon({a, (a + 1) % n}));
    }
    return OrthogonalReflection(n, ps);
}

ErrorKind kind_of(const std::function<void()> &f) {
    try {
        f();
    } catch (const Error &e) {
        return e.kind();
    }
    ADD_FAILURE() << "expected an sqw::Error";
    return ErrorKind::ParseError;
}

}  // namespace

TEST(reflection, all_singletons_is_identity) {
    Tessellation t{5, {}};
    for (Vertex v = 0; v < 5; ++v) {
        t.polygons.push_back(uniform_polygon({v}));
    }
    const auto h = dense_matrix(reflection_from_tessellation(t));
    EXPECT_LE(max_abs(h - Eigen::MatrixXcd::Identity(5, 5)), 0.0);
}

TEST(reflection, ring_pairs_are_pauli_x_blocks) {
    const auto h = dense_matrix(ring_pairs(4, false));
    Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(4, 4);
    x(0, 1) = x(1, 0) = x(2, 3) = x(3, 2) = 1.0;
    EXPECT_LE(max_abs(h - x), 1e-15);
}

TEST(reflection, unsupported_vertex_is_negated) {
    std::vector<Polygon> ps = {uniform_polygon({0, 1})};
    OrthogonalReflection h(3, ps);
    WalkState out = apply_reflection(h, WalkState::basis(3, 2));
    EXPECT_EQ(out[2], Complex(-1.0, 0.0));
    EXPECT_EQ(out[0], Complex(0.0, 0.0));
}

TEST(reflection, from_graph_validates) {
    Graph path = build_graph(3, {{0, 1}, {1, 2}});
    Tessellation bad{3, {uniform_polygon({0, 2}), uniform_polygon({1})}};
    EXPECT_EQ(kind_of([&] { reflection_from_tessellation(path, bad); }), ErrorKind::NotAClique);
    std::vector<Polygon> overlap = {uniform_polygon({0, 1}), uniform_polygon({1, 2})};
    EXPECT_EQ(kind_of([&] { OrthogonalReflection(3, overlap); }), ErrorKind::OverlappingPolygons);
    std::vector<Polygon> outside = {uniform_polygon({0, 3})};
    EXPECT_EQ(kind_of([&] { OrthogonalReflection(3, outside); }), ErrorKind::OutOfRangeVertex);
}

TEST(apply_reflection, examples) {
    const auto h = ring_pairs(4, false);
    WalkState out = apply_reflection(h, WalkState::basis(4, 0));
    EXPECT_NEAR(std::abs(out[1] - 1.0), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(out[0]), 0.0, 1e-15);

    // polygon vectors are +1 eigenvectors
    std::mt19937_64 rng(5);
    const auto polygons = oracle::random_polygons(7, 3, rng);
    OrthogonalReflection r(7, polygons);
    Amplitudes a(7);
    for (std::size_t i = 0; i < polygons[0].size(); ++i) {
        a[polygons[0].vertices()[i]] = polygons[0].amplitudes()[i];
    }
    const auto psi = WalkState::from_amplitudes(a);
    EXPECT_LE(distance(apply_reflection(r, psi), psi), 1e-15);
}

TEST(apply_exp, examples) {
    std::mt19937_64 rng(6);
    const auto h = ring_pairs(4, false);
    const auto psi = oracle::random_state(4, rng);
    EXPECT_LE(distance(apply_exp({0.0, h}, psi), psi), 0.0);

    const WalkState hpsi = apply_reflection(h, psi);
    const WalkState rotated = apply_exp({M_PI / 2, h}, psi);
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_NEAR(std::abs(rotated[i] - Complex(0, 1) * hpsi[i]), 0.0, 1e-15);
    }

    const WalkState quarter = apply_exp({M_PI / 4, h}, WalkState::basis(4, 0));
    EXPECT_NEAR(std::abs(quarter[0] - 1.0 / std::sqrt(2.0)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(quarter[1] - Complex(0, 1.0 / std::sqrt(2.0))), 0.0, 1e-15);
}

TEST(grover_phase_apply, examples) {
    std::mt19937_64 rng(7);
    const auto polygons = oracle::random_polygons(6, 3, rng);
    OrthogonalReflection h(6, polygons);
    const auto psi = oracle::random_state(6, rng);
    EXPECT_LE(distance(grover_phase_apply(0.0, h, psi), psi), 1e-15);

    const WalkState half = grover_phase_apply(M_PI / 2, h, psi);
    const WalkState hpsi = apply_reflection(h, psi);
    for (std::size_t i = 0; i < 6; ++i) {
        EXPECT_NEAR(std::abs(half[i] + hpsi[i]), 0.0, 1e-15);
    }
}

// Random reflections against the dense oracle.
TEST(operator_properties, reflection_and_exponential) {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> angle(-M_PI, M_PI);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t dim = 2 + static_cast<std::size_t>(trial % 15);
        auto polygons = oracle::random_polygons(dim, 4, rng);
        OrthogonalReflection h(dim, polygons);
        const Eigen::MatrixXcd hm = oracle::reflection_matrix(dim, polygons);
        const auto psi = oracle::random_state(dim, rng);
        const double theta = angle(rng);

        const WalkState hh = apply_reflection(h, apply_reflection(h, psi));
        EXPECT_LE(distance(hh, psi), 1e-12);

        const WalkState forward = apply_exp({theta, h}, psi);
        EXPECT_NEAR(forward.norm(), 1.0, 1e-12);
        EXPECT_LE(distance(forward, oracle::expi(theta, hm) * oracle::to_eigen(psi.amplitudes())), 1e-12);
        EXPECT_LE(distance(apply_exp({-theta, h}, forward), psi), 1e-12);

        EXPECT_LE(max_abs(dense_matrix(h) - hm), 1e-14);
    }
}

TEST(operator_properties, grover_phase_is_phased_exponential) {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> angle(-M_PI, M_PI);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t dim = 2 + static_cast<std::size_t>(trial % 12);
        OrthogonalReflection h(dim, oracle::random_polygons(dim, 5, rng));
        const auto psi = oracle::random_state(dim, rng);
        const double theta = angle(rng);
        const WalkState g = grover_phase_apply(theta, h, psi);
        const WalkState e = apply_exp({theta, h}, psi);
        for (std::size_t i = 0; i < dim; ++i) {
            EXPECT_NEAR(std::abs(g[i] - std::polar(1.0, theta) * e[i]), 0.0, 1e-12);
        }
    }
}

TEST(operator_properties, generalized_grover_operator) {
    std::mt19937_64 rng(10);
    std::uniform_real_distribution<double> angle(-M_PI, M_PI);
    for (std::size_t dim : {2u, 5u, 16u}) {
        std::vector<Vertex> all(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            all[i] = i;
        }
        std::vector<Polygon> ps = {uniform_polygon(all)};
        OrthogonalReflection h(dim, ps);
        const double theta = angle(rng);
        const Complex phi_phase = std::polar(1.0, 2 * theta);
        const Eigen::VectorXcd u = Eigen::VectorXcd::Constant(static_cast<Eigen::Index>(dim), 1.0 / std::sqrt(dim));
        const Eigen::MatrixXcd g = Eigen::MatrixXcd::Identity(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim)) -
                                   (1.0 - phi_phase) * u * u.adjoint();
        const auto psi = oracle::random_state(dim, rng);
        EXPECT_LE(distance(grover_phase_apply(theta, h, psi), g * oracle::to_eigen(psi.amplitudes())), 1e-12);
    }
}

TEST(compose, standard_model_recovered) {
    for (std::size_t n = 4; n <= 64; n += 2) {
        const auto h0 = ring_pairs(n, false);
        const auto h1 = ring_pairs(n, true);
        const EvolutionOperator u = compose({{-M_PI / 2, h0}, {M_PI / 2, h1}});
        const Eigen::MatrixXcd expect = dense_matrix(h1) * dense_matrix(h0);
        EXPECT_LE(max_abs(dense_matrix(u) - expect), 1e-12) << "n = " << n;
    }
}

TEST(compose, factor_counts) {
    std::mt19937_64 rng(11);
    OrthogonalReflection a(6, oracle::random_polygons(6, 3, rng));
    OrthogonalReflection b(6, oracle::random_polygons(6, 3, rng));
    OrthogonalReflection c(6, oracle::random_polygons(6, 3, rng));

    const EvolutionOperator one = compose({{0.4, a}});
    EXPECT_LE(max_abs(dense_matrix(one) - oracle::expi(0.4, dense_matrix(a))), 1e-12);

    const EvolutionOperator three = compose({{0.4, a}, {-1.1, b}, {2.0, c}});
    ASSERT_EQ(three.factors().size(), 3u);
    const Eigen::MatrixXcd expect =
        oracle::expi(2.0, dense_matrix(c)) * oracle::expi(-1.1, dense_matrix(b)) * oracle::expi(0.4, dense_matrix(a));
    EXPECT_LE(max_abs(dense_matrix(three) - expect), 1e-12);

    // step and step_into agree
    const auto psi = oracle::random_state(6, rng);
    std::vector<Complex> out(6), scratch(6);
    three.step_into(psi.amplitudes(), out, scratch);
    EXPECT_LE(distance(three.step(psi), oracle::to_eigen(out)), 0.0);
    EXPECT_LE(distance(three.step(psi, Backend::Serial), oracle::to_eigen(out)), 0.0);
}

TEST(compose, errors) {
    EXPECT_EQ(kind_of([] { compose({}); }), ErrorKind::EmptyFactorList);
    std::mt19937_64 rng(12);
    OrthogonalReflection a(4, oracle::random_polygons(4, 2, rng));
    OrthogonalReflection b(5, oracle::random_polygons(5, 2, rng));
    EXPECT_EQ(kind_of([&] { compose({{0.1, a}, {0.2, b}}); }), ErrorKind::DimensionMismatch);
    const auto psi = oracle::random_state(5, rng);
    EXPECT_EQ(kind_of([&] { compose({{0.1, a}}).step(psi); }), ErrorKind::DimensionMismatch);
}

TEST(dense_matrix, identity_and_unitarity) {
    Tessellation singles{4, {}};
    for (Vertex v = 0; v < 4; ++v) {
        singles.polygons.push_back(uniform_polygon({v}));
    }
    const auto id = reflection_from_tessellation(singles);
    EXPECT_LE(max_abs(dense_matrix(compose({{0.7, id}, {1.3, id}})) -
                      std::polar(1.0, 2.0) * Eigen::MatrixXcd::Identity(4, 4)),
              1e-15);
    EXPECT_LE(max_abs(dense_matrix(compose({{0.0, ring_pairs(4, false)}})) - Eigen::MatrixXcd::Identity(4, 4)), 0.0);

    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> angle(-M_PI, M_PI);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t dim = 3 + static_cast<std::size_t>(trial % 20);
        const EvolutionOperator u = compose({{angle(rng), OrthogonalReflection(dim, oracle::random_polygons(dim, 4, rng))},
                                             {angle(rng), OrthogonalReflection(dim, oracle::random_polygons(dim, 4, rng))}});
        const Eigen::MatrixXcd m = dense_matrix(u);
        EXPECT_LE(max_abs(m.adjoint() * m - Eigen::MatrixXcd::Identity(m.rows(), m.cols())), 1e-10);
    }

    EXPECT_EQ(kind_of([] { dense_matrix(compose({{0.1, ring_pairs(8, false)}}), 4); }), ErrorKind::DimensionCapExceeded);
}
