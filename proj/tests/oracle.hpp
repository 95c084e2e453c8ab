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

// Brute-force dense constructions used as independent oracles. Nothing here
// calls the projector kernels.

#include <cmath>
#include <complex>
#include <random>
#include <span>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "sqw/graph.hpp"
#include "sqw/state.hpp"

namespace sqw::oracle {

inline Eigen::MatrixXcd reflection_matrix(std::size_t dim, std::span<const Polygon> polygons) {
    const auto n = static_cast<Eigen::Index>(dim);
    Eigen::MatrixXcd h = -Eigen::MatrixXcd::Identity(n, n);
    for (const Polygon &p : polygons) {
        for (std::size_t i = 0; i < p.size(); ++i) {
            for (std::size_t j = 0; j < p.size(); ++j) {
                h(static_cast<Eigen::Index>(p.vertices()[i]), static_cast<Eigen::Index>(p.vertices()[j])) +=
                    2.0 * p.amplitudes()[i] * std::conj(p.amplitudes()[j]);
            }
        }
    }
    return h;
}

/// e^{i theta H} for Hermitian H by diagonalization.
inline Eigen::MatrixXcd expi(double theta, const Eigen::MatrixXcd &h) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(h);
    Eigen::VectorXcd phases(h.rows());
    for (Eigen::Index i = 0; i < h.rows(); ++i) {
        phases(i) = std::polar(1.0, theta * eig.eigenvalues()(i));
    }
    return eig.eigenvectors() * phases.asDiagonal() * eig.eigenvectors().adjoint();
}

/// The line walk on an even ring, built from the explicit pair vectors.
inline Eigen::MatrixXcd line_walk_matrix(std::size_t n, double theta0, double theta1, double alpha, double beta,
                                         double phi0, double phi1) {
    const auto dim = static_cast<Eigen::Index>(n);
    Eigen::MatrixXcd h0 = -Eigen::MatrixXcd::Identity(dim, dim);
    Eigen::MatrixXcd h1 = -Eigen::MatrixXcd::Identity(dim, dim);
    for (std::size_t x = 0; x < n / 2; ++x) {
        Eigen::VectorXcd u0 = Eigen::VectorXcd::Zero(dim);
        u0(static_cast<Eigen::Index>(2 * x)) = std::cos(alpha / 2);
        u0(static_cast<Eigen::Index>(2 * x + 1)) = std::polar(std::sin(alpha / 2), phi0);
        h0 += 2.0 * u0 * u0.adjoint();
        Eigen::VectorXcd u1 = Eigen::VectorXcd::Zero(dim);
        u1(static_cast<Eigen::Index>(2 * x + 1)) = std::cos(beta / 2);
        u1(static_cast<Eigen::Index>((2 * x + 2) % n)) = std::polar(std::sin(beta / 2), phi1);
        h1 += 2.0 * u1 * u1.adjoint();
    }
    return expi(theta1, h1) * expi(theta0, h0);
}

inline Eigen::VectorXcd to_eigen(std::span<const Complex> v) {
    Eigen::VectorXcd out(static_cast<Eigen::Index>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i) {
        out(static_cast<Eigen::Index>(i)) = v[i];
    }
    return out;
}

inline WalkState random_state(std::size_t dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> normal;
    Amplitudes a(dim);
    double norm2 = 0.0;
    for (auto &x : a) {
        x = {normal(rng), normal(rng)};
        norm2 += std::norm(x);
    }
    for (auto &x : a) {
        x /= std::sqrt(norm2);
    }
    return WalkState::from_amplitudes(std::move(a));
}

/// Random partition of 0..dim-1 into polygons of size <= max_size with
/// random complex amplitudes.
inline std::vector<Polygon> random_polygons(std::size_t dim, std::size_t max_size, std::mt19937_64 &rng) {
    std::vector<Vertex> order(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        order[i] = i;
    }
    std::shuffle(order.begin(), order.end(), rng);
    std::uniform_int_distribution<std::size_t> size_dist(1, max_size);
    std::normal_distribution<double> normal;
    std::vector<Polygon> polygons;
    for (std::size_t i = 0; i < dim;) {
        const std::size_t size = std::min(size_dist(rng), dim - i);
        std::vector<Vertex> vs(order.begin() + static_cast<std::ptrdiff_t>(i),
                               order.begin() + static_cast<std::ptrdiff_t>(i + size));
        std::vector<Complex> amps(size);
        double norm2 = 0.0;
        for (auto &a : amps) {
            do {
                a = {normal(rng), normal(rng)};
            } while (std::abs(a) < 1e-3);
            norm2 += std::norm(a);
        }
        for (auto &a : amps) {
            a /= std::sqrt(norm2);
        }
        polygons.emplace_back(std::move(vs), std::move(amps));
        i += size;
    }
    return polygons;
}

/// Two-vertex fragment: v = 0 of degree 5, v' = 1 of degree 3, pendant
/// vertices 2..7 (edges b..g).
inline Graph mixed_degree_fragment() {
    return build_graph(8, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 6}, {1, 7}});
}

inline Graph complete_graph(std::size_t n) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = a + 1; b < n; ++b) {
            edges.emplace_back(a, b);
        }
    }
    return build_graph(n, edges);
}

inline Graph path_graph(std::size_t n) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex a = 0; a + 1 < n; ++a) {
        edges.emplace_back(a, a + 1);
    }
    return build_graph(n, edges);
}

}  // namespace sqw::oracle
