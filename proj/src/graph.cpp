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

#include "sqw/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace sqw {

bool Graph::has_edge(Vertex a, Vertex b) const {
    if (a == b) {
        return false;
    }
    Edge e{std::min(a, b), std::max(a, b)};
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

Vertex Graph::other_end(std::size_t label, Vertex v) const {
    const Edge &e = edges_.at(label);
    if (e.u == v) {
        return e.v;
    }
    if (e.v == v) {
        return e.u;
    }
    throw Error(ErrorKind::OutOfRangeVertex, "vertex " + std::to_string(v) + " is not an endpoint of edge " +
                                                 std::to_string(label),
                static_cast<std::int64_t>(v));
}

void Graph::set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && labels.size() != vertex_count_) {
        throw Error(ErrorKind::LabelMismatch, "expected " + std::to_string(vertex_count_) + " vertex labels, got " +
                                                  std::to_string(labels.size()));
    }
    labels_ = std::move(labels);
}

Graph build_graph(std::size_t vertex_count, std::span<const std::pair<Vertex, Vertex>> edges) {
    Graph g;
    g.vertex_count_ = vertex_count;
    g.edges_.reserve(edges.size());
    for (auto [a, b] : edges) {
        if (a >= vertex_count || b >= vertex_count) {
            Vertex bad = a >= vertex_count ? a : b;
            throw Error(ErrorKind::OutOfRangeVertex,
                        "edge endpoint " + std::to_string(bad) + " >= vertex count " + std::to_string(vertex_count),
                        static_cast<std::int64_t>(bad));
        }
        if (a == b) {
            throw Error(ErrorKind::SelfLoop, "self-loop on vertex " + std::to_string(a), static_cast<std::int64_t>(a));
        }
        g.edges_.push_back(Edge{std::min(a, b), std::max(a, b)});
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());

    g.incident_.assign(vertex_count, {});
    for (std::size_t label = 0; label < g.edges_.size(); ++label) {
        g.incident_[g.edges_[label].u].push_back(label);
        g.incident_[g.edges_[label].v].push_back(label);
    }
    return g;
}

Graph build_graph(std::size_t vertex_count, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
    return build_graph(vertex_count, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size()));
}

Graph ring_graph(std::size_t vertex_count) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex i = 0; i < vertex_count; ++i) {
        edges.emplace_back(i, (i + 1) % vertex_count);
    }
    return build_graph(vertex_count, edges);
}

Polygon::Polygon(std::vector<Vertex> vertices, std::vector<Complex> amplitudes) {
    if (vertices.empty()) {
        throw Error(ErrorKind::EmptyPolygon, "polygon has no vertices");
    }
    if (vertices.size() != amplitudes.size()) {
        throw Error(ErrorKind::InvalidPolygon, "polygon has " + std::to_string(vertices.size()) + " vertices but " +
                                                   std::to_string(amplitudes.size()) + " amplitudes");
    }
    std::vector<std::size_t> order(vertices.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return vertices[a] < vertices[b]; });

    vertices_.reserve(order.size());
    amplitudes_.reserve(order.size());
    double norm2 = 0;
    for (std::size_t i : order) {
        if (!vertices_.empty() && vertices_.back() == vertices[i]) {
            throw Error(ErrorKind::InvalidPolygon, "vertex " + std::to_string(vertices[i]) + " repeated in polygon",
                        static_cast<std::int64_t>(vertices[i]));
        }
        if (amplitudes[i] == Complex(0.0, 0.0)) {
            throw Error(ErrorKind::InvalidPolygon, "zero amplitude on vertex " + std::to_string(vertices[i]),
                        static_cast<std::int64_t>(vertices[i]));
        }
        vertices_.push_back(vertices[i]);
        amplitudes_.push_back(amplitudes[i]);
        norm2 += std::norm(amplitudes[i]);
    }
    if (std::abs(norm2 - 1.0) > kUnitTolerance) {
        throw Error(ErrorKind::NotNormalized, "polygon amplitudes have squared norm " + std::to_string(norm2));
    }
}

bool Polygon::contains(Vertex v) const { return std::binary_search(vertices_.begin(), vertices_.end(), v); }

Complex Polygon::amplitude(Vertex v) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v) {
        return {0.0, 0.0};
    }
    return amplitudes_[static_cast<std::size_t>(it - vertices_.begin())];
}

Polygon uniform_polygon(std::vector<Vertex> vertices) {
    if (vertices.empty()) {
        throw Error(ErrorKind::EmptyPolygon, "polygon has no vertices");
    }
    const double a = 1.0 / std::sqrt(static_cast<double>(vertices.size()));
    std::vector<Complex> amplitudes(vertices.size(), Complex(a, 0.0));
    return Polygon(std::move(vertices), std::move(amplitudes));
}

void validate_partition(const Tessellation &t) {
    constexpr std::size_t kFree = static_cast<std::size_t>(-1);
    std::vector<std::size_t> owner(t.vertex_count, kFree);
    for (std::size_t k = 0; k < t.polygons.size(); ++k) {
        for (Vertex v : t.polygons[k].vertices()) {
            if (v >= t.vertex_count) {
                throw Error(ErrorKind::OutOfRangeVertex,
                            "polygon " + std::to_string(k) + " references vertex " + std::to_string(v),
                            static_cast<std::int64_t>(v));
            }
            if (owner[v] != kFree) {
                throw Error(ErrorKind::OverlappingPolygons,
                            "vertex " + std::to_string(v) + " lies in polygons " + std::to_string(owner[v]) +
                                " and " + std::to_string(k),
                            static_cast<std::int64_t>(v));
            }
            owner[v] = k;
        }
    }
    for (Vertex v = 0; v < t.vertex_count; ++v) {
        if (owner[v] == kFree) {
            throw Error(ErrorKind::UncoveredVertex, "vertex " + std::to_string(v) + " lies in no polygon",
                        static_cast<std::int64_t>(v));
        }
    }
}

void validate_tessellation(const Graph &g, const Tessellation &t) {
    if (t.vertex_count != g.vertex_count()) {
        throw Error(ErrorKind::DimensionMismatch, "tessellation spans " + std::to_string(t.vertex_count) +
                                                      " vertices, graph has " + std::to_string(g.vertex_count()));
    }
    validate_partition(t);
    for (std::size_t k = 0; k < t.polygons.size(); ++k) {
        auto vs = t.polygons[k].vertices();
        for (std::size_t i = 0; i < vs.size(); ++i) {
            for (std::size_t j = i + 1; j < vs.size(); ++j) {
                if (!g.has_edge(vs[i], vs[j])) {
                    throw Error(ErrorKind::NotAClique,
                                "polygon " + std::to_string(k) + " is not a clique: no edge (" +
                                    std::to_string(vs[i]) + ", " + std::to_string(vs[j]) + ")",
                                static_cast<std::int64_t>(k));
                }
            }
        }
    }
}

std::vector<Edge> union_covers_edges(const Graph &g, std::span<const Tessellation> ts) {
    // polygon id per vertex, per tessellation
    std::vector<std::vector<std::size_t>> owner;
    owner.reserve(ts.size());
    for (const auto &t : ts) {
        std::vector<std::size_t> own(g.vertex_count(), static_cast<std::size_t>(-1));
        for (std::size_t k = 0; k < t.polygons.size(); ++k) {
            for (Vertex v : t.polygons[k].vertices()) {
                if (v < own.size()) {
                    own[v] = k;
                }
            }
        }
        owner.push_back(std::move(own));
    }
    std::vector<Edge> uncovered;
    for (const Edge &e : g.edges()) {
        bool covered = std::any_of(owner.begin(), owner.end(), [&](const auto &own) {
            return own[e.u] != static_cast<std::size_t>(-1) && own[e.u] == own[e.v];
        });
        if (!covered) {
            uncovered.push_back(e);
        }
    }
    return uncovered;
}

namespace {

bool degenerate(double angle) {
    return !(angle > 0.0 && angle < M_PI) || std::sin(angle / 2) == 0.0 || std::cos(angle / 2) == 0.0;
}

}  // namespace

std::pair<Tessellation, Tessellation> line_tessellations(std::size_t ring_size, double alpha, double beta,
                                                         double phi0, double phi1) {
    if (ring_size % 2 != 0 || ring_size < 4) {
        throw Error(ErrorKind::OddRingSize, "ring size must be even and >= 4, got " + std::to_string(ring_size),
                    static_cast<std::int64_t>(ring_size));
    }
    if (degenerate(alpha) || degenerate(beta)) {
        throw Error(ErrorKind::DegenerateAngle, "alpha and beta must lie strictly inside (0, pi)");
    }
    const Complex a0(std::cos(alpha / 2), 0.0);
    const Complex a1 = std::polar(std::sin(alpha / 2), phi0);
    const Complex b0(std::cos(beta / 2), 0.0);
    const Complex b1 = std::polar(std::sin(beta / 2), phi1);

    Tessellation even{ring_size, {}};
    Tessellation odd{ring_size, {}};
    for (std::size_t x = 0; x < ring_size / 2; ++x) {
        even.polygons.emplace_back(std::vector<Vertex>{2 * x, 2 * x + 1}, std::vector<Complex>{a0, a1});
        odd.polygons.emplace_back(std::vector<Vertex>{2 * x + 1, (2 * x + 2) % ring_size},
                                  std::vector<Complex>{b0, b1});
    }
    return {std::move(even), std::move(odd)};
}

Vertex ExpansionMap::expanded_vertex(Arc arc) const {
    auto first = arcs.begin() + static_cast<std::ptrdiff_t>(vertex_offsets.at(arc.vertex));
    auto last = arcs.begin() + static_cast<std::ptrdiff_t>(vertex_offsets.at(arc.vertex + 1));
    auto it = std::lower_bound(first, last, arc);
    if (it == last || *it != arc) {
        throw Error(ErrorKind::OutOfRangeVertex, "edge " + std::to_string(arc.edge) + " is not incident on vertex " +
                                                     std::to_string(arc.vertex));
    }
    return static_cast<Vertex>(it - arcs.begin());
}

ExpansionMap clique_expansion(const Graph &g) {
    ExpansionMap map;
    map.original = g;
    map.vertex_offsets.reserve(g.vertex_count() + 1);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) == 0) {
            throw Error(ErrorKind::IsolatedVertex, "vertex " + std::to_string(v) + " has no incident edge",
                        static_cast<std::int64_t>(v));
        }
        map.vertex_offsets.push_back(map.arcs.size());
        for (std::size_t label : g.incident_edges(v)) {
            map.arcs.push_back(Arc{v, label});
        }
    }
    map.vertex_offsets.push_back(map.arcs.size());

    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        for (std::size_t i = map.vertex_offsets[v]; i < map.vertex_offsets[v + 1]; ++i) {
            for (std::size_t j = i + 1; j < map.vertex_offsets[v + 1]; ++j) {
                edges.emplace_back(i, j);
            }
        }
    }
    for (std::size_t label = 0; label < g.edge_count(); ++label) {
        const Edge &e = g.edge(label);
        edges.emplace_back(map.expanded_vertex({e.u, label}), map.expanded_vertex({e.v, label}));
    }
    map.expanded = build_graph(map.arcs.size(), edges);

    std::vector<std::string> labels;
    labels.reserve(map.arcs.size());
    for (const Arc &arc : map.arcs) {
        labels.push_back(std::to_string(arc.vertex) + "," + std::to_string(arc.edge));
    }
    map.expanded.set_labels(std::move(labels));
    return map;
}

}  // namespace sqw
