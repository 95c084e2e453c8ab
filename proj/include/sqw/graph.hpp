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

#include <compare>
#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sqw/error.hpp"

namespace sqw {

using Vertex = std::size_t;

/// Undirected edge stored canonically with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    auto operator<=>(const Edge &) const = default;
};

/// Simple undirected graph. Edges are deduplicated and sorted; an edge's
/// position in `edges()` is its label.
class Graph {
   public:
    Graph() = default;

    std::size_t vertex_count() const noexcept { return vertex_count_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    std::span<const Edge> edges() const noexcept { return edges_; }
    const Edge &edge(std::size_t label) const { return edges_.at(label); }

    bool has_edge(Vertex a, Vertex b) const;
    std::size_t degree(Vertex v) const { return incident_.at(v).size(); }
    /// Labels of the edges incident on `v`, ascending.
    std::span<const std::size_t> incident_edges(Vertex v) const { return incident_.at(v); }
    /// The endpoint of edge `label` that is not `v`.
    Vertex other_end(std::size_t label, Vertex v) const;

    const std::vector<std::string> &labels() const noexcept { return labels_; }
    void set_labels(std::vector<std::string> labels);

    friend Graph build_graph(std::size_t vertex_count, std::span<const std::pair<Vertex, Vertex>> edges);

   private:
    std::size_t vertex_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> incident_;
    std::vector<std::string> labels_;
};

/// Normalizes the edge list (canonical order, duplicates dropped).
/// Throws OutOfRangeVertex or SelfLoop.
Graph build_graph(std::size_t vertex_count, std::span<const std::pair<Vertex, Vertex>> edges);
Graph build_graph(std::size_t vertex_count, std::initializer_list<std::pair<Vertex, Vertex>> edges);

/// Ring 0-1-...-(n-1)-0.
Graph ring_graph(std::size_t vertex_count);

/// Unit vector supported exactly on a clique. Vertices are kept sorted and
/// amplitudes travel with their vertex.
class Polygon {
   public:
    /// Throws EmptyPolygon, InvalidPolygon (repeated vertex or zero
    /// amplitude) or NotNormalized.
    Polygon(std::vector<Vertex> vertices, std::vector<Complex> amplitudes);

    std::span<const Vertex> vertices() const noexcept { return vertices_; }
    std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
    std::size_t size() const noexcept { return vertices_.size(); }
    bool contains(Vertex v) const;
    /// Amplitude on `v`, zero off the support.
    Complex amplitude(Vertex v) const;

   private:
    std::vector<Vertex> vertices_;
    std::vector<Complex> amplitudes_;
};

/// Equal amplitudes 1/sqrt(|vertices|). Throws EmptyPolygon.
Polygon uniform_polygon(std::vector<Vertex> vertices);

struct Tessellation {
    std::size_t vertex_count = 0;
    std::vector<Polygon> polygons;
};

/// Checks that `t` partitions the vertex set (pairwise disjoint, covering,
/// in range). Throws OutOfRangeVertex, OverlappingPolygons(v), UncoveredVertex(v).
void validate_partition(const Tessellation &t);

/// Partition check plus the clique condition against `g`. Throws the
/// partition errors or NotAClique(polygon index).
void validate_tessellation(const Graph &g, const Tessellation &t);

/// Edges of `g` that lie inside no polygon of any tessellation in `ts`.
std::vector<Edge> union_covers_edges(const Graph &g, std::span<const Tessellation> ts);

/// The two tessellations of the even ring used for the line walk:
/// {2x, 2x+1} with (cos a/2, e^{i phi0} sin a/2) and {2x+1, 2x+2 mod n}
/// with (cos b/2, e^{i phi1} sin b/2). Throws OddRingSize or DegenerateAngle.
std::pair<Tessellation, Tessellation> line_tessellations(std::size_t ring_size, double alpha, double beta,
                                                         double phi0, double phi1);

/// A (vertex, incident edge label) pair.
struct Arc {
    Vertex vertex = 0;
    std::size_t edge = 0;

    auto operator<=>(const Arc &) const = default;
};

/// Result of replacing each degree-d vertex by a d-clique. Expanded vertex i
/// is `arcs[i]`; arcs are ordered by vertex, then edge label.
struct ExpansionMap {
    Graph original;
    Graph expanded;
    std::vector<Arc> arcs;
    /// First expanded vertex belonging to each original vertex (size |V|+1).
    std::vector<std::size_t> vertex_offsets;

    Vertex expanded_vertex(Arc arc) const;
};

/// Throws IsolatedVertex(v).
ExpansionMap clique_expansion(const Graph &g);

}  // namespace sqw
