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

#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "sqw/graph.hpp"
#include "sqw/operators.hpp"
#include "sqw/state.hpp"

namespace sqw {

/// Coins of the form e^{i theta H} with H an orthogonal reflection on the arc
/// space whose polygons each stay inside one vertex's arcs.
struct CoinSpec {
    enum class Kind {
        /// One uniform polygon per vertex: the d-dimensional 2/d J - I.
        Grover,
        /// Consecutive arcs of each vertex paired into Pauli-X blocks; a
        /// leftover arc is a +1 singleton.
        PauliX,
        /// Caller-supplied polygons over expanded-graph vertices.
        Reflection,
    };

    Kind kind = Kind::Grover;
    double theta = M_PI / 2;
    std::vector<Polygon> polygons;
};

/// Accepts {"type": "grover"|"pauli-x"|"reflection", "theta": ..., "polygons": [...]}.
/// Any other type throws UnsupportedCoin.
CoinSpec coin_from_json(const nlohmann::json &descriptor, std::size_t arc_count);

/// Flip-flop coined walk on the arc space of `graph`, arcs indexed as in
/// `expansion.arcs`.
struct CoinedWalk {
    ExpansionMap expansion;
    double coin_angle = 0.0;
    OrthogonalReflection coin;
    OrthogonalReflection shift;

    const Graph &graph() const noexcept { return expansion.original; }
    std::size_t arc_count() const noexcept { return expansion.arcs.size(); }
};

/// S = 2 sum_edges |psi_(v,v')><psi_(v,v')| - I, one uniform pair per edge.
/// S maps arc (v, a) to (v', a).
OrthogonalReflection flipflop_shift(const ExpansionMap &expansion);
OrthogonalReflection flipflop_shift(const Graph &g);

OrthogonalReflection grover_coin_reflection(const ExpansionMap &expansion);
OrthogonalReflection grover_coin_reflection(const Graph &g);
OrthogonalReflection pauli_x_coin_reflection(const ExpansionMap &expansion);

/// Throws IsolatedVertex, UnsupportedCoin (a polygon spanning two vertices'
/// arcs) or the tessellation errors for a coin that does not partition the
/// arcs into cliques of the expanded graph.
CoinedWalk make_coined_walk(const Graph &g, const CoinSpec &coin);

/// Red (shift) and blue (coin) tessellations of the expanded graph.
Tessellation shift_tessellation(const CoinedWalk &cw);
Tessellation coin_tessellation(const CoinedWalk &cw);

/// e^{i pi/2 S} e^{i theta0 H0} on the expanded graph.
EvolutionOperator embed_coined_as_sqw(const CoinedWalk &cw);

/// min over phi of ||a - e^{i phi} b||.
double phase_invariant_distance(std::span<const Complex> a, std::span<const Complex> b);

struct EquivalenceReport {
    double max_state_deviation = 0.0;
    int steps_checked = 0;
    ExpansionMap bijection_used;
};

/// Evolves psi0 (on the arc space) under the coined walk built directly on
/// edge-major arcs with per-vertex coin blocks exponentiated by
/// diagonalization, and under the embedded staggered walk; reports the
/// largest phase-invariant deviation over all steps.
EquivalenceReport certify_equivalence(const CoinedWalk &cw, int steps, const WalkState &psi0);

nlohmann::json equivalence_report_to_json(const EquivalenceReport &report);

}  // namespace sqw
