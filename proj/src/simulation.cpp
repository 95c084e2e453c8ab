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

#include "sqw/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <string>

#include "sqw/io.hpp"

namespace sqw {

std::vector<WalkState> evolve(const EvolutionOperator &u, const WalkState &psi0, int steps, Backend backend) {
    std::vector<WalkState> trajectory;
    trajectory.reserve(static_cast<std::size_t>(std::max(steps, 0)) + 1);
    evolve_streaming(
        u, psi0, steps, [&](int, const WalkState &psi) { trajectory.push_back(psi); }, backend);
    return trajectory;
}

void evolve_streaming(const EvolutionOperator &u, const WalkState &psi0, int steps,
                      const std::function<void(int, const WalkState &)> &visit, Backend backend) {
    if (steps < 0) {
        throw Error(ErrorKind::DomainError, "step count must be non-negative");
    }
    if (u.dimension() != psi0.dimension()) {
        throw Error(ErrorKind::DimensionMismatch, "operator dimension " + std::to_string(u.dimension()) +
                                                      ", state dimension " + std::to_string(psi0.dimension()));
    }
    visit(0, psi0);
    Amplitudes current(psi0.amplitudes().begin(), psi0.amplitudes().end());
    Amplitudes next(current.size());
    Amplitudes scratch(current.size());
    for (int t = 1; t <= steps; ++t) {
        u.step_into(current, next, scratch, backend);
        std::swap(current, next);
        WalkState snapshot = WalkState::adopt(current);
        visit(t, snapshot);
    }
}

std::vector<std::int64_t> ring_positions(std::size_t ring_size) {
    std::vector<std::int64_t> positions(ring_size);
    const auto n = static_cast<std::int64_t>(ring_size);
    for (std::int64_t i = 0; i < n; ++i) {
        positions[static_cast<std::size_t>(i)] = i < n / 2 ? i : i - n;
    }
    return positions;
}

ProbabilityDistribution distribution(const WalkState &psi, std::span<const std::int64_t> positions) {
    if (positions.size() != psi.dimension()) {
        throw Error(ErrorKind::LabelMismatch, std::to_string(positions.size()) + " labels for a state of dimension " +
                                                  std::to_string(psi.dimension()));
    }
    ProbabilityDistribution d;
    d.positions.assign(positions.begin(), positions.end());
    d.probabilities.reserve(psi.dimension());
    for (const Complex &a : psi.amplitudes()) {
        d.probabilities.push_back(std::norm(a));
    }
    return d;
}

MomentSummary moments(const ProbabilityDistribution &d, int max_order, std::int64_t step) {
    MomentSummary m;
    m.step = step;
    m.raw.assign(static_cast<std::size_t>(std::max(max_order, 2)) + 1, 0.0);
    for (std::size_t v = 0; v < d.probabilities.size(); ++v) {
        const double x = static_cast<double>(d.positions[v]);
        double power = d.probabilities[v];
        for (double &moment : m.raw) {
            moment += power;
            power *= x;
        }
    }
    m.mean = m.raw[1];
    m.x2 = m.raw[2];
    m.sigma = std::sqrt(std::max(0.0, m.x2 - m.mean * m.mean));
    return m;
}

double antipodal_mass(const WalkState &psi, std::size_t guard_band, std::size_t origin) {
    const std::size_t n = psi.dimension();
    if (n == 0) {
        return 0.0;
    }
    const std::size_t antipode = (origin + n / 2) % n;
    const std::size_t width = std::min(2 * guard_band + 1, n);
    double mass = 0.0;
    for (std::size_t i = 0; i < width; ++i) {
        const std::size_t v = (antipode + n - guard_band % n + i) % n;
        mass += std::norm(psi[v]);
    }
    return mass;
}

void wrap_check(const WalkState &psi, int step, std::size_t guard_band, std::size_t origin) {
    const double mass = antipodal_mass(psi, guard_band, origin);
    if (mass >= kWrapTolerance) {
        throw Error(ErrorKind::WavefrontWrapped,
                    "probability " + format_double(mass) + " near the antipode at step " + std::to_string(step),
                    step);
    }
}

void wrap_check(std::span<const WalkState> trajectory, std::size_t guard_band, std::size_t origin) {
    for (std::size_t t = 0; t < trajectory.size(); ++t) {
        wrap_check(trajectory[t], static_cast<int>(t), guard_band, origin);
    }
}

void write_distribution_tsv(std::ostream &os, const ProbabilityDistribution &d) {
    std::map<std::int64_t, double> merged;
    for (std::size_t v = 0; v < d.probabilities.size(); ++v) {
        merged[d.positions[v]] += d.probabilities[v];
    }
    os << "position\tprobability\n";
    for (const auto &[x, p] : merged) {
        if (p != 0.0) {
            os << x << '\t' << format_double(p) << '\n';
        }
    }
}

void write_moments_tsv(std::ostream &os, std::span<const MomentSummary> rows) {
    os << "t\tmean\tx2\tsigma\n";
    for (const auto &m : rows) {
        os << m.step << '\t' << format_double(m.mean) << '\t' << format_double(m.x2) << '\t' << format_double(m.sigma)
           << '\n';
    }
}

}  // namespace sqw
