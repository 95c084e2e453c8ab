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

#include "sqw/line_analytic.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

#include "sqw/graph.hpp"
#include "sqw/io.hpp"

namespace sqw {

void LineParams::validate() const {
    auto inside = [](double a) { return a > 0.0 && a < M_PI; };
    if (!inside(alpha) || !inside(beta)) {
        throw Error(ErrorKind::DegenerateAngle, "alpha and beta must lie strictly inside (0, pi)");
    }
}

EvolutionOperator line_walk_operator(std::size_t ring_size, const LineParams &p, double theta0, double theta1) {
    auto [even, odd] = line_tessellations(ring_size, p.alpha, p.beta, p.phi0, p.phi1);
    const Graph ring = ring_graph(ring_size);
    std::vector<std::pair<double, OrthogonalReflection>> factors;
    factors.emplace_back(theta0, reflection_from_tessellation(ring, even));
    factors.emplace_back(theta1, reflection_from_tessellation(ring, odd));
    return compose(std::move(factors));
}

std::pair<Complex, Complex> coefficients_AB(const LineParams &p, double k) {
    const double st = std::sin(p.theta);
    const double ct = std::cos(p.theta);
    const double sa = std::sin(p.alpha);
    const double ca = std::cos(p.alpha);
    const double sb = std::sin(p.beta);
    const double cb = std::cos(p.beta);
    const Complex i(0.0, 1.0);

    const Complex A = st * st * (ca * cb - sa * sb * std::polar(1.0, p.phi0 + p.phi1 + 2.0 * k)) + ct * ct +
                      i * st * ct * (ca - cb);
    const Complex B = st * sa * (i * ct - st * cb) * std::polar(1.0, p.phi0 + k) +
                      st * sb * (i * ct - st * ca) * std::polar(1.0, -(p.phi1 + k));
    return {A, B};
}

namespace {

// Returns (sin lambda - Im A, sin lambda + Im A), the gaps entering C+ and C-,
// each computed without cancellation using sin^2 lambda - Im^2 A = |B|^2.
std::pair<double, double> stable_gaps(double sin_lambda, double im_a, double b2) {
    double for_plus = sin_lambda - im_a;
    double for_minus = sin_lambda + im_a;
    if (im_a > 0.0 && for_minus > 0.0) {
        for_plus = b2 / for_minus;
    } else if (im_a < 0.0 && for_plus > 0.0) {
        for_minus = b2 / for_plus;
    }
    return {for_plus, for_minus};
}

}  // namespace

ReducedBlock reduced_block(const LineParams &p, double k) {
    ReducedBlock b;
    b.k = k;
    std::tie(b.A, b.B) = coefficients_AB(p, k);
    const double im_a = b.A.imag();
    const double b2 = std::norm(b.B);
    b.sin_lambda = std::hypot(im_a, std::abs(b.B));
    b.lambda = std::atan2(b.sin_lambda, b.A.real());
    auto [gap_plus, gap_minus] = stable_gaps(b.sin_lambda, im_a, b2);
    b.c_plus = 2.0 * b.sin_lambda * gap_plus;
    b.c_minus = 2.0 * b.sin_lambda * gap_minus;
    return b;
}

Eigen::Matrix2cd reduced_matrix(const ReducedBlock &b) {
    Eigen::Matrix2cd m;
    m << b.A, -std::conj(b.B), b.B, std::conj(b.A);
    return m;
}

std::array<Eigen::Vector2cd, 2> block_eigenvectors(const ReducedBlock &b, double eps) {
    if (b.degenerate(eps)) {
        throw Error(ErrorKind::DegenerateBlock, "block at k = " + format_double(b.k) + " has |B| = " +
                                                    format_double(std::abs(b.B)) + ", sin(lambda) = " +
                                                    format_double(b.sin_lambda));
    }
    const Complex i(0.0, 1.0);
    // e^{+i lambda} - A = i (sin lambda - Im A), e^{-i lambda} - A = -i (sin lambda + Im A)
    const double gap_plus = b.c_plus.real() / (2.0 * b.sin_lambda);
    const double gap_minus = b.c_minus.real() / (2.0 * b.sin_lambda);
    Eigen::Vector2cd plus(-std::conj(b.B), i * gap_plus);
    Eigen::Vector2cd minus(-std::conj(b.B), -i * gap_minus);
    plus /= std::sqrt(b.c_plus.real());
    minus /= std::sqrt(b.c_minus.real());
    return {plus, minus};
}

Eigen::Matrix2cd block_power(const ReducedBlock &b, int t) {
    if (b.degenerate()) {
        Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
        m(0, 0) = std::pow(b.A, t);
        m(1, 1) = std::pow(std::conj(b.A), t);
        return m;
    }
    const auto [plus, minus] = block_eigenvectors(b);
    const Complex phase = std::polar(1.0, b.lambda * t);
    return phase * plus * plus.adjoint() + std::conj(phase) * minus * minus.adjoint();
}

namespace {

// Momentum-space amplitudes on the even and odd sublattice.
struct SublatticeValues {
    Complex even;
    Complex odd;
};

SublatticeValues sublattice_values(const LineParams &p, double k, int t, LineStart start) {
    const ReducedBlock b = reduced_block(p, k);
    if (start == LineStart::Odd) {
        // |1> = integral dk/2pi e^{ik} |psi~1_k>
        const Eigen::Matrix2cd m = block_power(b, t);
        const Complex shift = std::polar(1.0, k);
        return {shift * m(0, 1), shift * m(1, 1)};
    }
    if (b.degenerate()) {
        return {std::pow(b.A, t), 0.0};
    }
    const double b2 = std::norm(b.B);
    const Complex phase = std::polar(1.0, b.lambda * t);
    const Complex even = b2 * (phase / b.c_plus + std::conj(phase) / b.c_minus);
    const Complex odd = b.B * std::sin(b.lambda * t) / b.sin_lambda;
    return {even, odd};
}

// Evaluates the momentum sums on one grid for the requested sites.
Amplitudes momentum_sum(const LineParams &p, int t, std::span<const double> nodes, double weight,
                        std::span<const double> even_sites, std::span<const double> odd_sites, LineStart start,
                        Backend backend) {
    const std::size_t n = nodes.size();
    std::vector<Complex> even_values(n);
    std::vector<Complex> odd_values(n);
    kernels::tabulate(backend, even_values, [&](std::size_t j) { return sublattice_values(p, nodes[j], t, start).even; });
    kernels::tabulate(backend, odd_values, [&](std::size_t j) { return sublattice_values(p, nodes[j], t, start).odd; });

    Amplitudes out(even_sites.size() + odd_sites.size());
    kernels::fourier_sum(backend, nodes, even_values, even_sites, weight,
                         std::span<Complex>(out).first(even_sites.size()));
    kernels::fourier_sum(backend, nodes, odd_values, odd_sites, weight,
                         std::span<Complex>(out).subspan(even_sites.size()));
    return out;
}

void check_steps(int t) {
    if (t < 0) {
        throw Error(ErrorKind::DomainError, "step count must be non-negative");
    }
}

bool is_even(std::int64_t n) { return n % 2 == 0; }

}  // namespace

Amplitudes wavefunction(const LineParams &p, int t, std::int64_t first, std::int64_t last,
                        const QuadratureOptions &options, LineStart start) {
    check_steps(t);
    p.validate();
    if (last < first) {
        return {};
    }
    std::vector<double> even_sites;
    std::vector<double> odd_sites;
    for (std::int64_t n = first; n <= last; ++n) {
        (is_even(n) ? even_sites : odd_sites).push_back(static_cast<double>(n));
    }

    auto on_grid = [&](std::size_t count) {
        const std::vector<double> nodes = periodic_nodes(count, options.offset);
        return momentum_sum(p, t, nodes, 1.0 / static_cast<double>(count), even_sites, odd_sites, start,
                            options.backend);
    };
    auto max_difference = [](const Amplitudes &a, const Amplitudes &b) {
        double diff = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            diff = std::max(diff, std::abs(a[i] - b[i]));
        }
        return diff;
    };

    std::size_t count = std::max<std::size_t>(options.start_nodes, 2);
    Amplitudes previous = on_grid(count);
    double diff = 0.0;
    bool accepted = false;
    while (2 * count <= options.max_nodes) {
        count *= 2;
        Amplitudes current = on_grid(count);
        diff = max_difference(current, previous);
        previous = std::move(current);
        if (diff <= options.tolerance) {
            accepted = true;
            break;
        }
    }
    if (!accepted && !(diff <= kWavefunctionAcceptTolerance && count > options.start_nodes)) {
        throw Error(ErrorKind::QuadratureNotConverged,
                    "successive grids differ by " + format_double(diff) + " at " + std::to_string(count) + " nodes",
                    static_cast<std::int64_t>(count));
    }

    // Undo the even/odd split.
    Amplitudes out(static_cast<std::size_t>(last - first + 1));
    std::size_t next_even = 0;
    std::size_t next_odd = even_sites.size();
    for (std::int64_t n = first; n <= last; ++n) {
        out[static_cast<std::size_t>(n - first)] = previous[is_even(n) ? next_even++ : next_odd++];
    }
    return out;
}

Amplitudes wavefunction_on_ring(const LineParams &p, int t, std::size_t ring_size, LineStart start,
                                Backend backend) {
    check_steps(t);
    p.validate();
    if (ring_size % 2 != 0 || ring_size < 4) {
        throw Error(ErrorKind::OddRingSize, "ring size must be even and >= 4, got " + std::to_string(ring_size),
                    static_cast<std::int64_t>(ring_size));
    }
    const auto n = static_cast<std::int64_t>(ring_size);
    std::vector<double> even_sites;
    std::vector<double> odd_sites;
    for (std::int64_t i = 0; i < n; ++i) {
        const std::int64_t x = i < n / 2 ? i : i - n;
        (is_even(x) ? even_sites : odd_sites).push_back(static_cast<double>(x));
    }
    // allowed momenta satisfy e^{i n k} = 1
    const std::vector<double> nodes = periodic_nodes(ring_size, 0.0);
    const Amplitudes split =
        momentum_sum(p, t, nodes, 1.0 / static_cast<double>(ring_size), even_sites, odd_sites, start, backend);

    Amplitudes out(ring_size);
    std::size_t next_even = 0;
    std::size_t next_odd = even_sites.size();
    for (std::int64_t i = 0; i < n; ++i) {
        const std::int64_t x = i < n / 2 ? i : i - n;
        out[static_cast<std::size_t>(i)] = split[is_even(x) ? next_even++ : next_odd++];
    }
    return out;
}

Amplitudes wavefunction_superposition(const LineParams &p, int t,
                                      std::span<const std::pair<std::int64_t, Complex>> initial,
                                      std::int64_t first, std::int64_t last, const QuadratureOptions &options) {
    Amplitudes out(last >= first ? static_cast<std::size_t>(last - first + 1) : 0, Complex(0.0, 0.0));
    for (const auto &[site, amplitude] : initial) {
        // the walk commutes with translation by two sites
        const bool even = is_even(site);
        const std::int64_t shift = even ? site : site - 1;
        const Amplitudes part = wavefunction(p, t, first - shift, last - shift, options,
                                             even ? LineStart::Even : LineStart::Odd);
        for (std::size_t i = 0; i < out.size(); ++i) {
            out[i] += amplitude * part[i];
        }
    }
    return out;
}

double asymptotic_odd_moment(const LineParams &p, int n, double t, const QuadratureOptions &options) {
    if (n < 1) {
        throw Error(ErrorKind::DomainError, "moment index n must be >= 1");
    }
    p.validate();
    const double st = std::sin(p.theta);
    const double slope = 2.0 * st * st * std::sin(p.alpha) * std::sin(p.beta);
    auto integrand = [&](double k) {
        // group velocity d(lambda)/dk = -(d Re A / dk) / sin(lambda); for alpha = beta it equals
        // (A - A*) / (i sin lambda)
        const double d_re_a = slope * std::sin(2.0 * k + p.phi0 + p.phi1);
        if (d_re_a == 0.0) {
            return 0.0;
        }
        const ReducedBlock b = reduced_block(p, k);
        const double velocity = d_re_a / b.sin_lambda;
        if (!std::isfinite(velocity) || std::abs(velocity) > 2.0 * (1.0 + 1e-9)) {
            throw Error(ErrorKind::SingularIntegrand, "integrand at k = " + format_double(k) + " is " +
                                                          format_double(velocity) + " with sin(lambda) = " +
                                                          format_double(b.sin_lambda));
        }
        return std::pow(velocity, 2 * n);
    };
    const QuadratureResult integral = integrate_periodic(integrand, options);
    return std::pow(t, 2 * n - 1) / (4.0 * M_PI) * integral.value;
}

double asymptotic_sigma2(const LineParams &p, double t, const QuadratureOptions &options) {
    const double m1 = asymptotic_odd_moment(p, 1, t, options);
    return (2.0 * t - m1) * m1;
}

double closed_form_sigma2(double theta, double alpha, double t) {
    if (!(alpha >= 0.0 && alpha <= M_PI / 2 + 1e-12)) {
        throw Error(ErrorKind::DomainError, "closed form needs 0 <= alpha <= pi/2, got " + format_double(alpha));
    }
    const double s = std::sin(theta) * std::sin(theta) * std::sin(alpha) * std::sin(alpha);
    const double root = std::sqrt(std::max(0.0, 1.0 - s));
    return 4.0 * root * (1.0 - root) * t * t;
}

std::vector<SurfacePoint> sigma2_surface(std::span<const double> thetas, std::span<const double> alphas) {
    auto in_range = [](double a) { return a >= -1e-12 && a <= M_PI + 1e-12; };
    std::vector<SurfacePoint> points;
    points.reserve(thetas.size() * alphas.size());
    for (double theta : thetas) {
        for (double alpha : alphas) {
            if (!in_range(theta) || !in_range(alpha)) {
                throw Error(ErrorKind::DomainError, "surface grid must lie in [0, pi]^2");
            }
            const double folded = std::clamp(alpha > M_PI / 2 ? M_PI - alpha : alpha, 0.0, M_PI / 2);
            points.push_back({theta, alpha, closed_form_sigma2(theta, folded, 1.0)});
        }
    }
    return points;
}

std::vector<double> linspace(double lo, double hi, std::size_t count) {
    std::vector<double> out(count);
    if (count == 1) {
        out[0] = lo;
    }
    for (std::size_t i = 0; count > 1 && i < count; ++i) {
        out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
    }
    return out;
}

void write_block_table_tsv(std::ostream &os, const LineParams &p, std::span<const double> ks) {
    os << "k\tReA\tImA\tReB\tImB\tlambda\n";
    for (double k : ks) {
        const ReducedBlock b = reduced_block(p, k);
        os << format_double(k) << '\t' << format_double(b.A.real()) << '\t' << format_double(b.A.imag()) << '\t'
           << format_double(b.B.real()) << '\t' << format_double(b.B.imag()) << '\t' << format_double(b.lambda)
           << '\n';
    }
}

void write_surface_tsv(std::ostream &os, std::span<const SurfacePoint> points) {
    os << "theta\talpha\tsigma2_over_t2\n";
    for (const auto &pt : points) {
        os << format_double(pt.theta) << '\t' << format_double(pt.alpha) << '\t' << format_double(pt.sigma2_over_t2)
           << '\n';
    }
}

}  // namespace sqw
