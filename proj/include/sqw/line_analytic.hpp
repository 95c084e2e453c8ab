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

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "sqw/operators.hpp"
#include "sqw/quadrature.hpp"

namespace sqw {

/// Parameters of the line walk U = e^{i theta H1} e^{i theta H0}.
struct LineParams {
    double theta = 0.0;
    double alpha = M_PI / 2;
    double beta = M_PI / 2;
    double phi0 = 0.0;
    double phi1 = 0.0;

    /// Throws DegenerateAngle unless alpha and beta lie in (0, pi).
    void validate() const;
};

/// Two-factor ring operator with angles (theta0, theta1) on the line
/// tessellations of an even ring.
EvolutionOperator line_walk_operator(std::size_t ring_size, const LineParams &p, double theta0, double theta1);
inline EvolutionOperator line_walk_operator(std::size_t ring_size, const LineParams &p) {
    return line_walk_operator(ring_size, p, p.theta, p.theta);
}

/// Entries of the fixed-momentum block [[A, -B*], [B, A*]].
std::pair<Complex, Complex> coefficients_AB(const LineParams &p, double k);

/// Reduced 2x2 evolution at momentum k with eigenphases +-lambda.
struct ReducedBlock {
    double k = 0.0;
    Complex A;
    Complex B;
    /// In [0, pi]; cos(lambda) = Re A.
    double lambda = 0.0;
    double sin_lambda = 0.0;
    /// sin(lambda) (2 sin(lambda) +- i (A - A*)).
    Complex c_plus;
    Complex c_minus;

    bool degenerate(double eps = kDegenerateBlockEps) const { return std::abs(B) <= eps || sin_lambda <= eps; }

    static constexpr double kDegenerateBlockEps = 1e-10;
};

ReducedBlock reduced_block(const LineParams &p, double k);

Eigen::Matrix2cd reduced_matrix(const ReducedBlock &b);

/// Unit eigenvectors (-B*, e^{+-i lambda} - A) / sqrt(C+-) for the
/// eigenvalues e^{+i lambda} (first) and e^{-i lambda} (second).
/// Throws DegenerateBlock when |B| or sin(lambda) is at most eps.
std::array<Eigen::Vector2cd, 2> block_eigenvectors(const ReducedBlock &b,
                                                   double eps = ReducedBlock::kDegenerateBlockEps);

/// t-th power of the block from its spectral decomposition; degenerate
/// blocks are taken as diag(A^t, A*^t).
Eigen::Matrix2cd block_power(const ReducedBlock &b, int t);

/// Which basis state the walk starts from.
enum class LineStart { Even, Odd };

/// Agreement demanded of successive wavefunction grids; looser than the
/// refinement target so that roundoff plateaus still pass.
inline constexpr double kWavefunctionAcceptTolerance = 1e-8;

/// Amplitudes psi_n(t) for n = first..last on the infinite line, starting
/// from |0> (Even) or |1> (Odd), by trapezoid quadrature of the momentum
/// integrals. Throws QuadratureNotConverged.
Amplitudes wavefunction(const LineParams &p, int t, std::int64_t first, std::int64_t last,
                        const QuadratureOptions &options = default_quadrature(), LineStart start = LineStart::Even);

/// Same integrals summed over the ring's allowed momenta k = -pi + 2 pi j / n;
/// indexed by ring vertex. Exact for the finite ring.
Amplitudes wavefunction_on_ring(const LineParams &p, int t, std::size_t ring_size,
                                LineStart start = LineStart::Even, Backend backend = Backend::OpenMP);

/// Linear combination of translated |0> and |1> solutions for a finitely
/// supported initial state given as (site, amplitude) pairs.
Amplitudes wavefunction_superposition(const LineParams &p, int t,
                                      std::span<const std::pair<std::int64_t, Complex>> initial,
                                      std::int64_t first, std::int64_t last,
                                      const QuadratureOptions &options = default_quadrature());

/// Leading term t^{2n-1} / (4 pi) * integral of (d lambda / dk)^{2n} over k
/// for the walk started at |0>. When alpha = beta the group velocity
/// d lambda / dk equals (A - A*) / (i sin lambda). Throws SingularIntegrand or
/// QuadratureNotConverged.
double asymptotic_odd_moment(const LineParams &p, int n, double t,
                             const QuadratureOptions &options = default_quadrature());

/// (2t - m1) m1 with m1 the leading first moment.
double asymptotic_sigma2(const LineParams &p, double t, const QuadratureOptions &options = default_quadrature());

/// 4 sqrt(1 - s)(1 - sqrt(1 - s)) t^2 with s = sin^2(theta) sin^2(alpha).
/// Valid for alpha = beta in [0, pi/2], phi0 = phi1 = 0; throws DomainError
/// outside that alpha range.
double closed_form_sigma2(double theta, double alpha, double t);

struct SurfacePoint {
    double theta = 0.0;
    double alpha = 0.0;
    double sigma2_over_t2 = 0.0;
};

/// sigma^2 / t^2 over the grid, theta-major. alpha > pi/2 is folded back
/// through sin^2(alpha) = sin^2(pi - alpha). Throws DomainError outside [0, pi].
std::vector<SurfacePoint> sigma2_surface(std::span<const double> thetas, std::span<const double> alphas);

/// count evenly spaced values from lo to hi inclusive; count 1 yields lo.
std::vector<double> linspace(double lo, double hi, std::size_t count);

void write_block_table_tsv(std::ostream &os, const LineParams &p, std::span<const double> ks);
void write_surface_tsv(std::ostream &os, std::span<const SurfacePoint> points);

}  // namespace sqw
