// Copyright 2026 The qig Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <utility>
#include <vector>

#include "qig/entropy.hpp"
#include "qig/measurement_basis.hpp"
#include "qig/qstate.hpp"

/// Measurement-basis optimization for discriminating rho1 from rho2: the
/// one-parameter single-qubit problem, the Bell-mixed two-qubit basis and a
/// greedy Monte-Carlo search over real orthogonal bases of N-qubit blocks.
namespace qig {

using Rng = std::mt19937_64;

/// Two qubit states reduced by a global rotation to
///   X = (r1, 0, 0),  Y = r2 (cos theta, 0, -sin theta).
/// With this orientation the measurement direction m = (cos b, 0, sin b) sees
/// p = (1 + r1 cos b)/2 and q = (1 + r2 cos(theta + b))/2.
struct CanonicalPair {
    double r1 = 0.0;
    double r2 = 0.0;
    double theta = 0.0;

    BlochVector x() const;
    BlochVector y() const;
    std::pair<DensityMatrix, DensityMatrix> states() const;
};

/// (|X|, |Y|, angle between X and Y). Rejects |X| >= 1 or |Y| >= 1.
CanonicalPair canonicalize(const BlochVector& x, const BlochVector& y);

struct CircleMaximum {
    double argmax = 0.0;
    double value = 0.0;
};

/// Global maximum of a 2 pi-periodic function: best point of a uniform grid,
/// refined by golden-section search between its neighbours.
CircleMaximum maximize_on_circle(const std::function<double(double)>& f, int grid = 1024,
                                 double tol = 1e-10);

/// Real basis {|+>, |->} diagonalizing cos(b) sigma_x + sin(b) sigma_z.
RMatrix qubit_direction_basis(double beta);
MeasurementBasis qubit_basis(double beta);

struct BetaOptimum {
    double beta = 0.0;
    double value = 0.0;     ///< nats per qubit
    bool degenerate = false; ///< identical states; beta carries no information
};

/// Best single-qubit projective measurement for the canonical pair.
BetaOptimum optimize_beta(double r1, double r2, double theta);

/// {(|+-> + |-+>)/sqrt2, (|+-> - |-+>)/sqrt2, |++>, |-->} on top of qubit_basis(beta).
MeasurementBasis bell_mixed_basis(double beta);

/// Optimizes beta for the Bell-mixed basis on rho^{(x)2}; value is per qubit.
BetaOptimum two_qubit_bell_strategy(double r1, double r2, double theta);

struct McConfig {
    long steps = 100000;
    double step_size = 0.1;
    std::uint64_t seed = 1;
    int restarts = 4;

    void validate() const;
};

/// exp(eps A) for a random antisymmetric A with independent standard-normal
/// entries above the diagonal.
RMatrix random_orthogonal_step(Index dim, double eps, Rng& rng);

struct McChain {
    std::uint64_t seed = 0;
    double best = 0.0; ///< per qubit
    long accepted = 0;
    double final_step_size = 0.0;
};

struct McResult {
    MeasurementBasis basis;
    double per_qubit = 0.0;
    std::vector<double> trace; ///< accepted values of the winning chain, per qubit
    int best_chain = 0;
    double initial_per_qubit = 0.0;
    std::vector<McChain> chains;
};

/// Greedy ascent of measured_entropy over real orthogonal bases of a block of
/// `block` qubits (1..3). Both states must lie in the x-z plane of the Bloch
/// ball. Chain 0 starts from the best structured basis (optimized product
/// basis for one qubit, Bell-mixed for two, Bell-mixed (x) product for three);
/// further chains start from jittered copies of it. Chains run concurrently,
/// each with its own generator seeded from cfg.seed, so the result depends
/// only on the arguments.
McResult mc_optimize(const DensityMatrix& rho1, const DensityMatrix& rho2, int block,
                     const McConfig& cfg);

/// Structured starting basis used by mc_optimize for a block size.
MeasurementBasis structured_basis(const DensityMatrix& rho1, const DensityMatrix& rho2, int block);

/// Stateless 64-bit mixer used to derive per-chain and per-trial seeds.
std::uint64_t splitmix64(std::uint64_t x);

} // namespace qig
