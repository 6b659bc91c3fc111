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

#include <string>
#include <vector>

#include "qig/basisopt.hpp"
#include "qig/measurement_basis.hpp"
#include "qig/qstate.hpp"

/// Sampling-level simulation of two-qubit discrimination experiments driven by
/// a Heisenberg exchange Hamiltonian (hbar = 1, fields in angular units).
namespace qig {

/// Piecewise-constant control: on each segment
///   H = sigma_1 . b1 + sigma_2 . b2 + coupling * sigma_1 . sigma_2
/// acts for `duration`.
struct PulseSegment {
    Eigen::Vector3d b1 = Eigen::Vector3d::Zero();
    Eigen::Vector3d b2 = Eigen::Vector3d::Zero();
    double coupling = 0.0;
    double duration = 0.0;
};

struct PulseSchedule {
    std::vector<PulseSegment> segments;

    void validate() const;
};

CMatrix heisenberg_hamiltonian(const Eigen::Vector3d& b1, const Eigen::Vector3d& b2, double coupling);

/// Time-ordered product of exp(-i H_k t_k); later segments act on the left.
CMatrix heisenberg_unitary(const PulseSchedule& schedule);

/// Principal square root of SWAP: the antisymmetric eigenvalue -1 maps to +i.
CMatrix sqrt_swap();
CMatrix swap_gate();

/// |Tr(U^dagger V)| >= dim - tol.
bool equal_up_to_phase(const CMatrix& u, const CMatrix& v, double tol = 1e-10);

/// Exchange pulse with coupling * duration = pi/8 (sqrt(SWAP) up to a global
/// phase) followed by a pi/4 field pulse along m = (cos b, 0, sin b) on the
/// first qubit. With U the resulting unitary, U|s> for the separable basis
/// |s> in {|++>, |+->, |-+>, |-->} of qubit_basis(beta) runs over the
/// Bell-mixed basis {|b3>, |b1>, |b2>, |b4>} up to phases.
PulseSchedule bell_mixed_schedule(double beta);

/// Draws one outcome index with probability <i|rho|i> from a uniform variate.
int sample_measurement(const DensityMatrix& rho, const MeasurementBasis& basis, Rng& rng);

/// Inverse-CDF sampler for a fixed outcome distribution.
class OutcomeSampler {
  public:
    explicit OutcomeSampler(const RVector& probabilities);
    int operator()(double uniform) const;
    int size() const { return static_cast<int>(cdf_.size()); }

  private:
    std::vector<double> cdf_;
};

enum class Strategy { SingleQubit, Entangled };

Strategy parse_strategy(const std::string& name);
std::string to_string(Strategy s);

enum class TrueState { Rho1, Rho2 };

/// Outcomes recorded in one run; llr is the sum of log(p_k / q_k) over the
/// recorded block outcomes, p from rho1 and q from rho2.
struct TrialRecord {
    std::vector<int> outcomes;
    TrueState true_state = TrueState::Rho1;
    double llr = 0.0;
    bool decided_rho1 = true; ///< llr > 0 (ties go to rho1)
};

/// Everything a strategy needs: the lab-frame measurement, the effective
/// basis it amounts to, and the per-block outcome statistics.
struct StrategySetup {
    Strategy strategy = Strategy::SingleQubit;
    double beta = 0.0;
    int block_copies = 2;
    CMatrix unitary;                   ///< U; identity for the single-qubit strategy
    MeasurementBasis separable_basis;  ///< lab read-out basis of one block
    MeasurementBasis effective_basis;  ///< {U|s>}
    RVector p;                         ///< block outcome probabilities under rho1
    RVector q;                         ///< ... under rho2
    double analytic_rate = 0.0;        ///< nats per copy when rho1 is true
    RVector single_p;                  ///< one-copy statistics for a trailing odd copy
    RVector single_q;
};

/// Works in the canonical frame of the pair (see CanonicalPair). Each block is
/// two copies for both strategies, so equal seeds drive both strategies with
/// the same uniform variates.
StrategySetup make_strategy(const CanonicalPair& pair, Strategy strategy);

struct DiscriminationResult {
    TrialRecord record;
    Strategy strategy = Strategy::SingleQubit;
    long long copies = 0;
    double rate = 0.0;   ///< llr / copies
    double std_error = 0.0; ///< grouped jackknife
    double analytic_rate = 0.0;
    double beta = 0.0;
};

/// Samples `copies` copies of the true state, block by block, and accumulates
/// the log-likelihood ratio. The entangled strategy needs an even copy count.
DiscriminationResult run_discrimination(const DensityMatrix& rho1, const DensityMatrix& rho2,
                                        Strategy strategy, long long copies, Rng& rng,
                                        TrueState truth = TrueState::Rho1);

} // namespace qig
