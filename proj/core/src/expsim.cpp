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

#include "qig/expsim.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qig {

namespace {

constexpr int kJackknifeGroups = 1000;

double block_rate(const RVector& truth, const RVector& p, const RVector& q) {
    double s = 0.0;
    for (Index k = 0; k < p.size(); ++k) {
        if (truth[k] > 0.0) {
            s += truth[k] * std::log(p[k] / q[k]);
        }
    }
    return s;
}

} // namespace

void PulseSchedule::validate() const {
    for (const PulseSegment& seg : segments) {
        if (!(seg.duration > 0.0) || !std::isfinite(seg.duration)) {
            throw ValidationError("pulse segment durations must be positive and finite");
        }
        if (!seg.b1.allFinite() || !seg.b2.allFinite() || !std::isfinite(seg.coupling)) {
            throw ValidationError("pulse segment fields must be finite");
        }
    }
}

CMatrix heisenberg_hamiltonian(const Eigen::Vector3d& b1, const Eigen::Vector3d& b2, double coupling) {
    const CMatrix id = CMatrix::Identity(2, 2);
    CMatrix h = CMatrix::Zero(4, 4);
    for (int k = 0; k < 3; ++k) {
        const CMatrix s = pauli(k);
        h += b1[k] * kron(s, id) + b2[k] * kron(id, s) + coupling * kron(s, s);
    }
    return h;
}

CMatrix heisenberg_unitary(const PulseSchedule& schedule) {
    schedule.validate();
    CMatrix u = CMatrix::Identity(4, 4);
    for (const PulseSegment& seg : schedule.segments) {
        u = unitary_evolution(heisenberg_hamiltonian(seg.b1, seg.b2, seg.coupling), seg.duration) * u;
    }
    return u;
}

CMatrix swap_gate() {
    CMatrix s = CMatrix::Zero(4, 4);
    s(0, 0) = s(3, 3) = 1.0;
    s(1, 2) = s(2, 1) = 1.0;
    return s;
}

CMatrix sqrt_swap() {
    const Complex a{0.5, 0.5};
    const Complex b{0.5, -0.5};
    CMatrix u = CMatrix::Zero(4, 4);
    u(0, 0) = u(3, 3) = 1.0;
    u(1, 1) = u(2, 2) = a;
    u(1, 2) = u(2, 1) = b;
    return u;
}

bool equal_up_to_phase(const CMatrix& u, const CMatrix& v, double tol) {
    if (u.rows() != v.rows() || u.cols() != v.cols()) {
        return false;
    }
    return std::abs((u.adjoint() * v).trace()) >= static_cast<double>(u.rows()) - tol;
}

PulseSchedule bell_mixed_schedule(double beta) {
    PulseSegment exchange;
    exchange.coupling = 1.0;
    exchange.duration = std::numbers::pi / 8.0;
    PulseSegment local;
    local.b1 = Eigen::Vector3d(std::cos(beta), 0.0, std::sin(beta));
    local.duration = std::numbers::pi / 4.0;
    return PulseSchedule{{exchange, local}};
}

OutcomeSampler::OutcomeSampler(const RVector& probabilities) {
    double acc = 0.0;
    for (Index i = 0; i < probabilities.size(); ++i) {
        if (probabilities[i] < 0.0) {
            throw ValidationError("OutcomeSampler: negative probability");
        }
        acc += probabilities[i];
        cdf_.push_back(acc);
    }
    if (cdf_.empty() || std::abs(acc - 1.0) > 1e-10) {
        throw ValidationError("OutcomeSampler: probabilities must sum to 1");
    }
}

int OutcomeSampler::operator()(double uniform) const {
    const double target = uniform * cdf_.back();
    const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), target);
    const auto idx = static_cast<int>(it - cdf_.begin());
    return std::min(idx, size() - 1);
}

int sample_measurement(const DensityMatrix& rho, const MeasurementBasis& basis, Rng& rng) {
    if (rho.dim() != basis.dim()) {
        throw ValidationError("sample_measurement: state and basis dimensions differ");
    }
    RVector p = basis.diagonal(rho.matrix()).cwiseMax(0.0);
    p /= p.sum();
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    return OutcomeSampler(p)(uniform(rng));
}

Strategy parse_strategy(const std::string& name) {
    if (name == "single" || name == "single-qubit") {
        return Strategy::SingleQubit;
    }
    if (name == "entangled") {
        return Strategy::Entangled;
    }
    throw ValidationError("unknown strategy '" + name + "' (expected single or entangled)");
}

std::string to_string(Strategy s) { return s == Strategy::SingleQubit ? "single" : "entangled"; }

StrategySetup make_strategy(const CanonicalPair& pair, Strategy strategy) {
    const auto [rho1, rho2] = pair.states();
    const DensityMatrix pair1 = tensor_power(rho1, 2);
    const DensityMatrix pair2 = tensor_power(rho2, 2);

    const BetaOptimum single = optimize_beta(pair.r1, pair.r2, pair.theta);
    const double beta = strategy == Strategy::SingleQubit
                            ? single.beta
                            : two_qubit_bell_strategy(pair.r1, pair.r2, pair.theta).beta;
    const MeasurementBasis local = qubit_basis(beta);
    const MeasurementBasis separable = local.tensor(local);
    const CMatrix u = strategy == Strategy::SingleQubit ? CMatrix::Identity(4, 4)
                                                        : heisenberg_unitary(bell_mixed_schedule(beta));
    // Measuring U^dagger rho U in the separable basis is measuring rho in {U|s>}.
    const MeasurementBasis effective = separable.rotated(u);

    StrategySetup setup{strategy, beta, 2, u, separable, effective,
                        RVector(), RVector(), 0.0, RVector(), RVector()};
    setup.p = separable.diagonal(u.adjoint() * pair1.matrix() * u).cwiseMax(0.0);
    setup.q = separable.diagonal(u.adjoint() * pair2.matrix() * u).cwiseMax(0.0);
    setup.p /= setup.p.sum();
    setup.q /= setup.q.sum();
    setup.analytic_rate = block_rate(setup.p, setup.p, setup.q) / setup.block_copies;
    setup.single_p = local.diagonal(rho1.matrix());
    setup.single_q = local.diagonal(rho2.matrix());
    return setup;
}

DiscriminationResult run_discrimination(const DensityMatrix& rho1, const DensityMatrix& rho2,
                                        Strategy strategy, long long copies, Rng& rng, TrueState truth) {
    if (rho1.dim() != 2 || rho2.dim() != 2) {
        throw ValidationError("run_discrimination: qubit states required");
    }
    if (copies < 1) {
        throw ValidationError("run_discrimination: copies must be positive");
    }
    if (strategy == Strategy::Entangled && copies % 2 != 0) {
        throw ValidationError("run_discrimination: the entangled strategy needs an even number of copies");
    }
    const CanonicalPair pair = canonicalize(density_to_bloch(rho1), density_to_bloch(rho2));
    const StrategySetup setup = make_strategy(pair, strategy);

    const RVector& block_truth = truth == TrueState::Rho1 ? setup.p : setup.q;
    const RVector& single_truth = truth == TrueState::Rho1 ? setup.single_p : setup.single_q;
    const OutcomeSampler block_sampler(block_truth);
    const OutcomeSampler single_sampler(single_truth);
    RVector block_llr(setup.p.size());
    for (Index k = 0; k < setup.p.size(); ++k) {
        block_llr[k] = std::log(setup.p[k] / setup.q[k]);
    }
    RVector single_llr(2);
    for (Index k = 0; k < 2; ++k) {
        single_llr[k] = std::log(setup.single_p[k] / setup.single_q[k]);
    }

    const long long blocks = copies / 2;
    const bool trailing = copies % 2 != 0;
    const long long units = blocks + (trailing ? 1 : 0);
    const int groups = static_cast<int>(std::min<long long>(units, kJackknifeGroups));
    std::vector<double> group_llr(static_cast<std::size_t>(groups), 0.0);
    std::vector<double> group_copies(static_cast<std::size_t>(groups), 0.0);

    DiscriminationResult result;
    result.strategy = strategy;
    result.copies = copies;
    result.beta = setup.beta;
    result.record.true_state = truth;
    result.record.outcomes.reserve(static_cast<std::size_t>(units));

    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    for (long long b = 0; b < units; ++b) {
        const bool single = trailing && b == blocks;
        const double u = uniform(rng);
        const int k = single ? single_sampler(u) : block_sampler(u);
        const double term = single ? single_llr[k] : block_llr[k];
        result.record.outcomes.push_back(k);
        result.record.llr += term;
        const auto g = static_cast<std::size_t>(b * groups / units);
        group_llr[g] += term;
        group_copies[g] += single ? 1.0 : 2.0;
    }
    result.record.decided_rho1 = result.record.llr >= 0.0;
    result.rate = result.record.llr / static_cast<double>(copies);

    if (groups > 1) {
        std::vector<double> leave_out(static_cast<std::size_t>(groups));
        double mean = 0.0;
        for (std::size_t g = 0; g < leave_out.size(); ++g) {
            leave_out[g] = (result.record.llr - group_llr[g]) / (static_cast<double>(copies) - group_copies[g]);
            mean += leave_out[g];
        }
        mean /= groups;
        double ss = 0.0;
        for (double v : leave_out) {
            ss += (v - mean) * (v - mean);
        }
        result.std_error = std::sqrt(ss * (groups - 1) / groups);
    }

    const double block_expect = block_rate(block_truth, setup.p, setup.q);
    const double single_expect = block_rate(single_truth, setup.single_p, setup.single_q);
    result.analytic_rate = (static_cast<double>(blocks) * block_expect + (trailing ? single_expect : 0.0)) /
                           static_cast<double>(copies);
    return result;
}

} // namespace qig
