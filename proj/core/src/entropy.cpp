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

#include "qig/entropy.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace qig {

namespace {

constexpr double kProbTolerance = 1e-12;

void check_radius(double r, const char* name) {
    if (!(r >= 0.0 && r < 1.0)) {
        throw ValidationError(std::string(name) + " must lie in [0, 1), got " + std::to_string(r));
    }
}

} // namespace

ProbabilityDistribution::ProbabilityDistribution(RVector p) : p_(std::move(p)) {
    if (p_.size() == 0) {
        throw ValidationError("empty probability distribution");
    }
    for (Index i = 0; i < p_.size(); ++i) {
        if (!std::isfinite(p_[i]) || p_[i] < -kProbTolerance) {
            throw ValidationError("probability entry " + std::to_string(i) + " is invalid");
        }
        if (p_[i] < 0.0) {
            p_[i] = 0.0;
        }
    }
    if (std::abs(p_.sum() - 1.0) > kProbTolerance) {
        throw ValidationError("probabilities sum to " + std::to_string(p_.sum()) + ", not 1");
    }
}

ProbabilityDistribution::ProbabilityDistribution(std::initializer_list<double> p)
    : ProbabilityDistribution(RVector(Eigen::Map<const RVector>(p.begin(), static_cast<Index>(p.size())))) {}

double kl_divergence(const ProbabilityDistribution& p, const ProbabilityDistribution& q) {
    if (p.size() != q.size()) {
        throw ValidationError("kl_divergence: distributions have different lengths");
    }
    double sum = 0.0;
    for (Index i = 0; i < p.size(); ++i) {
        if (p[i] == 0.0) {
            continue;
        }
        if (q[i] == 0.0) {
            return kInfiniteDivergence;
        }
        sum += p[i] * std::log(p[i] / q[i]);
    }
    return sum;
}

double log_likelihood_rate(long long trials, const ProbabilityDistribution& p,
                           const ProbabilityDistribution& q) {
    if (trials < 1) {
        throw ValidationError("log_likelihood_rate: trials must be positive");
    }
    if (p.size() != 2 || q.size() != 2) {
        throw ValidationError("log_likelihood_rate: binary distributions required");
    }
    const double pp = p[0];
    if (pp <= 0.0 || pp >= 1.0) {
        throw ValidationError("log_likelihood_rate: p must lie strictly inside (0, 1)");
    }
    const double n = static_cast<double>(trials);
    const double stirling = -0.5 * std::log(2.0 * std::numbers::pi * n * pp * (1.0 - pp));
    return -kl_divergence(p, q) + stirling / n;
}

double umegaki_entropy(const DensityMatrix& rho1, const DensityMatrix& rho2) {
    if (rho1.dim() != rho2.dim()) {
        throw ValidationError("umegaki_entropy: state dimensions differ");
    }
    const CMatrix log2 = matrix_log(rho2);
    double self = 0.0;
    for (double l : rho1.eigenvalues()) {
        if (l > 0.0) {
            self += l * std::log(l);
        }
    }
    const double cross = (rho1.matrix() * log2).trace().real();
    return self - cross;
}

ProbabilityDistribution outcome_distribution(const DensityMatrix& rho, const MeasurementBasis& basis) {
    if (rho.dim() != basis.dim()) {
        throw ValidationError("state and basis dimensions differ");
    }
    return ProbabilityDistribution(basis.diagonal(rho.matrix()));
}

double measured_entropy(const DensityMatrix& rho1, const DensityMatrix& rho2,
                        const MeasurementBasis& basis) {
    if (rho1.dim() != rho2.dim()) {
        throw ValidationError("measured_entropy: state dimensions differ");
    }
    return kl_divergence(outcome_distribution(rho1, basis), outcome_distribution(rho2, basis));
}

double qubit_measured_entropy(double r1, double r2, double theta, double beta) {
    check_radius(r1, "r1");
    check_radius(r2, "r2");
    const double p = 0.5 * (1.0 + r1 * std::cos(beta));
    const double q = 0.5 * (1.0 + r2 * std::cos(theta + beta));
    return kl_divergence(ProbabilityDistribution{p, 1.0 - p}, ProbabilityDistribution{q, 1.0 - q});
}

} // namespace qig
