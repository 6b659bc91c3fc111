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

#include <limits>
#include <vector>

#include "qig/measurement_basis.hpp"
#include "qig/qstate.hpp"

namespace qig {

/// Value returned when P puts mass where Q has none. Optimizers rank it like
/// any other double.
inline constexpr double kInfiniteDivergence = std::numeric_limits<double>::infinity();

/// Finite discrete distribution; entries >= 0 summing to 1 within 1e-12.
class ProbabilityDistribution {
  public:
    /// Entries in [-1e-12, 0) are rounded up to zero; anything more negative
    /// is rejected.
    explicit ProbabilityDistribution(RVector p);
    ProbabilityDistribution(std::initializer_list<double> p);

    Index size() const { return p_.size(); }
    double operator[](Index i) const { return p_[i]; }
    const RVector& values() const { return p_; }

  private:
    RVector p_;
};

/// sum_i p_i log(p_i / q_i) in nats, with 0 log(0/q) = 0.
double kl_divergence(const ProbabilityDistribution& p, const ProbabilityDistribution& q);

/// Per-trial log-likelihood of observing the binary frequencies P under model
/// Q, including the Stirling correction:
///   -D(P||Q) + (1/N) log(1 / sqrt(2 pi N p (1-p))).
double log_likelihood_rate(long long trials, const ProbabilityDistribution& p,
                           const ProbabilityDistribution& q);

/// Tr[rho1 log rho1 - rho1 log rho2]. rho2 must be interior; rho1 may sit on
/// the boundary.
double umegaki_entropy(const DensityMatrix& rho1, const DensityMatrix& rho2);

/// Outcome distribution {<i|rho|i>} of a projective measurement.
ProbabilityDistribution outcome_distribution(const DensityMatrix& rho, const MeasurementBasis& basis);

/// KL divergence of the outcome distributions of rho1 and rho2 in basis b.
double measured_entropy(const DensityMatrix& rho1, const DensityMatrix& rho2,
                        const MeasurementBasis& basis);

/// Two-outcome measured entropy for qubits with Bloch radii r1, r2 separated by
/// angle theta, measured along the in-plane direction beta:
///   p = (1 + r1 cos beta) / 2,  q = (1 + r2 cos(theta + beta)) / 2.
double qubit_measured_entropy(double r1, double r2, double theta, double beta);

} // namespace qig
