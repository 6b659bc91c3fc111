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

#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "qig/basisopt.hpp"
#include "qig/entropy.hpp"
#include "qig/error.hpp"

using namespace qig;

namespace {

constexpr double kPi = std::numbers::pi;

DensityMatrix qubit(const Eigen::Vector3d& x) { return bloch_to_density(BlochVector(x)); }

MeasurementBasis random_basis(std::mt19937_64& rng, int d) {
    const CMatrix h = oracle::random_hermitian(rng, d);
    return MeasurementBasis::from_columns(eig_hermitian(h).vectors);
}

} // namespace

TEST(ProbabilityDistribution, Validation) {
    EXPECT_THROW(ProbabilityDistribution({0.5, 0.6}), ValidationError);
    EXPECT_THROW(ProbabilityDistribution({1.1, -0.1}), ValidationError);
    const ProbabilityDistribution p({1.0 + 5e-13, -5e-13});
    EXPECT_EQ(p[1], 0.0);
}

TEST(KlDivergence, EqualIsZero) {
    const ProbabilityDistribution p({0.2, 0.3, 0.5});
    EXPECT_EQ(kl_divergence(p, p), 0.0);
}

TEST(KlDivergence, BiasedCoin) {
    const ProbabilityDistribution p({1.0 / 3, 2.0 / 3});
    const ProbabilityDistribution q({0.5, 0.5});
    EXPECT_NEAR(kl_divergence(p, q), 0.0566330122651325, 1e-15);
}

TEST(KlDivergence, DisjointSupportIsInfinite) {
    EXPECT_EQ(kl_divergence(ProbabilityDistribution({1, 0}), ProbabilityDistribution({0, 1})),
              kInfiniteDivergence);
    EXPECT_TRUE(std::isinf(kInfiniteDivergence));
}

TEST(KlDivergence, ZeroTimesLogZero) {
    EXPECT_NEAR(kl_divergence(ProbabilityDistribution({0, 1}), ProbabilityDistribution({0.5, 0.5})),
                std::log(2.0), 1e-15);
}

TEST(KlDivergence, LengthMismatch) {
    EXPECT_THROW(kl_divergence(ProbabilityDistribution({1, 0}), ProbabilityDistribution({0.2, 0.3, 0.5})),
                 ValidationError);
}

TEST(KlDivergence, NonnegativeOnRandomPairs) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.01, 1.0);
    for (int k = 0; k < 500; ++k) {
        RVector a(4), b(4);
        for (int i = 0; i < 4; ++i) {
            a[i] = u(rng);
            b[i] = u(rng);
        }
        a /= a.sum();
        b /= b.sum();
        EXPECT_GT(kl_divergence(ProbabilityDistribution(a), ProbabilityDistribution(b)), 0.0);
    }
}

TEST(LogLikelihoodRate, EqualDistributionsLeavePowerLaw) {
    const ProbabilityDistribution p({0.3, 0.7});
    const long long n = 1000;
    EXPECT_NEAR(log_likelihood_rate(n, p, p), -0.5 * std::log(2 * kPi * n * 0.21) / n, 1e-15);
}

TEST(LogLikelihoodRate, BiasedCoinAtHundred) {
    const ProbabilityDistribution p({1.0 / 3, 2.0 / 3});
    const ProbabilityDistribution q({0.5, 0.5});
    EXPECT_NEAR(log_likelihood_rate(100, p, q), -0.0813278615432383, 1e-14);
}

TEST(LogLikelihoodRate, ApproachesMinusDivergence) {
    const ProbabilityDistribution p({1.0 / 3, 2.0 / 3});
    const ProbabilityDistribution q({0.5, 0.5});
    const double d = kl_divergence(p, q);
    for (long long n : {1000LL, 100000LL, 10000000LL}) {
        const double gap = std::abs(log_likelihood_rate(n, p, q) + d);
        EXPECT_LT(gap, std::log(static_cast<double>(n)) / n);
    }
}

TEST(LogLikelihoodRate, RejectsDegenerate) {
    EXPECT_THROW(log_likelihood_rate(10, ProbabilityDistribution({1, 0}), ProbabilityDistribution({0.5, 0.5})),
                 ValidationError);
    EXPECT_THROW(log_likelihood_rate(10, ProbabilityDistribution({0.2, 0.3, 0.5}),
                                     ProbabilityDistribution({0.2, 0.3, 0.5})),
                 ValidationError);
}

TEST(Umegaki, IdenticalStates) {
    const auto rho = qubit({0.3, 0.1, -0.4});
    EXPECT_NEAR(umegaki_entropy(rho, rho), 0.0, 1e-14);
}

TEST(Umegaki, BenchmarkPoint) {
    const auto rho1 = qubit({0.9, 0, 0});
    const auto rho2 = qubit({0, 0, 0.5});
    EXPECT_NEAR(umegaki_entropy(rho1, rho2), 0.638472973439963, 1e-13);
}

TEST(Umegaki, MatchesQubitClosedForm) {
    std::mt19937_64 rng(12);
    for (int k = 0; k < 50; ++k) {
        const Eigen::Vector3d x = oracle::random_bloch(rng, 0.999);
        const Eigen::Vector3d y = oracle::random_bloch(rng, 0.99);
        EXPECT_NEAR(umegaki_entropy(qubit(x), qubit(y)), oracle::qubit_relative_entropy(x, y), 1e-11);
    }
}

TEST(Umegaki, CommutingEqualsSpectralKl) {
    const auto rho1 = qubit({0, 0, 0.6});
    const auto rho2 = qubit({0, 0, -0.3});
    const double kl = oracle::kl({0.8, 0.2}, {0.35, 0.65});
    EXPECT_NEAR(umegaki_entropy(rho1, rho2), kl, 1e-14);
}

TEST(Umegaki, PureFirstArgumentAllowed) {
    const auto rho1 = qubit({0, 0, 1});
    const auto rho2 = qubit({0, 0, 0.2});
    EXPECT_NEAR(umegaki_entropy(rho1, rho2), -std::log(0.6), 1e-14);
}

TEST(Umegaki, RejectsBoundarySecondArgument) {
    EXPECT_THROW(umegaki_entropy(qubit({0, 0, 0.2}), qubit({0, 0, 1})), BoundaryStateError);
}

TEST(Umegaki, PositiveOnRandomHigherDimensions) {
    std::mt19937_64 rng(13);
    for (int d : {3, 4, 8}) {
        const auto a = DensityMatrix::from_matrix(oracle::random_density(rng, d));
        const auto b = DensityMatrix::from_matrix(oracle::random_density(rng, d));
        EXPECT_GT(umegaki_entropy(a, b), 0.0);
    }
}

TEST(MeasuredEntropy, SharedEigenbasisAttainsUmegaki) {
    const auto rho1 = qubit({0, 0, 0.6});
    const auto rho2 = qubit({0, 0, -0.3});
    EXPECT_NEAR(measured_entropy(rho1, rho2, MeasurementBasis::computational(2)),
                umegaki_entropy(rho1, rho2), 1e-14);
}

TEST(MeasuredEntropy, IdenticalStatesAnyBasis) {
    std::mt19937_64 rng(14);
    const auto rho = DensityMatrix::from_matrix(oracle::random_density(rng, 3));
    EXPECT_NEAR(measured_entropy(rho, rho, random_basis(rng, 3)), 0.0, 1e-15);
}

TEST(MeasuredEntropy, BenchmarkOptimalBasis) {
    const auto [rho1, rho2] = CanonicalPair{0.9, 0.5, kPi / 2}.states();
    EXPECT_NEAR(measured_entropy(rho1, rho2, qubit_basis(0.405749867810535)), 0.58392603552378, 1e-12);
}

TEST(MeasuredEntropy, NeverExceedsUmegaki) {
    std::mt19937_64 rng(15);
    for (int d : {2, 3, 4}) {
        for (int k = 0; k < 100; ++k) {
            const auto a = DensityMatrix::from_matrix(oracle::random_density(rng, d));
            const auto b = DensityMatrix::from_matrix(oracle::random_density(rng, d));
            EXPECT_LE(measured_entropy(a, b, random_basis(rng, d)), umegaki_entropy(a, b) + 1e-10);
        }
    }
}

TEST(MeasuredEntropy, RejectsDimensionMismatch) {
    EXPECT_THROW(measured_entropy(qubit({0, 0, 0.1}), qubit({0, 0, 0.2}), MeasurementBasis::computational(3)),
                 ValidationError);
}

TEST(QubitMeasuredEntropy, IdenticalStates) {
    for (double beta : {0.0, 0.3, 2.0}) {
        EXPECT_EQ(qubit_measured_entropy(0.7, 0.7, 0.0, beta), 0.0);
    }
}

TEST(QubitMeasuredEntropy, OrthogonalMeasurementIsBlind) {
    EXPECT_NEAR(qubit_measured_entropy(0.9, 0.4, 0.0, kPi / 2), 0.0, 1e-15);
}

TEST(QubitMeasuredEntropy, AgreesWithMatrixRoute) {
    std::mt19937_64 rng(16);
    std::uniform_real_distribution<double> u(0, 1), a(0, 2 * kPi);
    for (int k = 0; k < 100; ++k) {
        const double r1 = 0.99 * u(rng), r2 = 0.99 * u(rng), theta = a(rng), beta = a(rng);
        const CanonicalPair pair{r1, r2, theta};
        const auto [rho1, rho2] = pair.states();
        EXPECT_NEAR(qubit_measured_entropy(r1, r2, theta, beta), measured_entropy(rho1, rho2, qubit_basis(beta)),
                    1e-12);
        EXPECT_NEAR(qubit_measured_entropy(r1, r2, theta, beta), oracle::qubit_measured(r1, r2, theta, beta), 1e-13);
    }
}

TEST(QubitMeasuredEntropy, SingleMaximumCurve) {
    int maxima = 0;
    const int n = 720;
    std::vector<double> v(n);
    for (int k = 0; k < n; ++k) {
        v[k] = qubit_measured_entropy(0.9, 0.5, kPi / 2, kPi * k / n);
    }
    for (int k = 0; k < n; ++k) {
        if (v[k] > v[(k + n - 1) % n] && v[k] > v[(k + 1) % n]) {
            ++maxima;
        }
    }
    // beta and beta + pi describe the same measurement
    EXPECT_EQ(maxima, 1);
}

TEST(QubitMeasuredEntropy, RejectsRadii) {
    EXPECT_THROW(qubit_measured_entropy(1.0, 0.5, 0, 0), ValidationError);
    EXPECT_THROW(qubit_measured_entropy(0.5, -0.1, 0, 0), ValidationError);
}
