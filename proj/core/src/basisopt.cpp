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

#include "qig/basisopt.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>
#include <string>

#include <unsupported/Eigen/MatrixFunctions>

namespace qig {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kRejectionsBeforeShrink = 500;
constexpr double kMinStepSize = 1e-4;
constexpr double kRestartJitter = 0.3;

// Per-qubit measured entropy of real states A, B in the real basis O.
double real_basis_entropy(const RMatrix& a, const RMatrix& b, const RMatrix& o) {
    const RVector p = (o.array() * (a * o).array()).colwise().sum().transpose();
    const RVector q = (o.array() * (b * o).array()).colwise().sum().transpose();
    double s = 0.0;
    for (Index i = 0; i < p.size(); ++i) {
        if (p[i] <= 0.0) {
            continue;
        }
        if (q[i] <= 0.0) {
            return kInfiniteDivergence;
        }
        s += p[i] * std::log(p[i] / q[i]);
    }
    return s;
}

void check_xz_qubit(const DensityMatrix& rho, const char* name) {
    if (rho.dim() != 2) {
        throw ValidationError(std::string(name) + " must be a qubit state");
    }
    if (rho.matrix().imag().cwiseAbs().maxCoeff() > 1e-12) {
        throw ValidationError(std::string(name) +
                              " must lie in the x-z plane of the Bloch ball (real density matrix)");
    }
}

RMatrix real_power(const DensityMatrix& rho, int copies) {
    return tensor_power(rho, copies).matrix().real();
}

struct ChainOutcome {
    RMatrix basis;
    double best = 0.0;
    std::vector<double> trace;
    long accepted = 0;
    double final_step = 0.0;
};

ChainOutcome run_chain(const RMatrix& a, const RMatrix& b, const RMatrix& start, int block,
                       const McConfig& cfg, std::uint64_t seed, bool jitter) {
    Rng rng(seed);
    const Index dim = start.rows();
    RMatrix current = start;
    if (jitter) {
        current = random_orthogonal_step(dim, kRestartJitter, rng) * start;
    }
    double value = real_basis_entropy(a, b, current) / block;

    ChainOutcome out;
    out.trace.push_back(value);
    double eps = cfg.step_size;
    int rejections = 0;
    for (long step = 0; step < cfg.steps; ++step) {
        RMatrix proposal = random_orthogonal_step(dim, eps, rng) * current;
        const double candidate = real_basis_entropy(a, b, proposal) / block;
        if (candidate > value) {
            current = std::move(proposal);
            value = candidate;
            out.trace.push_back(value);
            ++out.accepted;
            rejections = 0;
        } else if (++rejections >= kRejectionsBeforeShrink) {
            eps = std::max(0.5 * eps, kMinStepSize);
            rejections = 0;
        }
    }
    out.basis = std::move(current);
    out.best = value;
    out.final_step = eps;
    return out;
}

} // namespace

// ---------------------------------------------------------------- canonical pair

BlochVector CanonicalPair::x() const { return BlochVector(r1, 0.0, 0.0); }

BlochVector CanonicalPair::y() const {
    return BlochVector(r2 * std::cos(theta), 0.0, -r2 * std::sin(theta));
}

std::pair<DensityMatrix, DensityMatrix> CanonicalPair::states() const {
    return {bloch_to_density(x()), bloch_to_density(y())};
}

CanonicalPair canonicalize(const BlochVector& x, const BlochVector& y) {
    if (!x.is_interior() || !y.is_interior()) {
        throw BoundaryStateError("canonicalize: both Bloch vectors must have norm < 1");
    }
    const Eigen::Vector3d& a = x.coords();
    const Eigen::Vector3d& b = y.coords();
    CanonicalPair pair;
    pair.r1 = a.norm();
    pair.r2 = b.norm();
    pair.theta = (pair.r1 == 0.0 || pair.r2 == 0.0) ? 0.0 : std::atan2(a.cross(b).norm(), a.dot(b));
    return pair;
}

// ---------------------------------------------------------------- 1-D search

CircleMaximum maximize_on_circle(const std::function<double(double)>& f, int grid, double tol) {
    if (grid < 3) {
        throw ValidationError("maximize_on_circle: grid needs at least 3 points");
    }
    const double spacing = kTwoPi / grid;
    int best = 0;
    double best_value = f(0.0);
    for (int k = 1; k < grid; ++k) {
        const double v = f(k * spacing);
        if (v > best_value) {
            best = k;
            best_value = v;
        }
    }
    // Golden-section search on the bracket around the best grid point.
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = (best - 1) * spacing;
    double hi = (best + 1) * spacing;
    double c = hi - invphi * (hi - lo);
    double d = lo + invphi * (hi - lo);
    double fc = f(c);
    double fd = f(d);
    while (hi - lo > tol) {
        if (fc > fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - invphi * (hi - lo);
            fc = f(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + invphi * (hi - lo);
            fd = f(d);
        }
    }
    CircleMaximum out{best * spacing, best_value};
    const double mid = 0.5 * (lo + hi);
    const double fmid = f(mid);
    if (fmid > out.value) {
        out = {mid, fmid};
    }
    out.argmax = std::fmod(out.argmax + kTwoPi, kTwoPi);
    return out;
}

RMatrix qubit_direction_basis(double beta) {
    // cos(b) sigma_x + sin(b) sigma_z = [[cos g, sin g], [sin g, -cos g]], g = pi/2 - b
    const double half = 0.5 * (0.5 * std::numbers::pi - beta);
    RMatrix v(2, 2);
    v << std::cos(half), -std::sin(half),
         std::sin(half), std::cos(half);
    return v;
}

MeasurementBasis qubit_basis(double beta) { return MeasurementBasis::from_real(qubit_direction_basis(beta)); }

BetaOptimum optimize_beta(double r1, double r2, double theta) {
    // validates radii
    qubit_measured_entropy(r1, r2, theta, 0.0);
    const CircleMaximum m =
        maximize_on_circle([&](double b) { return qubit_measured_entropy(r1, r2, theta, b); });
    if (m.value <= 0.0) {
        return {0.0, 0.0, true};
    }
    return {m.argmax, m.value, false};
}

MeasurementBasis bell_mixed_basis(double beta) {
    const RMatrix local = qubit_direction_basis(beta);
    const RVector plus = local.col(0);
    const RVector minus = local.col(1);
    const auto k = [](const RVector& u, const RVector& v) {
        RVector out(4);
        out << u[0] * v[0], u[0] * v[1], u[1] * v[0], u[1] * v[1];
        return out;
    };
    const double s = 1.0 / std::numbers::sqrt2;
    RMatrix cols(4, 4);
    cols.col(0) = s * (k(plus, minus) + k(minus, plus));
    cols.col(1) = s * (k(plus, minus) - k(minus, plus));
    cols.col(2) = k(plus, plus);
    cols.col(3) = k(minus, minus);
    return MeasurementBasis::from_real(cols);
}

BetaOptimum two_qubit_bell_strategy(double r1, double r2, double theta) {
    qubit_measured_entropy(r1, r2, theta, 0.0);
    const auto [rho1, rho2] = CanonicalPair{r1, r2, theta}.states();
    const RMatrix a = real_power(rho1, 2);
    const RMatrix b = real_power(rho2, 2);
    const CircleMaximum m = maximize_on_circle([&](double beta) {
        return real_basis_entropy(a, b, bell_mixed_basis(beta).columns().real()) / 2.0;
    });
    if (m.value <= 0.0) {
        return {0.0, 0.0, true};
    }
    return {m.argmax, m.value, false};
}

// ---------------------------------------------------------------- Monte Carlo

void McConfig::validate() const {
    if (steps < 1) {
        throw ValidationError("Monte-Carlo steps must be >= 1");
    }
    if (!(step_size > 0.0 && step_size <= 1.0)) {
        throw ValidationError("Monte-Carlo step size must lie in (0, 1]");
    }
    if (restarts < 1) {
        throw ValidationError("Monte-Carlo restarts must be >= 1");
    }
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

RMatrix random_orthogonal_step(Index dim, double eps, Rng& rng) {
    if (dim < 1) {
        throw ValidationError("random_orthogonal_step: dimension must be positive");
    }
    if (!(eps > 0.0 && eps <= 1.0)) {
        throw ValidationError("random_orthogonal_step: step size must lie in (0, 1]");
    }
    std::normal_distribution<double> normal(0.0, 1.0);
    RMatrix a = RMatrix::Zero(dim, dim);
    for (Index i = 0; i < dim; ++i) {
        for (Index j = i + 1; j < dim; ++j) {
            a(i, j) = normal(rng);
            a(j, i) = -a(i, j);
        }
    }
    return (eps * a).exp();
}

MeasurementBasis structured_basis(const DensityMatrix& rho1, const DensityMatrix& rho2, int block) {
    if (block < 1 || block > 3) {
        throw ValidationError("block size must be 1, 2 or 3");
    }
    check_xz_qubit(rho1, "rho1");
    check_xz_qubit(rho2, "rho2");
    const RMatrix a1 = rho1.matrix().real();
    const RMatrix b1 = rho2.matrix().real();
    const CircleMaximum single = maximize_on_circle(
        [&](double beta) { return real_basis_entropy(a1, b1, qubit_direction_basis(beta)); });
    if (block == 1) {
        return qubit_basis(single.argmax);
    }
    const RMatrix a2 = real_power(rho1, 2);
    const RMatrix b2 = real_power(rho2, 2);
    const CircleMaximum pair = maximize_on_circle([&](double beta) {
        return real_basis_entropy(a2, b2, bell_mixed_basis(beta).columns().real());
    });
    const MeasurementBasis bell = bell_mixed_basis(pair.argmax);
    if (block == 2) {
        return bell;
    }
    return bell.tensor(qubit_basis(single.argmax));
}

McResult mc_optimize(const DensityMatrix& rho1, const DensityMatrix& rho2, int block,
                     const McConfig& cfg) {
    cfg.validate();
    const MeasurementBasis start_basis = structured_basis(rho1, rho2, block);
    const RMatrix start = start_basis.columns().real();
    const RMatrix a = real_power(rho1, block);
    const RMatrix b = real_power(rho2, block);

    std::vector<std::future<ChainOutcome>> futures;
    std::vector<std::uint64_t> seeds;
    for (int c = 0; c < cfg.restarts; ++c) {
        seeds.push_back(splitmix64(cfg.seed + static_cast<std::uint64_t>(c)));
        futures.push_back(std::async(std::launch::async, run_chain, std::cref(a), std::cref(b),
                                     std::cref(start), block, std::cref(cfg), seeds.back(), c > 0));
    }
    std::vector<ChainOutcome> outcomes;
    for (auto& f : futures) {
        outcomes.push_back(f.get());
    }

    int best = 0;
    for (int c = 1; c < cfg.restarts; ++c) {
        if (outcomes[c].best > outcomes[best].best) {
            best = c;
        }
    }
    McResult result{MeasurementBasis::from_real(outcomes[best].basis), outcomes[best].best,
                    std::move(outcomes[best].trace), best,
                    real_basis_entropy(a, b, start) / block, {}};
    for (int c = 0; c < cfg.restarts; ++c) {
        result.chains.push_back({seeds[c], outcomes[c].best, outcomes[c].accepted, outcomes[c].final_step});
    }
    return result;
}

} // namespace qig
