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

#include "qig/metrics.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace qig {

namespace {

void check_open_unit(double r, const char* what) {
    if (!(r >= 0.0 && r < 1.0)) {
        throw ValidationError(std::string(what) + ": radius must lie in [0, 1), got " +
                              std::to_string(r));
    }
}

// Radial projector x x^T / r^2; zero at the origin.
Eigen::Matrix3d radial_projector(const Eigen::Vector3d& x) {
    const double r2 = x.squaredNorm();
    if (r2 == 0.0) {
        return Eigen::Matrix3d::Zero();
    }
    return x * x.transpose() / r2;
}

QuadraticForm bloch_form(const Eigen::Matrix3d& g) {
    return {g, {"x1", "x2", "x3"}};
}

RMatrix finite_difference_hessian(const std::function<double(const RVector&)>& f,
                                  const RVector& origin, double h) {
    const Index n = origin.size();
    RMatrix hess(n, n);
    const double f0 = f(origin);
    for (Index i = 0; i < n; ++i) {
        RVector plus = origin, minus = origin;
        plus[i] += h;
        minus[i] -= h;
        hess(i, i) = (f(plus) - 2.0 * f0 + f(minus)) / (h * h);
        for (Index j = i + 1; j < n; ++j) {
            RVector pp = origin, pm = origin, mp = origin, mm = origin;
            pp[i] += h; pp[j] += h;
            pm[i] += h; pm[j] -= h;
            mp[i] -= h; mp[j] += h;
            mm[i] -= h; mm[j] -= h;
            hess(i, j) = (f(pp) - f(pm) - f(mp) + f(mm)) / (4.0 * h * h);
            hess(j, i) = hess(i, j);
        }
    }
    return 0.5 * (hess + hess.transpose());
}

} // namespace

double fisher_rao(const ProbabilityDistribution& p, const RVector& dp) {
    if (dp.size() != p.size()) {
        throw ValidationError("fisher_rao: displacement length differs from distribution");
    }
    if (std::abs(dp.sum()) > 1e-12 * std::max(1.0, dp.cwiseAbs().maxCoeff())) {
        throw ValidationError("fisher_rao: displacement must sum to zero");
    }
    double sum = 0.0;
    for (Index i = 0; i < p.size(); ++i) {
        if (p[i] <= 0.0) {
            throw ValidationError("fisher_rao: zero probability component");
        }
        sum += dp[i] * dp[i] / p[i];
    }
    return sum;
}

double fisher_rao_in_basis(const DensityMatrix& rho, const TangentVector& drho,
                           const MeasurementBasis& basis) {
    if (rho.dim() != drho.dim()) {
        throw ValidationError("fisher_rao_in_basis: state and tangent dimensions differ");
    }
    const RVector p = basis.diagonal(rho.matrix());
    const RVector dp = basis.diagonal(drho.matrix());
    double sum = 0.0;
    for (Index i = 0; i < p.size(); ++i) {
        if (dp[i] == 0.0) {
            continue;
        }
        if (p[i] <= 0.0) {
            throw ValidationError("fisher_rao_in_basis: outcome with zero probability moves");
        }
        sum += dp[i] * dp[i] / p[i];
    }
    return sum;
}

Sld solve_sld(const DensityMatrix& rho, const TangentVector& drho) {
    if (rho.dim() != drho.dim()) {
        throw ValidationError("solve_sld: state and tangent dimensions differ");
    }
    const HermitianEigen e = eig_hermitian(rho.matrix());
    const CMatrix d = e.vectors.adjoint() * drho.matrix() * e.vectors;
    const Index n = rho.dim();
    CMatrix l(n, n);
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) {
            const double denom = e.values[i] + e.values[j];
            if (denom < 2.0 * kEpsInterior) {
                throw BoundaryStateError("solve_sld: boundary state");
            }
            l(i, j) = 2.0 * d(i, j) / denom;
        }
    }
    CMatrix back = e.vectors * l * e.vectors.adjoint();
    return {0.5 * (back + back.adjoint())};
}

double bh_metric(const DensityMatrix& rho, const TangentVector& drho) {
    const Sld sld = solve_sld(rho, drho);
    return (rho.matrix() * sld.L * sld.L).trace().real();
}

MeasurementBasis sld_eigenbasis(const DensityMatrix& rho, const TangentVector& drho) {
    return MeasurementBasis::from_columns(eig_hermitian(solve_sld(rho, drho).L).vectors);
}

double bh_qubit_polar(double r, double dr, double dtheta, double dphi, double theta) {
    check_open_unit(r, "bh_qubit_polar");
    const double s = std::sin(theta);
    return dr * dr / (1.0 - r * r) + r * r * (dtheta * dtheta + s * s * dphi * dphi);
}

double radial_coefficient(double r) {
    check_open_unit(r, "radial_coefficient");
    return 1.0 / (1.0 - r * r);
}

double bkm_tangential_coefficient(double r) {
    check_open_unit(r, "bkm_tangential_coefficient");
    if (r < 1e-4) {
        const double r2 = r * r;
        return 1.0 + r2 / 3.0 + r2 * r2 / 5.0;
    }
    return std::atanh(r) / r;
}

QuadraticForm bkm_qubit_form(const BlochVector& x) {
    const double r = x.norm();
    check_open_unit(r, "bkm_qubit");
    const Eigen::Matrix3d p = radial_projector(x.coords());
    const Eigen::Matrix3d g = radial_coefficient(r) * p +
                              bkm_tangential_coefficient(r) * (Eigen::Matrix3d::Identity() - p);
    return bloch_form(g);
}

double bkm_qubit(const BlochVector& x, const Eigen::Vector3d& dx) {
    return bkm_qubit_form(x)(dx);
}

QuadraticForm bh_qubit_form(const BlochVector& x) {
    const double r = x.norm();
    check_open_unit(r, "bh_qubit");
    const Eigen::Matrix3d p = radial_projector(x.coords());
    return bloch_form(radial_coefficient(r) * p + (Eigen::Matrix3d::Identity() - p));
}

double bh_qubit(const BlochVector& x, const Eigen::Vector3d& dx) {
    return bh_qubit_form(x)(dx);
}

Chart bloch_chart(const BlochVector& x) {
    Chart chart;
    chart.map = [](const RVector& v) { return bloch_to_density(BlochVector(Eigen::Vector3d(v))); };
    chart.origin = x.coords();
    chart.labels = {"x1", "x2", "x3"};
    return chart;
}

QuadraticForm bkm_hessian_numeric(const Chart& chart, double h) {
    if (!(h >= 1e-6 && h <= 1e-3)) {
        throw ValidationError("bkm_hessian_numeric: step must lie in [1e-6, 1e-3]");
    }
    const DensityMatrix base = chart.base();
    if (!base.is_interior()) {
        throw BoundaryStateError("bkm_hessian_numeric: base state is not interior");
    }
    const auto entropy_at = [&](const RVector& lambda) {
        return umegaki_entropy(base, chart.map(lambda));
    };
    constexpr double kMinStep = 1e-9;
    for (double step = h; step >= kMinStep; step *= 0.5) {
        try {
            const RMatrix coarse = finite_difference_hessian(entropy_at, chart.origin, step);
            const RMatrix fine = finite_difference_hessian(entropy_at, chart.origin, 0.5 * step);
            RMatrix g = (4.0 * fine - coarse) / 3.0;
            return {0.5 * (g + g.transpose()), chart.labels};
        } catch (const ValidationError&) {
            // stencil left the interior; retry closer in
        }
    }
    throw ValidationError("bkm_hessian_numeric: stencil leaves state space");
}

AdditivityCheck bh_additivity_check(const DensityMatrix& rho, const TangentVector& drho, int copies) {
    if (copies < 1 || copies > 3) {
        throw ValidationError("bh_additivity_check: copies must be 1, 2 or 3");
    }
    const DensityMatrix big = tensor_power(rho, copies);
    const TangentVector dbig = product_tangent(rho, drho, copies);
    return {bh_metric(big, dbig) / copies, bh_metric(rho, drho)};
}

double cramer_rao_bound(double g_vv) {
    if (!(g_vv > 0.0) || !std::isfinite(g_vv)) {
        throw ValidationError("cramer_rao_bound: metric value must be positive and finite");
    }
    return 1.0 / g_vv;
}

std::pair<TaggedBound, TaggedBound> qubit_cramer_rao_bounds(const BlochVector& x,
                                                            const Eigen::Vector3d& v) {
    return {TaggedBound{MetricKind::BuresHelstrom, cramer_rao_bound(bh_qubit(x, v))},
            TaggedBound{MetricKind::Bkm, cramer_rao_bound(bkm_qubit(x, v))}};
}

std::vector<EllipseRecord> ellipse_field(const std::vector<Eigen::Vector2d>& points, double epsilon) {
    if (!(epsilon > 0.0)) {
        throw ValidationError("ellipse_field: epsilon must be positive");
    }
    std::vector<EllipseRecord> out;
    out.reserve(points.size());
    for (const auto& p : points) {
        const double r = p.norm();
        if (!(r < 1.0)) {
            throw ValidationError("ellipse_field: grid point outside the unit disk");
        }
        EllipseRecord rec{};
        rec.x = p.x();
        rec.z = p.y();
        rec.r = r;
        rec.orientation = std::atan2(p.y(), p.x());
        const double c = radial_coefficient(r);
        const double d = bkm_tangential_coefficient(r);
        rec.bh_radial = epsilon / std::sqrt(c);
        rec.bkm_radial = rec.bh_radial;
        rec.bh_tangential = epsilon;
        rec.bkm_tangential = epsilon / std::sqrt(d);
        const double inf = std::numeric_limits<double>::infinity();
        rec.bh_angular = r > 0.0 ? rec.bh_tangential / r : inf;
        rec.bkm_angular = r > 0.0 ? rec.bkm_tangential / r : inf;
        out.push_back(rec);
    }
    return out;
}

std::vector<Eigen::Vector2d> polar_grid(int n_radial, int n_angular, double r_max) {
    if (n_radial < 1 || n_angular < 1) {
        throw ValidationError("polar_grid: counts must be positive");
    }
    if (!(r_max > 0.0 && r_max < 1.0)) {
        throw ValidationError("polar_grid: r_max must lie in (0, 1)");
    }
    std::vector<Eigen::Vector2d> pts{Eigen::Vector2d::Zero()};
    for (int k = 1; k <= n_radial; ++k) {
        const double r = r_max * k / n_radial;
        for (int a = 0; a < n_angular; ++a) {
            const double phi = 2.0 * std::numbers::pi * a / n_angular;
            pts.emplace_back(r * std::cos(phi), r * std::sin(phi));
        }
    }
    return pts;
}

} // namespace qig
