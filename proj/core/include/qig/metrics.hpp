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

#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "qig/entropy.hpp"
#include "qig/measurement_basis.hpp"
#include "qig/qstate.hpp"

namespace qig {

/// Symmetric logarithmic derivative: the Hermitian L with (rho L + L rho)/2 = d(rho).
struct Sld {
    CMatrix L;
};

/// Symmetric real quadratic form over labelled coordinates.
struct QuadraticForm {
    RMatrix g;
    std::vector<std::string> coords;

    double operator()(const RVector& v) const { return v.dot(g * v); }
};

/// Classical Fisher-Rao form sum_i dp_i^2 / p_i.
double fisher_rao(const ProbabilityDistribution& p, const RVector& dp);

/// Fisher-Rao form of the outcome statistics in basis b:
///   sum_i <i|d(rho)|i>^2 / <i|rho|i>.
double fisher_rao_in_basis(const DensityMatrix& rho, const TangentVector& drho,
                           const MeasurementBasis& basis);

Sld solve_sld(const DensityMatrix& rho, const TangentVector& drho);

/// Bures-Helstrom metric Tr[rho L L] (no factor 1/4).
double bh_metric(const DensityMatrix& rho, const TangentVector& drho);

/// Eigenbasis of the SLD, the measurement that attains bh_metric.
MeasurementBasis sld_eigenbasis(const DensityMatrix& rho, const TangentVector& drho);

/// dr^2/(1-r^2) + r^2 (dtheta^2 + sin^2(theta) dphi^2). theta defaults to the
/// equatorial plane, where the angular term reduces to r^2 (dtheta^2 + dphi^2).
double bh_qubit_polar(double r, double dr, double dtheta, double dphi,
                      double theta = std::numbers::pi / 2);

/// C(r) = 1/(1-r^2), the radial coefficient shared by both qubit metrics.
double radial_coefficient(double r);
/// D(r) = log((1+r)/(1-r)) / (2r), with D(0) = 1.
double bkm_tangential_coefficient(double r);

/// g_ij = C x^i x^j / r^2 + D (delta_ij - x^i x^j / r^2) in Bloch coordinates.
QuadraticForm bkm_qubit_form(const BlochVector& x);
double bkm_qubit(const BlochVector& x, const Eigen::Vector3d& dx);

/// Cartesian Bloch form of the BH metric: C on the radial projector, 1 on the
/// tangential one.
QuadraticForm bh_qubit_form(const BlochVector& x);
double bh_qubit(const BlochVector& x, const Eigen::Vector3d& dx);

/// Coordinates lambda -> rho(lambda) around a base point.
struct Chart {
    std::function<DensityMatrix(const RVector&)> map;
    RVector origin;
    std::vector<std::string> labels;

    DensityMatrix base() const { return map(origin); }
};

/// Bloch coordinates (x1, x2, x3) around x.
Chart bloch_chart(const BlochVector& x);

/// Central-difference Hessian of lambda -> S(rho(origin) || rho(lambda)) at the
/// origin, with one Richardson level. The step shrinks until the stencil stays
/// in the interior; ValidationError if it cannot.
QuadraticForm bkm_hessian_numeric(const Chart& chart, double h = 1e-4);

struct AdditivityCheck {
    double lhs; ///< (1/N) g_BH(rho^{(x)N}, d rho^{(x)N})
    double rhs; ///< g_BH(rho, d rho)
};

AdditivityCheck bh_additivity_check(const DensityMatrix& rho, const TangentVector& drho, int copies);

/// Variance lower bound 1/g(v,v).
double cramer_rao_bound(double g_vv);

enum class MetricKind { BuresHelstrom, Bkm };

struct TaggedBound {
    MetricKind metric;
    double variance;
};

/// Both bounds for a qubit tangent v at x; the BKM bound never exceeds the BH one.
std::pair<TaggedBound, TaggedBound> qubit_cramer_rao_bounds(const BlochVector& x,
                                                            const Eigen::Vector3d& v);

/// Unit ball {v : g(v,v) = eps^2} of both metrics at a point of the x-z slice
/// of the Bloch ball. Axes are aligned with the radial and tangential
/// directions; "angular" semi-axes are measured in d(phi) rather than in
/// Bloch-plane length.
struct EllipseRecord {
    double x;
    double z;
    double r;
    double orientation; ///< angle of the radial axis, atan2(z, x)
    double bh_radial;
    double bh_tangential;
    double bkm_radial;
    double bkm_tangential;
    double bh_angular;
    double bkm_angular;
};

/// Rejects points with x^2 + z^2 >= 1.
std::vector<EllipseRecord> ellipse_field(const std::vector<Eigen::Vector2d>& points, double epsilon);

/// Polar grid of the slice: the centre plus rings at radii k r_max / n_radial
/// (k = 1..n_radial), each with n_angular equally spaced points.
std::vector<Eigen::Vector2d> polar_grid(int n_radial, int n_angular, double r_max);

} // namespace qig
