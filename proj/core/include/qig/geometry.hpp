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

#include <iosfwd>
#include <vector>

#include "qig/qstate.hpp"

/// Geometry of the BKM metric on the qubit state space. With r = sin(alpha)
/// the line element is d(alpha)^2 + F(alpha) dOmega^2, and geodesics lie in a
/// plane through the centre, so everything here works in that plane with
/// polar coordinates (alpha, phi).
namespace qig {

/// Scalar curvature of the BKM metric at Bloch radius r in (0, 1). Below
/// r = 1e-3 a series expansion replaces the closed form.
double bkm_curvature(double r);

/// F(alpha) = (sin(alpha)/2) log((1 + sin alpha)/(1 - sin alpha)).
double f_alpha(double alpha);
double f_alpha_derivative(double alpha);

struct GeodesicSample {
    double s = 0.0; ///< arc length
    double alpha = 0.0;
    double phi = 0.0;
    double alpha_dot = 0.0;
    double phi_dot = 0.0;
    double energy = 0.0;
    double momentum = 0.0;

    double r() const;
};

enum class GeodesicStop { MaxLength, Boundary, Event };

struct GeodesicPath {
    std::vector<GeodesicSample> samples;
    double energy = 0.5;  ///< E at the start; arc-length parametrization fixes 1/2
    double momentum = 0.0; ///< J at the start
    double length = 0.0;
    GeodesicStop stop = GeodesicStop::MaxLength;
    double max_energy_drift = 0.0;
    double max_momentum_drift = 0.0;
    /// Angle between the path and the radial direction at the last sample,
    /// recorded for diagnostics near the boundary.
    double final_radial_angle = 0.0;

    const GeodesicSample& back() const { return samples.back(); }
    /// length + (pi/2 - alpha_end): the analytic completion of a radial path
    /// stopped at the boundary guard.
    double extrapolated_boundary_length() const;
};

struct GeodesicOptions {
    double step = 1e-4;
    double min_step = 1e-12;
    double max_length = 10.0;
    double drift_tolerance = 1e-8;
    /// Sample every k-th accepted step (the final point is always kept).
    int sample_stride = 1;
    /// When > 0, stop as soon as |phi - phi0| reaches this value.
    double stop_phi_sweep = 0.0;
};

/// Bloch radius at which integration stops; the metric is singular at r = 1.
inline constexpr double kBoundaryGuard = 1.0 - 1e-8;

/// Integrates the geodesic leaving (alpha0, phi0) with unit tangent at angle
/// `direction` from the outward radial direction (positive turns towards
/// increasing phi), in arc length with classical RK4. Steps are halved when
/// the per-step change in E or J exceeds a fraction of the drift tolerance;
/// NumericalError if that needs a step below min_step or if the accumulated
/// drift exceeds the tolerance.
GeodesicPath geodesic_ivp(double alpha0, double phi0, double direction,
                          const GeodesicOptions& opts = {});

struct PlanePoint {
    double r = 0.0;
    double phi = 0.0;
};

struct BvpDiagnostics {
    double direction = 0.0; ///< initial tangent angle found by shooting
    double endpoint_error = 0.0;
    int sign_changes = 0; ///< in the initial shooting scan
    int iterations = 0;
};

/// Geodesic between two interior points of the plane, found by shooting on
/// the initial direction (bracketing scan, bisection, then secant). Throws
/// NumericalError when no bracket exists or the endpoint miss stays above
/// 1e-6.
GeodesicPath geodesic_bvp(const PlanePoint& p1, const PlanePoint& p2,
                          BvpDiagnostics* diagnostics = nullptr, int scan_points = 16);

/// A planar geodesic together with the plane it lives in: a sample at (r, phi)
/// sits at r (cos(phi) e1 + sin(phi) e2) in the Bloch ball.
struct SpatialGeodesic {
    GeodesicPath path;
    Eigen::Vector3d e1 = Eigen::Vector3d::UnitX();
    Eigen::Vector3d e2 = Eigen::Vector3d::UnitZ();

    Eigen::Vector3d point(const GeodesicSample& s) const;
};

SpatialGeodesic geodesic_between(const BlochVector& a, const BlochVector& b);

/// Length of the connecting geodesic; both states must be interior qubits.
double bkm_distance(const DensityMatrix& rho1, const DensityMatrix& rho2);

/// CSV with header "s,r,phi,E,J", 15 significant digits.
void write_geodesic_csv(std::ostream& out, const GeodesicPath& path);

} // namespace qig
