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

#include "qig/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <string>

namespace qig {

namespace {

constexpr double kPi = std::numbers::pi;
const double kAlphaGuard = std::asin(kBoundaryGuard);

struct State {
    double a; // alpha
    double p; // phi
    double u; // d alpha / ds
    double w; // d phi / ds
};

// atanh(sin x), cos x and tan x for x in [0, pi/2). Above pi/4 everything is
// written in terms of c = pi/2 - x, since 1 - sin x loses digits near the
// boundary.
struct Trig {
    double s;
    double atanh_s;
    double cos;
    double tan;
};

Trig trig(double x) {
    if (x <= 0.25 * kPi) {
        const double s = std::sin(x);
        return {s, std::atanh(s), std::cos(x), std::tan(x)};
    }
    const double c = 0.5 * kPi - x;
    const double half = std::sin(0.5 * c);
    const double one_minus_s = 2.0 * half * half;
    const double s = 1.0 - one_minus_s;
    const double at = 0.5 * (std::log1p(s) - std::log(one_minus_s));
    return {s, at, std::sin(c), std::cos(c) / std::sin(c)};
}

// F and F' without argument checks; F is even in alpha, F' odd.
double f_raw(double a) {
    const Trig t = trig(std::abs(a));
    return t.s * t.atanh_s;
}

double fprime_raw(double a) {
    const Trig t = trig(std::abs(a));
    const double v = t.cos * t.atanh_s + t.tan;
    return a < 0.0 ? -v : v;
}

double energy_of(const State& y) { return 0.5 * (y.u * y.u + f_raw(y.a) * y.w * y.w); }
double momentum_of(const State& y) { return f_raw(y.a) * y.w; }

State derivative(const State& y) {
    const double fp = fprime_raw(y.a);
    const double wdot = (y.w == 0.0) ? 0.0 : -fp / f_raw(y.a) * y.u * y.w;
    return {y.u, y.w, 0.5 * fp * y.w * y.w, wdot};
}

State axpy(const State& y, double h, const State& k) {
    return {y.a + h * k.a, y.p + h * k.p, y.u + h * k.u, y.w + h * k.w};
}

State rk4(const State& y, double h) {
    const State k1 = derivative(y);
    const State k2 = derivative(axpy(y, 0.5 * h, k1));
    const State k3 = derivative(axpy(y, 0.5 * h, k2));
    const State k4 = derivative(axpy(y, h, k3));
    return {y.a + h / 6.0 * (k1.a + 2.0 * k2.a + 2.0 * k3.a + k4.a),
            y.p + h / 6.0 * (k1.p + 2.0 * k2.p + 2.0 * k3.p + k4.p),
            y.u + h / 6.0 * (k1.u + 2.0 * k2.u + 2.0 * k3.u + k4.u),
            y.w + h / 6.0 * (k1.w + 2.0 * k2.w + 2.0 * k3.w + k4.w)};
}

bool finite(const State& y) {
    return std::isfinite(y.a) && std::isfinite(y.p) && std::isfinite(y.u) && std::isfinite(y.w);
}

// Radial paths (J = 0) pass straight through the centre: continue on the
// opposite ray instead of letting alpha go negative.
State reflect_through_centre(State y) {
    if (y.a < 0.0 && y.w == 0.0) {
        y.a = -y.a;
        y.p += kPi;
        y.u = -y.u;
    }
    return y;
}

// Smallest tau in (0, h] with event(rk4(y, tau)) >= 0, given event(y) < 0.
template <typename Event>
double locate_event(const State& y, double h, Event event) {
    double lo = 0.0;
    double hi = h;
    for (int it = 0; it < 200 && hi - lo > 1e-17; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (event(rk4(y, mid)) >= 0.0) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return hi;
}

GeodesicSample make_sample(double s, const State& y) {
    return {s, y.a, y.p, y.u, y.w, energy_of(y), momentum_of(y)};
}

double wrap_angle(double x) {
    x = std::fmod(x + kPi, 2.0 * kPi);
    if (x < 0.0) {
        x += 2.0 * kPi;
    }
    return x - kPi;
}

} // namespace

double bkm_curvature(double r) {
    if (!(r > 0.0 && r < 1.0)) {
        throw ValidationError("bkm_curvature: r must lie in (0, 1), got " + std::to_string(r));
    }
    if (r < 1e-3) {
        const double r2 = r * r;
        return -r2 * (10.0 / 9.0 + r2 * (134.0 / 135.0 + r2 * (4378.0 / 4725.0)));
    }
    const double r2 = r * r;
    if (r < 0.3) {
        // same expression with l = 2r(1 + a): the O(1) terms of the numerator
        // cancel analytically
        double a = 0.0;
        double p = 1.0;
        for (int k = 1; k <= 40; ++k) {
            p *= r2;
            a += p / (2 * k + 1);
        }
        const double b = a * a + 2.0 * r2 * a + 2.0 * r2 * a * a - 3.0 * r2 * r2 * (1.0 + a) * (1.0 + a);
        return b / (2.0 * r2 * (1.0 - r2) * (1.0 + a) * (1.0 + a));
    }
    const double l = std::log((1.0 + r) / (1.0 - r));
    const double num = 4.0 * r2 - 4.0 * r * (1.0 + r2) * l + (1.0 + 2.0 * r2 - 3.0 * r2 * r2) * l * l;
    return num / (2.0 * r2 * (1.0 - r2) * l * l);
}

double f_alpha(double alpha) {
    if (!(alpha >= 0.0 && alpha < 0.5 * kPi)) {
        throw ValidationError("f_alpha: alpha must lie in [0, pi/2)");
    }
    return f_raw(alpha);
}

double f_alpha_derivative(double alpha) {
    if (!(alpha >= 0.0 && alpha < 0.5 * kPi)) {
        throw ValidationError("f_alpha_derivative: alpha must lie in [0, pi/2)");
    }
    return fprime_raw(alpha);
}

double GeodesicSample::r() const { return std::sin(alpha); }

double GeodesicPath::extrapolated_boundary_length() const {
    return length + (0.5 * kPi - samples.back().alpha);
}

GeodesicPath geodesic_ivp(double alpha0, double phi0, double direction, const GeodesicOptions& opts) {
    if (!(alpha0 >= 0.0 && alpha0 < kAlphaGuard)) {
        throw ValidationError("geodesic_ivp: starting point must be interior");
    }
    if (!(opts.step > 0.0) || !(opts.min_step > 0.0) || opts.min_step > opts.step) {
        throw ValidationError("geodesic_ivp: invalid step settings");
    }
    if (!(opts.max_length >= 0.0) || opts.sample_stride < 1) {
        throw ValidationError("geodesic_ivp: invalid length or sampling settings");
    }

    State y{alpha0, phi0, std::cos(direction), 0.0};
    if (alpha0 == 0.0) {
        // polar chart degenerates at the centre: leave radially
        if (y.u < 0.0) {
            y.p += kPi;
        }
        y.u = 1.0;
    } else if (std::abs(std::sin(direction)) > 1e-12) {
        y.w = std::sin(direction) / std::sqrt(f_raw(alpha0));
    } else {
        y.u = y.u < 0.0 ? -1.0 : 1.0;
    }

    GeodesicPath path;
    path.energy = energy_of(y);
    path.momentum = momentum_of(y);
    path.samples.push_back(make_sample(0.0, y));

    const double step_tol = opts.drift_tolerance * 1e-5;
    const auto boundary_event = [](const State& z) {
        return finite(z) ? z.a - kAlphaGuard : 1.0;
    };
    const auto sweep_event = [&](const State& z) { return std::abs(z.p - phi0) - opts.stop_phi_sweep; };

    double s = 0.0;
    double h = opts.step;
    long accepted = 0;
    while (true) {
        if (s >= opts.max_length) {
            path.stop = GeodesicStop::MaxLength;
            break;
        }
        const double hh = std::min(h, opts.max_length - s);
        State next = rk4(y, hh);
        double taken = hh;
        GeodesicStop stop = GeodesicStop::MaxLength;
        bool done = false;
        if (!finite(next) || next.a >= kAlphaGuard) {
            taken = locate_event(y, hh, boundary_event);
            next = rk4(y, taken);
            next.a = std::min(next.a, kAlphaGuard);
            stop = GeodesicStop::Boundary;
            done = true;
        } else if (opts.stop_phi_sweep > 0.0 && sweep_event(next) >= 0.0) {
            taken = locate_event(y, hh, sweep_event);
            next = rk4(y, taken);
            stop = GeodesicStop::Event;
            done = true;
        }
        const bool bad = !finite(next) || (next.a <= 0.0 && y.w != 0.0) ||
                         std::abs(energy_of(next) - energy_of(y)) > step_tol ||
                         std::abs(momentum_of(next) - momentum_of(y)) >
                             step_tol * std::max(1.0, std::abs(path.momentum));
        if (bad) {
            h *= 0.5;
            if (h < opts.min_step) {
                throw NumericalError("geodesic_ivp: step fell below the minimum while holding E and J");
            }
            continue;
        }
        y = reflect_through_centre(next);
        s += taken;
        ++accepted;
        path.max_energy_drift = std::max(path.max_energy_drift, std::abs(energy_of(y) - path.energy));
        path.max_momentum_drift =
            std::max(path.max_momentum_drift, std::abs(momentum_of(y) - path.momentum));
        if (done || accepted % opts.sample_stride == 0 || s >= opts.max_length) {
            path.samples.push_back(make_sample(s, y));
        }
        if (done) {
            path.stop = stop;
            break;
        }
        h = std::min(opts.step, 2.0 * h);
    }
    if (path.samples.back().s != s) {
        path.samples.push_back(make_sample(s, y));
    }
    path.length = s;
    path.final_radial_angle = std::atan2(std::sqrt(f_raw(y.a)) * std::abs(y.w), y.u);
    return path;
}

GeodesicPath geodesic_bvp(const PlanePoint& p1, const PlanePoint& p2, BvpDiagnostics* diagnostics,
                          int scan_points) {
    for (const PlanePoint* p : {&p1, &p2}) {
        if (!(p->r >= 0.0 && p->r < kBoundaryGuard) || !std::isfinite(p->phi)) {
            throw ValidationError("geodesic_bvp: endpoints must be interior points");
        }
    }
    if (scan_points < 4) {
        throw ValidationError("geodesic_bvp: scan needs at least 4 directions");
    }
    const double a1 = std::asin(p1.r);
    const double a2 = std::asin(p2.r);
    const double delta = wrap_angle(p2.phi - p1.phi);
    BvpDiagnostics diag;

    const auto finish = [&](GeodesicPath path, double direction) {
        const GeodesicSample& end = path.back();
        const Eigen::Vector2d got(end.r() * std::cos(end.phi), end.r() * std::sin(end.phi));
        const Eigen::Vector2d want(p2.r * std::cos(p2.phi), p2.r * std::sin(p2.phi));
        diag.direction = direction;
        diag.endpoint_error = (got - want).norm();
        if (diagnostics != nullptr) {
            *diagnostics = diag;
        }
        if (diag.endpoint_error > 1e-6) {
            throw NumericalError("geodesic_bvp: endpoint miss " + std::to_string(diag.endpoint_error) +
                                 " exceeds 1e-6");
        }
        return path;
    };

    GeodesicOptions radial;
    if (p1.r == 0.0) {
        radial.max_length = a2;
        return finish(geodesic_ivp(0.0, p2.phi, 0.0, radial), 0.0);
    }
    if (p2.r == 0.0 || std::abs(delta) < 1e-12) {
        const double dir = (p2.r == 0.0 || a2 < a1) ? kPi : 0.0;
        radial.max_length = std::abs(a2 - a1);
        return finish(geodesic_ivp(a1, p1.phi, dir, radial), dir);
    }
    if (kPi - std::abs(delta) < 1e-12) {
        radial.max_length = a1 + a2;
        return finish(geodesic_ivp(a1, p1.phi, kPi, radial), kPi);
    }

    const double sign = delta > 0.0 ? 1.0 : -1.0;
    GeodesicOptions shoot;
    shoot.stop_phi_sweep = std::abs(delta);
    shoot.max_length = 50.0;
    shoot.sample_stride = 1 << 30;

    // alpha at the moment the sweep is reached, minus the target alpha.
    // Paths that hit the boundary first overshoot outward: report a positive miss.
    const auto miss = [&](double psi) {
        const GeodesicPath path = geodesic_ivp(a1, p1.phi, sign * psi, shoot);
        if (path.stop == GeodesicStop::Event) {
            return path.back().alpha - a2;
        }
        return 1.0 + (0.5 * kPi - a2);
    };

    std::vector<double> psis;
    std::vector<double> misses;
    for (int k = 1; k < scan_points; ++k) {
        psis.push_back(kPi * k / scan_points);
        misses.push_back(miss(psis.back()));
    }
    int bracket = -1;
    for (std::size_t k = 0; k + 1 < misses.size(); ++k) {
        if ((misses[k] > 0.0) != (misses[k + 1] > 0.0)) {
            ++diag.sign_changes;
            if (bracket < 0) {
                bracket = static_cast<int>(k);
            }
        }
    }
    double lo, hi, mlo, mhi;
    if (bracket >= 0) {
        lo = psis[bracket];
        hi = psis[bracket + 1];
        mlo = misses[bracket];
        mhi = misses[bracket + 1];
    } else {
        // the root may sit closer to a radial direction than the scan reached
        lo = psis.front();
        mlo = misses.front();
        hi = psis.back();
        mhi = misses.back();
        double edge = kPi / scan_points;
        for (int it = 0; it < 40 && (mlo > 0.0) == (mhi > 0.0); ++it) {
            edge *= 0.5;
            if (mlo <= 0.0) {
                hi = lo;
                mhi = mlo;
                lo = edge;
                mlo = miss(lo);
            } else {
                lo = hi;
                mlo = mhi;
                hi = kPi - edge;
                mhi = miss(hi);
            }
        }
        if ((mlo > 0.0) == (mhi > 0.0)) {
            throw NumericalError("geodesic_bvp: shooting could not bracket the target");
        }
        diag.sign_changes = 1;
    }

    // Bisection until the miss is in the smooth regime, then secant.
    double psi = 0.5 * (lo + hi);
    double m = miss(psi);
    for (diag.iterations = 0; diag.iterations < 200; ++diag.iterations) {
        if (std::abs(m) < 1e-12 || hi - lo < 1e-15) {
            break;
        }
        if ((m > 0.0) == (mlo > 0.0)) {
            lo = psi;
            mlo = m;
        } else {
            hi = psi;
            mhi = m;
        }
        const bool smooth = std::abs(mlo) < 0.5 && std::abs(mhi) < 0.5 && hi - lo < 1e-3;
        double next = 0.5 * (lo + hi);
        if (smooth && mhi != mlo) {
            const double secant = lo - mlo * (hi - lo) / (mhi - mlo);
            if (secant > lo && secant < hi) {
                next = secant;
            }
        }
        psi = next;
        m = miss(psi);
    }

    GeodesicOptions final_opts = shoot;
    final_opts.sample_stride = 1;
    GeodesicPath path = geodesic_ivp(a1, p1.phi, sign * psi, final_opts);
    if (path.stop != GeodesicStop::Event) {
        throw NumericalError("geodesic_bvp: converged direction does not reach the target");
    }
    return finish(std::move(path), sign * psi);
}

Eigen::Vector3d SpatialGeodesic::point(const GeodesicSample& s) const {
    return s.r() * (std::cos(s.phi) * e1 + std::sin(s.phi) * e2);
}

SpatialGeodesic geodesic_between(const BlochVector& a, const BlochVector& b) {
    if (!(a.norm() < kBoundaryGuard) || !(b.norm() < kBoundaryGuard)) {
        throw BoundaryStateError("geodesic_between: endpoints must be interior");
    }
    SpatialGeodesic out;
    const Eigen::Vector3d& va = a.coords();
    const Eigen::Vector3d& vb = b.coords();
    if (va.norm() > 0.0) {
        out.e1 = va.normalized();
    } else if (vb.norm() > 0.0) {
        out.e1 = vb.normalized();
    }
    Eigen::Vector3d perp = vb - vb.dot(out.e1) * out.e1;
    if (perp.norm() > 1e-14 * std::max(1.0, vb.norm())) {
        out.e2 = perp.normalized();
    } else {
        // any unit vector orthogonal to e1
        const Eigen::Vector3d trial =
            std::abs(out.e1.x()) < 0.9 ? Eigen::Vector3d::UnitX() : Eigen::Vector3d::UnitY();
        out.e2 = (trial - trial.dot(out.e1) * out.e1).normalized();
    }
    const PlanePoint p1{va.norm(), 0.0};
    const PlanePoint p2{vb.norm(), std::atan2(vb.dot(out.e2), vb.dot(out.e1))};
    out.path = geodesic_bvp(p1, p2);
    return out;
}

double bkm_distance(const DensityMatrix& rho1, const DensityMatrix& rho2) {
    if (rho1.dim() != 2 || rho2.dim() != 2) {
        throw ValidationError("bkm_distance: qubit states required");
    }
    if (!rho1.is_interior() || !rho2.is_interior()) {
        throw BoundaryStateError("bkm_distance: states must be interior");
    }
    const BlochVector a = density_to_bloch(rho1);
    const BlochVector b = density_to_bloch(rho2);
    if ((a.coords() - b.coords()).norm() == 0.0) {
        return 0.0;
    }
    return geodesic_between(a, b).path.length;
}

void write_geodesic_csv(std::ostream& out, const GeodesicPath& path) {
    out << "s,r,phi,E,J\n";
    char buf[160];
    for (const GeodesicSample& s : path.samples) {
        std::snprintf(buf, sizeof buf, "%.15g,%.15g,%.15g,%.15g,%.15g\n", s.s, s.r(), s.phi, s.energy,
                      s.momentum);
        out << buf;
    }
}

} // namespace qig
