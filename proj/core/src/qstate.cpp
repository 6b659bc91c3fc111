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

#include "qig/qstate.hpp"

#include <array>
#include <cmath>
#include <string>

#include <unsupported/Eigen/KroneckerProduct>

namespace qig {

namespace {

constexpr double kEigTolerance = 1e-10;

const std::array<Eigen::Matrix2cd, 3>& pauli_table() {
    static const std::array<Eigen::Matrix2cd, 3> table = [] {
        const Complex i{0.0, 1.0};
        std::array<Eigen::Matrix2cd, 3> p;
        p[0] << 0, 1, 1, 0;
        p[1] << 0, -i, i, 0;
        p[2] << 1, 0, 0, -1;
        return p;
    }();
    return table;
}

double scale_of(const CMatrix& m) { return std::max(1.0, m.cwiseAbs().maxCoeff()); }

Index checked_power(Index dim, int copies) {
    if (copies < 1) {
        throw ValidationError("number of copies must be >= 1, got " + std::to_string(copies));
    }
    Index total = 1;
    for (int k = 0; k < copies; ++k) {
        total *= dim;
        if (total > kMaxDim) {
            throw ValidationError("tensor power exceeds the dimension cap of " +
                                  std::to_string(kMaxDim));
        }
    }
    return total;
}

} // namespace

const Eigen::Matrix2cd& pauli(int axis) {
    if (axis < 0 || axis > 2) {
        throw ValidationError("Pauli axis must be 0, 1 or 2");
    }
    return pauli_table()[static_cast<std::size_t>(axis)];
}

double hermiticity_defect(const CMatrix& a) {
    if (a.rows() != a.cols()) {
        throw ValidationError("matrix is not square");
    }
    if (a.size() == 0) {
        return 0.0;
    }
    return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

// ---------------------------------------------------------------- DensityMatrix

DensityMatrix DensityMatrix::from_matrix(const CMatrix& m, double tol) {
    if (m.rows() == 0 || m.rows() != m.cols()) {
        throw ValidationError("density matrix must be square and non-empty");
    }
    if (m.rows() > kMaxDim) {
        throw ValidationError("density matrix dimension exceeds the cap of " +
                              std::to_string(kMaxDim));
    }
    if (hermiticity_defect(m) > tol) {
        throw ValidationError("density matrix is not Hermitian");
    }
    const Complex tr = m.trace();
    if (std::abs(tr - Complex{1.0, 0.0}) > tol) {
        throw ValidationError("density matrix trace differs from 1 (trace = " +
                              std::to_string(tr.real()) + ")");
    }
    CMatrix sym = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(sym, Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < -tol) {
        throw ValidationError("density matrix has a negative eigenvalue");
    }
    return DensityMatrix(std::move(sym));
}

DensityMatrix DensityMatrix::maximally_mixed(Index dim) {
    if (dim < 1 || dim > kMaxDim) {
        throw ValidationError("invalid dimension " + std::to_string(dim));
    }
    return DensityMatrix(CMatrix::Identity(dim, dim) / static_cast<double>(dim));
}

DensityMatrix DensityMatrix::pure(const CVector& psi) {
    if (std::abs(psi.squaredNorm() - 1.0) > kStateTolerance * 10) {
        throw ValidationError("pure state vector is not normalized");
    }
    return from_matrix(psi * psi.adjoint());
}

RVector DensityMatrix::eigenvalues() const {
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(m_, Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

double DensityMatrix::min_eigenvalue() const { return eigenvalues().minCoeff(); }

// ---------------------------------------------------------------- BlochVector

BlochVector::BlochVector(const Eigen::Vector3d& x) : x_(x) {
    if (!x.allFinite()) {
        throw ValidationError("Bloch vector has non-finite components");
    }
    if (x.norm() > 1.0 + kStateTolerance) {
        throw ValidationError("Bloch vector norm " + std::to_string(x.norm()) + " exceeds 1");
    }
}

// ---------------------------------------------------------------- TangentVector

TangentVector TangentVector::from_matrix(const CMatrix& m, double tol) {
    if (m.rows() == 0 || m.rows() != m.cols()) {
        throw ValidationError("tangent vector must be square and non-empty");
    }
    const double scaled = tol * scale_of(m);
    if (hermiticity_defect(m) > scaled) {
        throw ValidationError("tangent vector is not Hermitian");
    }
    if (std::abs(m.trace()) > scaled) {
        throw ValidationError("tangent vector is not traceless");
    }
    return TangentVector(0.5 * (m + m.adjoint()));
}

TangentVector TangentVector::from_bloch(const Eigen::Vector3d& dx) {
    CMatrix m = 0.5 * (dx[0] * pauli(0) + dx[1] * pauli(1) + dx[2] * pauli(2));
    return TangentVector(std::move(m));
}

// ---------------------------------------------------------------- conversions

DensityMatrix bloch_to_density(const BlochVector& x) {
    CMatrix m = Eigen::Matrix2cd::Identity();
    for (int k = 0; k < 3; ++k) {
        m += x[k] * pauli(k);
    }
    return DensityMatrix::from_matrix(0.5 * m);
}

BlochVector density_to_bloch(const DensityMatrix& rho) {
    if (rho.dim() != 2) {
        throw ValidationError("density_to_bloch requires a qubit state, got dim " +
                              std::to_string(rho.dim()));
    }
    Eigen::Vector3d x;
    for (int k = 0; k < 3; ++k) {
        x[k] = (rho.matrix() * pauli(k)).trace().real();
    }
    return BlochVector(x);
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    return Eigen::kroneckerProduct(a, b).eval();
}

DensityMatrix tensor_power(const DensityMatrix& rho, int copies) {
    checked_power(rho.dim(), copies);
    CMatrix acc = rho.matrix();
    for (int k = 1; k < copies; ++k) {
        acc = kron(acc, rho.matrix());
    }
    return DensityMatrix::from_matrix(acc, 1e-10);
}

TangentVector product_tangent(const DensityMatrix& rho, const TangentVector& drho, int copies) {
    if (rho.dim() != drho.dim()) {
        throw ValidationError("state and tangent dimensions differ");
    }
    checked_power(rho.dim(), copies);
    CMatrix tangent = drho.matrix();
    CMatrix power = rho.matrix();
    for (int k = 1; k < copies; ++k) {
        tangent = (kron(tangent, rho.matrix()) + kron(power, drho.matrix())).eval();
        power = kron(power, rho.matrix());
    }
    return TangentVector::from_matrix(tangent);
}

// ---------------------------------------------------------------- matrix functions

HermitianEigen eig_hermitian(const CMatrix& h) {
    if (h.rows() == 0 || h.rows() != h.cols()) {
        throw ValidationError("eig_hermitian needs a square non-empty matrix");
    }
    if (hermiticity_defect(h) > kEigTolerance * scale_of(h)) {
        throw ValidationError("eig_hermitian: matrix is not Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(0.5 * (h + h.adjoint()));
    if (solver.info() != Eigen::Success) {
        throw NumericalError("Hermitian eigendecomposition did not converge");
    }
    return {solver.eigenvalues(), solver.eigenvectors()};
}

CMatrix hermitian_function(const CMatrix& h, const std::function<double(double)>& f) {
    const HermitianEigen e = eig_hermitian(h);
    RVector fl(e.values.size());
    for (Index i = 0; i < e.values.size(); ++i) {
        fl[i] = f(e.values[i]);
    }
    return e.vectors * fl.asDiagonal() * e.vectors.adjoint();
}

CMatrix matrix_log(const DensityMatrix& rho) {
    const HermitianEigen e = eig_hermitian(rho.matrix());
    if (e.values.minCoeff() < kEpsInterior) {
        throw BoundaryStateError("matrix_log: boundary state (smallest eigenvalue " +
                                 std::to_string(e.values.minCoeff()) + ")");
    }
    const RVector logs = e.values.array().log().matrix();
    return e.vectors * logs.asDiagonal() * e.vectors.adjoint();
}

CMatrix matrix_exp_hermitian(const CMatrix& h) {
    return hermitian_function(h, [](double x) { return std::exp(x); });
}

CMatrix unitary_evolution(const CMatrix& h, double t) {
    const HermitianEigen e = eig_hermitian(h);
    CVector phases(e.values.size());
    for (Index i = 0; i < e.values.size(); ++i) {
        phases[i] = std::polar(1.0, -e.values[i] * t);
    }
    return e.vectors * phases.asDiagonal() * e.vectors.adjoint();
}

} // namespace qig
