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

#include <complex>
#include <cstddef>
#include <functional>

#include <Eigen/Dense>

#include "qig/error.hpp"

/// Quantum state primitives: density matrices, Bloch vectors, tangent
/// vectors, Kronecker powers and Hermitian matrix functions.
namespace qig {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using RMatrix = Eigen::MatrixXd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;
using Index = Eigen::Index;

/// States with an eigenvalue below this are treated as lying on the boundary
/// of state space by every log- or inverse-dependent operation.
inline constexpr double kEpsInterior = 1e-9;

/// Tolerance on Hermiticity and unit trace for states and tangent vectors.
inline constexpr double kStateTolerance = 1e-12;

/// Largest Hilbert-space dimension any operation will build (12 qubits).
inline constexpr Index kMaxDim = 4096;

/// sigma_x, sigma_y, sigma_z.
const Eigen::Matrix2cd& pauli(int axis);

/// Maximum absolute entry of A - A^dagger.
double hermiticity_defect(const CMatrix& a);

class DensityMatrix {
  public:
    /// Validates Hermiticity, unit trace and positivity, then stores the
    /// exactly-symmetrized matrix.
    static DensityMatrix from_matrix(const CMatrix& m, double tol = kStateTolerance);
    static DensityMatrix maximally_mixed(Index dim);
    /// |psi><psi| for a normalized pure state.
    static DensityMatrix pure(const CVector& psi);

    Index dim() const { return m_.rows(); }
    const CMatrix& matrix() const { return m_; }
    Complex operator()(Index i, Index j) const { return m_(i, j); }

    /// Ascending eigenvalues.
    RVector eigenvalues() const;
    double min_eigenvalue() const;
    bool is_interior(double eps = kEpsInterior) const { return min_eigenvalue() >= eps; }

  private:
    explicit DensityMatrix(CMatrix m) : m_(std::move(m)) {}
    CMatrix m_;
};

/// Real 3-vector of Bloch coordinates; construction rejects |x| > 1 + 1e-12.
class BlochVector {
  public:
    BlochVector() : x_(Eigen::Vector3d::Zero()) {}
    explicit BlochVector(const Eigen::Vector3d& x);
    BlochVector(double x1, double x2, double x3) : BlochVector(Eigen::Vector3d(x1, x2, x3)) {}

    const Eigen::Vector3d& coords() const { return x_; }
    double operator[](int i) const { return x_[i]; }
    double norm() const { return x_.norm(); }
    bool is_interior() const { return norm() < 1.0; }

  private:
    Eigen::Vector3d x_;
};

/// Traceless Hermitian displacement d(rho) at some state.
class TangentVector {
  public:
    static TangentVector from_matrix(const CMatrix& m, double tol = kStateTolerance);
    /// dx . sigma / 2, the image of a Bloch displacement.
    static TangentVector from_bloch(const Eigen::Vector3d& dx);

    Index dim() const { return m_.rows(); }
    const CMatrix& matrix() const { return m_; }

  private:
    explicit TangentVector(CMatrix m) : m_(std::move(m)) {}
    CMatrix m_;
};

DensityMatrix bloch_to_density(const BlochVector& x);
/// x_i = Tr[rho sigma_i]. Requires a qubit.
BlochVector density_to_bloch(const DensityMatrix& rho);

CMatrix kron(const CMatrix& a, const CMatrix& b);

/// rho^{(x)N}. Rejects results larger than kMaxDim.
DensityMatrix tensor_power(const DensityMatrix& rho, int copies);

/// Derivative of rho^{(x)N} along d(rho) (Leibniz rule).
TangentVector product_tangent(const DensityMatrix& rho, const TangentVector& drho, int copies);

struct HermitianEigen {
    RVector values;  ///< ascending
    CMatrix vectors; ///< orthonormal columns
};

/// Rejects inputs that are not Hermitian within 1e-10.
HermitianEigen eig_hermitian(const CMatrix& h);

/// V f(Lambda) V^dagger.
CMatrix hermitian_function(const CMatrix& h, const std::function<double(double)>& f);

/// Natural logarithm of an interior state. Throws BoundaryStateError when an
/// eigenvalue falls below kEpsInterior.
CMatrix matrix_log(const DensityMatrix& rho);

CMatrix matrix_exp_hermitian(const CMatrix& h);

/// exp(-i H t) for Hermitian H.
CMatrix unitary_evolution(const CMatrix& h, double t);

} // namespace qig
