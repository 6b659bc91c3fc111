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

#include "qig/measurement_basis.hpp"

#include <string>

namespace qig {

namespace {
constexpr double kGramTolerance = 1e-10;
}

double gram_defect(const CMatrix& columns) {
    const CMatrix gram = columns.adjoint() * columns;
    return (gram - CMatrix::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
}

MeasurementBasis MeasurementBasis::from_columns(const CMatrix& columns) {
    if (columns.rows() == 0 || columns.rows() != columns.cols()) {
        throw ValidationError("a measurement basis needs dim vectors of length dim");
    }
    if (columns.rows() > kMaxDim) {
        throw ValidationError("basis dimension exceeds the cap of " + std::to_string(kMaxDim));
    }
    if (gram_defect(columns) > kGramTolerance) {
        throw ValidationError("basis vectors are not orthonormal");
    }
    return MeasurementBasis(columns);
}

MeasurementBasis MeasurementBasis::from_real(const RMatrix& columns) {
    return from_columns(columns.cast<Complex>());
}

MeasurementBasis MeasurementBasis::computational(Index dim) {
    if (dim < 1 || dim > kMaxDim) {
        throw ValidationError("invalid basis dimension " + std::to_string(dim));
    }
    return MeasurementBasis(CMatrix::Identity(dim, dim));
}

RVector MeasurementBasis::diagonal(const CMatrix& a) const {
    if (a.rows() != dim() || a.cols() != dim()) {
        throw ValidationError("operator and basis dimensions differ");
    }
    RVector d(dim());
    for (Index i = 0; i < dim(); ++i) {
        d[i] = v_.col(i).dot(a * v_.col(i)).real();
    }
    return d;
}

MeasurementBasis MeasurementBasis::tensor(const MeasurementBasis& other) const {
    return from_columns(kron(v_, other.v_));
}

MeasurementBasis MeasurementBasis::rotated(const CMatrix& unitary) const {
    if (unitary.rows() != dim() || unitary.cols() != dim()) {
        throw ValidationError("rotation and basis dimensions differ");
    }
    return from_columns(unitary * v_);
}

bool MeasurementBasis::is_real(double tol) const {
    return v_.imag().cwiseAbs().maxCoeff() <= tol;
}

} // namespace qig
