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

#include "qig/qstate.hpp"

namespace qig {

/// A projective measurement: dim orthonormal vectors stored as the columns of
/// a unitary matrix. Column i is the outcome |i>.
class MeasurementBasis {
  public:
    /// Rejects matrices whose Gram matrix deviates from identity by > 1e-10.
    static MeasurementBasis from_columns(const CMatrix& columns);
    static MeasurementBasis from_real(const RMatrix& columns);
    static MeasurementBasis computational(Index dim);

    Index dim() const { return v_.rows(); }
    const CMatrix& columns() const { return v_; }
    CVector vector(Index i) const { return v_.col(i); }

    /// <i|A|i> for every basis vector, computed as quadratic forms.
    RVector diagonal(const CMatrix& a) const;

    /// b (x) c, with this basis as the leading (most significant) factor.
    MeasurementBasis tensor(const MeasurementBasis& other) const;

    /// Basis {U|i>}.
    MeasurementBasis rotated(const CMatrix& unitary) const;

    /// True when every entry is real within tol.
    bool is_real(double tol = 1e-12) const;

  private:
    explicit MeasurementBasis(CMatrix v) : v_(std::move(v)) {}
    CMatrix v_;
};

/// Largest |(V^dagger V - I)_ij|.
double gram_defect(const CMatrix& columns);

} // namespace qig
