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

#include <stdexcept>
#include <string>

namespace qig {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// An input violated a documented precondition (bad dimension, radius out of
/// range, non-Hermitian matrix, ...).
class ValidationError : public Error {
  public:
    using Error::Error;
};

/// A log- or inverse-dependent operation was handed a state with an
/// eigenvalue below the interior threshold.
class BoundaryStateError : public ValidationError {
  public:
    using ValidationError::ValidationError;
};

/// An iterative procedure failed to converge or to meet its tolerance.
class NumericalError : public Error {
  public:
    using Error::Error;
};

} // namespace qig
