// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace dflsim {

/// Invalid user-supplied configuration (scenario fields, type invariants).
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Base class for failures of the numerical model itself.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Scalar-diffraction breakdown: a sheet point closer than one wavelength
/// to an antenna, or a vanishing field ratio.
class SingularityError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// Quadrature failure: non-finite integrand or no convergence within the
/// refinement cap.
class QuadratureError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

} // namespace dflsim
