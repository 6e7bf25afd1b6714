#pragma once

#include <stdexcept>
#include <string>

namespace hypersob {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A parameter lies outside the range a construction or check admits.
class InvalidParameter : public Error {
public:
    using Error::Error;
};

/// A lower hypergeometric parameter is 0, -1, -2, ...
class NonPositiveIntegerDenominator : public InvalidParameter {
public:
    using InvalidParameter::InvalidParameter;
};

/// The requested family member would come out with degree below n.
class DegenerateFamily : public InvalidParameter {
public:
    using InvalidParameter::InvalidParameter;
};

/// (x, t) or z lies outside the region where an identity is asserted.
class DomainViolation : public Error {
public:
    using Error::Error;
};

/// A quadrature rule is not exact for the requested polynomial degree.
class RuleTooShort : public Error {
public:
    using Error::Error;
};

/// Tridiagonal eigensolver hit its iteration cap.
class EigenNoConvergence : public Error {
public:
    using Error::Error;
};

/// An iterative method (root finder, series summation) hit its cap.
class NoConvergence : public Error {
public:
    using Error::Error;
};

}  // namespace hypersob
