#pragma once

#include <stdexcept>
#include <string>

namespace orthovol {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid dimension, index set, flag combination, or other caller mistake.
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// Enumeration refused because the term count exceeds the configured budget.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// Cone rays are linearly dependent where a simplicial cone is required.
class NotSimplicial : public Error {
public:
    using Error::Error;
};

/// Solid-angle formula fed rays with vanishing numerator and denominator.
class DegenerateCone : public Error {
public:
    using Error::Error;
};

/// Root finder could not meet the relative-residual contract.
class RootPrecisionFailure : public Error {
public:
    using Error::Error;
};

/// A condition that cannot occur for valid inputs (numeric guard tripped).
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace orthovol
