#pragma once

#include <stdexcept>
#include <string>

namespace antipodal {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operand dimensions disagree (body vs. sphere point, matrix vs. vector, ...).
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A clipped region A ∩ H is empty where the caller required it to be nonempty.
class InfeasibleError : public Error {
public:
    using Error::Error;
};

/// Input violates a documented precondition (bad radius, singular matrix, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

} // namespace antipodal
