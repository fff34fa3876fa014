#pragma once

#include <stdexcept>
#include <string>

namespace finkin {

// Base of every error the library raises. The CLI maps the concrete type onto
// an exit code, so new error kinds should derive from one of the classes below.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Argument outside the documented domain (coordinate out of range, bad count,
// invalid parameter set).
class DomainError : public Error {
public:
    using Error::Error;
};

// Operation called on a parameter set it does not support, e.g. the symmetric
// solver on an asymmetric mechanism.
class PreconditionError : public Error {
public:
    using Error::Error;
};

// The linkage cannot assemble at the requested crank angle.
class UnreachableError : public Error {
public:
    using Error::Error;
};

// Derivative is unbounded at the requested time.
class SingularError : public Error {
public:
    using Error::Error;
};

// No valid mechanism realises the requested motion targets.
class InfeasibleError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace finkin
