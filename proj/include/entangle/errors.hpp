#pragma once

#include <stdexcept>
#include <string>

namespace entangle {

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Matrix or vector dimensions do not fit the operation.
struct ShapeError : Error {
    using Error::Error;
};

/// An argument lies outside the operation's domain.
struct DomainError : Error {
    using Error::Error;
};

/// A caller-supplied object violates a stated precondition.
/// Carries the measured violation (e.g. the unitarity defect).
struct ContractError : Error {
    ContractError(const std::string& what, double measured_defect)
        : Error(what), measured(measured_defect) {}
    double measured;
};

/// Tolerances or job configuration are inconsistent.
struct ConfigError : Error {
    using Error::Error;
};

/// An integer range guard tripped (e.g. lcm overflow in exact mode).
struct RangeError : Error {
    using Error::Error;
};

/// A cost ceiling would be exceeded; carries the estimate that tripped it.
struct ResourceError : Error {
    ResourceError(const std::string& what, double estimated_cost)
        : Error(what), estimate(estimated_cost) {}
    double estimate;
};

}  // namespace entangle
