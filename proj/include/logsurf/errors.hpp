#pragma once

#include <stdexcept>
#include <string>

namespace logsurf {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input: unknown class names, non-symmetric matrices, unparsable
// rationals, degree ordering violations, oracle size limits.
struct InputError : Error {
    using Error::Error;
};

// A documented precondition of an operation does not hold for the given
// arguments (e.g. the cycle handed to a decomposition is not negative
// definite, or a divisor that must be effective is not).
struct PreconditionError : Error {
    using Error::Error;
};

// Combinatorial resolution data that contradict themselves (stage ordering,
// proximity references, derived discrepancies going negative).
struct InconsistentDatumError : Error {
    using Error::Error;
};

// The intersection data cannot come from the advertised geometric situation
// (e.g. the support of an absolute negative part fails to be negative
// definite).
struct ModelInconsistencyError : Error {
    using Error::Error;
};

// A certified internal invariant failed. This indicates corrupt input that
// slipped past validation, or a bug; it is never expected on valid data.
struct InvariantViolationError : Error {
    using Error::Error;
};

} // namespace logsurf
