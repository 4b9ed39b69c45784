#pragma once

#include <stdexcept>
#include <string>

namespace altsum {

/// Base class for all library errors that are not plain contract
/// violations (those throw std::invalid_argument / std::out_of_range).
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A size cap was exceeded (brute-force sums, enumeration guards).
struct SizeError : Error {
    using Error::Error;
};

/// The requested operation needs an oracle or property the input lacks
/// (missing antiderivative/derivative oracle, non-unimodular cone, p != 1).
struct CapabilityError : Error {
    using Error::Error;
};

/// A function evaluation produced a non-finite value or hit a domain
/// error (division by zero, log of a nonpositive number, ...).
struct EvalError : Error {
    using Error::Error;
};

/// Quadrature refinement failed to converge; carries the last two values.
struct ToleranceError : Error {
    ToleranceError(const std::string& msg, double prev, double last)
        : Error(msg), previous(prev), latest(last) {}
    double previous;
    double latest;
};

/// Input polytope is outside the supported class (non-simple, ...).
struct UnsupportedPolytopeError : Error {
    using Error::Error;
};

/// Input is degenerate or not full-dimensional.
struct DimensionError : Error {
    using Error::Error;
};

/// Expression source text failed to parse; carries the byte offset.
struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t off)
        : Error(msg + " (at offset " + std::to_string(off) + ")"), offset(off) {}
    std::size_t offset;
};

/// Retry budget for drawing a generic direction was exhausted.
struct RandomnessError : Error {
    using Error::Error;
};

/// An internal consistency assertion failed; indicates a library bug.
struct InternalError : Error {
    using Error::Error;
};

}  // namespace altsum
