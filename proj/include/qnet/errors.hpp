#pragma once

#include <stdexcept>
#include <string>

namespace qnet {

/// Base class for all qnet runtime failures.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input text could not be parsed (malformed JSON, wrong types, unknown ids).
class ParseError : public Error {
public:
    using Error::Error;
};

/// Input data violates a documented invariant (invalid graph, bad priorities,
/// inconsistent schedule file, unusable generator spec).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// A selected edge set cannot be split into edge-disjoint simple
/// transmitter-to-receiver paths (residual directed cycles remain).
class DecompositionError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// A configured cap or budget was exhausted (path cap, search node budget,
/// enumeration caps).
class ResourceLimitError : public Error {
public:
    using Error::Error;
};

/// The LP solver could not certify an optimal solution.
class NumericalError : public Error {
public:
    using Error::Error;
};

/// The pricing step returned a column already in the pool while claiming it
/// improves the objective; indicates inconsistent duals.
class StallError : public Error {
public:
    using Error::Error;
};

} // namespace qnet
