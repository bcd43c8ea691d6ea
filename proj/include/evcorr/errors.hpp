#pragma once

#include <stdexcept>
#include <string>

namespace evcorr {

// Base class for all library errors. Subclasses distinguish the failure
// category so callers can react (skip a stage, abort the run, fix input).
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input violates a documented precondition (non-positive price, bad bounds, ...).
class InvalidInputError : public Error {
public:
    using Error::Error;
};

// Not enough observations to carry out the requested computation.
class InsufficientDataError : public Error {
public:
    using Error::Error;
};

// Malformed file content; message carries the line number where known.
class ParseError : public Error {
public:
    using Error::Error;
};

// Structurally valid file whose content breaks an integrity rule
// (duplicate dates, inconsistent columns).
class IntegrityError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

// Argument outside a mathematical function's domain.
class DomainError : public Error {
public:
    using Error::Error;
};

// Design matrix is rank deficient (or numerically indistinguishable from it).
class SingularDesignError : public Error {
public:
    using Error::Error;
};

// Series or window degenerate in a way that makes the statistic undefined.
class DegenerateInputError : public Error {
public:
    using Error::Error;
};

// Optimizer exhausted its budget without meeting the convergence test.
class NonConvergenceError : public Error {
public:
    using Error::Error;
};

// Numerical breakdown that should be unreachable under valid inputs.
class NumericalError : public Error {
public:
    using Error::Error;
};

} // namespace evcorr
