#pragma once

#include <stdexcept>
#include <string>

namespace madhava {

/// Base of every error the library raises. Callers that only care about
/// "the computation was refused" can catch this one type.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

class ScaleMismatch : public Error {
public:
    ScaleMismatch(unsigned lhs, unsigned rhs)
        : Error("scale mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}
};

class ParseError : public Error {
public:
    using Error::Error;
};

/// Argument outside the domain an operation is defined on (negative sqrt,
/// |x| > 1 for arctan, degenerate quadrilateral, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// The requested accuracy needs more terms than the configured cap allows.
class InfeasibleError : public Error {
public:
    using Error::Error;
};

} // namespace madhava
