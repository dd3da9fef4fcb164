#pragma once

#include <stdexcept>
#include <string>

namespace ineq {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

struct NegativeRadicand : Error {
    NegativeRadicand() : Error("even root of a negative number") {}
};

struct NonPositiveArgument : Error {
    NonPositiveArgument() : Error("logarithm of a non-positive number") {}
};

struct DivisorContainsZero : Error {
    DivisorContainsZero() : Error("interval divisor contains zero") {}
};

struct SyntaxError : Error {
    std::size_t position;
    SyntaxError(std::size_t pos, const std::string& what)
        : Error("syntax error at position " + std::to_string(pos) + ": " + what),
          position(pos) {}
};

struct UnknownIdentifier : Error {
    std::size_t position;
    UnknownIdentifier(std::size_t pos, const std::string& name)
        : Error("unknown identifier at position " + std::to_string(pos) + ": " + name),
          position(pos) {}
};

struct IrrationalValue : Error {
    IrrationalValue() : Error("value is irrational; use the enclosure evaluator") {}
};

struct DomainViolation : Error {
    DomainViolation(const std::string& what) : Error("domain violation: " + what) {}
};

struct NotRationalFunction : Error {
    NotRationalFunction() : Error("expression is not a rational function") {}
};

struct DivisionByZeroPolynomial : Error {
    DivisionByZeroPolynomial() : Error("polynomial division by zero") {}
};

struct NotDoubleRoot : Error {
    NotDoubleRoot(const std::string& what) : Error("not a double root: " + what) {}
};

struct DegenerateSeparator : Error {
    DegenerateSeparator() : Error("l'(x0) = 0: separator coefficients are undefined") {}
};

struct NonPositiveValue : Error {
    NonPositiveValue() : Error("power mean requires positive values") {}
};

struct ParseError : Error {
    int line;
    ParseError(int line_, const std::string& what)
        : Error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

struct InconsistentSpec : Error {
    InconsistentSpec(const std::string& what) : Error("inconsistent problem: " + what) {}
};

}  // namespace ineq
