#pragma once

#include <stdexcept>
#include <string>

namespace puiseux {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Lexical or syntactic error with 1-based source position.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line, int col)
        : Error(msg + " (at " + std::to_string(line) + ":" + std::to_string(col) + ")"),
          line_(line), col_(col) {}
    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_;
    int col_;
};

// Well-formed input that violates a semantic precondition (division by zero
// series, mixed variables, negative valuation where forbidden, ...).
class SemanticError : public Error {
public:
    using Error::Error;
};

// Exponents over distinct RealBasis objects were combined.
class BasisMismatchError : public SemanticError {
public:
    BasisMismatchError() : SemanticError("exponents belong to different real bases") {}
};

// A lazily defined series produced no term at or below the search cap, so its
// valuation (and anything derived from it) is undetermined.  Semi-decidable by
// design; callers may retry with a larger cap.
class UndeterminedValuationError : public Error {
public:
    explicit UndeterminedValuationError(const std::string& what_part, const std::string& cap)
        : Error("valuation of " + what_part + " undetermined below cap " + cap),
          cap_(cap) {}
    const std::string& cap() const { return cap_; }

private:
    std::string cap_;
};

// A truncated object (Weierstrass factor, substitution result) was queried
// beyond its certified order.
class TruncationError : public Error {
public:
    TruncationError(const std::string& what_part, const std::string& bound)
        : Error(what_part + " is only certified up to order " + bound) {}
};

// Root clusters stayed ambiguous at the maximum working precision.
class PrecisionExhaustedError : public Error {
public:
    explicit PrecisionExhaustedError(const std::string& msg)
        : Error(msg + "; increase the precision cap") {}
};

// A sequence handed to cauchy_limit broke its stabilisation promise.
class NotCauchyError : public Error {
public:
    explicit NotCauchyError(const std::string& msg)
        : Error("sequence is not Cauchy as promised: " + msg) {}
};

}  // namespace puiseux
