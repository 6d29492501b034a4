#pragma once

#include <stdexcept>
#include <string>

namespace icosa {

// Every domain error thrown by the library derives from Error, so callers can
// distinguish library failures from std:: failures with one catch clause.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Division by an exact zero scalar.
struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

// A polynomial-degree-bounded table or rule was asked past its bound.
struct DegreeTooHigh : Error {
    explicit DegreeTooHigh(const std::string& what) : Error(what) {}
};

// A value expected to be one of the nine tempered trace values was not.
struct NotInA : Error {
    explicit NotInA(const std::string& what) : Error(what) {}
};

// Index out of range (class index, character index, table row...).
struct OutOfRange : Error {
    explicit OutOfRange(const std::string& what) : Error(what) {}
};

// A univariate operation received a polynomial in the wrong variable.
struct WrongVariable : Error {
    explicit WrongVariable(const std::string& what) : Error(what) {}
};

// Expression text failed to parse; position is the 0-based byte offset of the
// first offending token.
struct SyntaxError : Error {
    std::size_t position;
    SyntaxError(const std::string& what, std::size_t pos)
        : Error(what + " at position " + std::to_string(pos)), position(pos) {}
};

// A class function was evaluated against data from a different group layout.
struct ClassMismatch : Error {
    explicit ClassMismatch(const std::string& what) : Error(what) {}
};

// An inner product that must be a nonnegative rational integer was not.
struct NonIntegralMultiplicity : Error {
    explicit NonIntegralMultiplicity(const std::string& what) : Error(what) {}
};

// Lookup of an identity id that is not in the ledger.
struct UnknownIdentity : Error {
    explicit UnknownIdentity(const std::string& what) : Error(what) {}
};

}  // namespace icosa
