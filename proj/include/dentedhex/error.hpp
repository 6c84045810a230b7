#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dentedhex {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

/// Exact division left a nonzero remainder.
class NotDivisible : public Error {
public:
    NotDivisible() : Error("polynomial is not divisible") {}
};

/// Evaluation at q = 0 of a polynomial with negative q-exponents.
class EvalAtZero : public Error {
public:
    EvalAtZero() : Error("evaluation at q = 0 of a term with negative q-exponent") {}
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// An enumeration would exceed its configured bound.
class TooLarge : public Error {
public:
    using Error::Error;
};

class InvalidTiling : public Error {
public:
    using Error::Error;
};

/// An identity that must hold by construction failed; indicates a bug.
class InternalNonDivisible : public Error {
public:
    using Error::Error;
};

}  // namespace dentedhex
