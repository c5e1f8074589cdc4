#pragma once

#include <stdexcept>
#include <string>

namespace mzv {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
    explicit DivisionByZero(const std::string& what) : Error(what) {}
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A coefficient that lies beyond the known truncation order was needed.
class PrecisionError : public Error {
public:
    using Error::Error;
};

class NonInvertible : public Error {
public:
    using Error::Error;
};

/// delta -> 0 limit of a rational function with a genuine pole.
class PoleAtLimit : public Error {
public:
    PoleAtLimit(int order)
        : Error("pole of order " + std::to_string(order) + " at delta = 0"), order_(order) {}
    int order() const noexcept { return order_; }

private:
    int order_;
};

/// Operands drawn from different alphabets.
class AlphabetMismatch : public Error {
public:
    using Error::Error;
};

/// Letter product requested on an alphabet that has none.
class UnsupportedMerge : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Numeric evaluator cannot reach the requested error target.
class PrecisionUnreachable : public Error {
public:
    PrecisionUnreachable(const std::string& what, double achieved)
        : Error(what), achieved_(achieved) {}
    double achieved() const noexcept { return achieved_; }

private:
    double achieved_;
};

} // namespace mzv
