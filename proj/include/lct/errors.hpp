#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lct {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two operands from different coefficient rings, or an operation applied to
// a ring kind it does not support.
struct RingMismatch : Error {
    using Error::Error;
};

// exact_div invoked on a pair where the divisor does not divide exactly.
struct DivisionError : Error {
    using Error::Error;
};

// Exponent vectors of different lengths.
struct ShapeError : Error {
    using Error::Error;
};

struct ZeroPolynomial : Error {
    using Error::Error;
};

struct HomogeneityError : Error {
    using Error::Error;
};

// Minor enumeration would exceed the configured cap.
struct BudgetExceeded : Error {
    std::size_t count;
    std::size_t cap;
    BudgetExceeded(std::size_t count_, std::size_t cap_)
        : Error("minor enumeration budget exceeded: " + std::to_string(count_) +
                " submatrices > cap " + std::to_string(cap_)),
          count(count_), cap(cap_) {}
};

struct ParseError : Error {
    int line;
    int column;
    ParseError(const std::string& msg, int line_, int column_)
        : Error("parse error at " + std::to_string(line_) + ":" +
                std::to_string(column_) + ": " + msg),
          line(line_), column(column_) {}
};

} // namespace lct
