#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace heatsum {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Mixing exact and floating coefficients in one expression.
struct ModeError : Error {
    using Error::Error;
};

// Expression syntax / expansion failures; position is a 0-based byte offset.
struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

// Truncation too small for the requested operation.
struct OrderError : Error {
    using Error::Error;
};

// Float-mode magnitude guard tripped (divided coefficients overflow double).
struct OverflowError : Error {
    using Error::Error;
};

struct SingularPadeError : Error {
    using Error::Error;
};

// Laplace ray blocked by a singularity, or quadrature failed to settle.
struct SummabilityError : Error {
    using Error::Error;
};

}  // namespace heatsum
