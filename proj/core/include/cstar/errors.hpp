#pragma once

#include <stdexcept>
#include <string>

namespace cstar {

// Base type for every contract violation raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error { using Error::Error; };
struct NotHermitian : Error { using Error::Error; };
struct NotPositive : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct NotInvertible : Error { using Error::Error; };
struct NotUnitary : Error { using Error::Error; };
struct CommutatorTooLarge : Error { using Error::Error; };
struct GramNotUnit : Error { using Error::Error; };
struct ZeroFunction : Error { using Error::Error; };
struct NotUnit : Error { using Error::Error; };
struct ProjectionZero : Error { using Error::Error; };
struct NotNormalized : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

}  // namespace cstar
