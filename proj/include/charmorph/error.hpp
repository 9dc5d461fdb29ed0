#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace charmorph {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Operands belong to distinct fields.
struct MixedFields : Error {
    using Error::Error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

/// The field does not contain a primitive n-th root of unity.
struct NoSuchRoot : Error {
    using Error::Error;
};

/// Roots-of-unity test requires n > 2.
struct NTooSmall : Error {
    using Error::Error;
};

/// The noncommutative identity is only meaningful in characteristic 0 or > d.
struct CharacteristicTooSmall : Error {
    using Error::Error;
};

struct BadParams : Error {
    using Error::Error;
};

struct SearchSpaceTooLarge : Error {
    using Error::Error;
};

struct NoSuchMode : Error {
    using Error::Error;
};

/// Text input rejected; carries the 1-based line of the offending token.
struct ParseError : Error {
    std::size_t line = 0;

    explicit ParseError(const std::string& what, std::size_t line_no = 0)
        : Error(line_no ? "line " + std::to_string(line_no) + ": " + what : what),
          line(line_no) {}
};

}  // namespace charmorph
