#pragma once

#include <stdexcept>
#include <string>

namespace starprod {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input: unreadable JSON, schema violations, arity or dimension
/// mismatches between arguments.
struct InputError : Error {
    using Error::Error;
};

/// Structurally well-formed but semantically invalid object: theta not
/// antisymmetric, beta with a constant term, failed cocycle validation.
struct ValidationError : Error {
    using Error::Error;
};

/// Numeric range guard: an exponent grew past what exp() can represent
/// without overflow, so the computation refuses to continue silently.
struct RangeError : Error {
    using Error::Error;
};

}  // namespace starprod
