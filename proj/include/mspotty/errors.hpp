#pragma once

#include <stdexcept>
#include <string>

namespace mspotty {

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Ring-spec grammar violations and invalid construction parameters.
struct SpecError : Error {
    using Error::Error;
};

struct NonPrimeParameter : SpecError {
    explicit NonPrimeParameter(unsigned long long value)
        : SpecError("parameter must be prime, got " + std::to_string(value)) {}
};

struct ReducibleModulus : SpecError {
    explicit ReducibleModulus(const std::string& what) : SpecError(what) {}
};

struct EmptyProduct : SpecError {
    EmptyProduct() : SpecError("product ring needs at least one component") {}
};

/// Operands live in cyclotomic rings with different moduli.
struct ModulusMismatch : Error {
    using Error::Error;
};

/// Matrix rows or distribution parameters do not fit the expected shape.
struct DimensionMismatch : Error {
    using Error::Error;
};

/// Two codewords (or a codeword and a layout) disagree on length.
struct LayoutMismatch : Error {
    using Error::Error;
};

/// An enumeration sweep would exceed the configured bound.
struct SizeLimitExceeded : Error {
    using Error::Error;
};

struct OutOfRange : Error {
    using Error::Error;
};

/// A character sum failed to reduce to a rational integer.  This can only
/// happen when a ring's character table is broken.
struct NotAnInteger : Error {
    using Error::Error;
};

/// A coefficient of the transform was not divisible by |C|.  Signals an
/// inconsistent input distribution, not a rounding problem.
struct InexactDivision : Error {
    using Error::Error;
};

}  // namespace mspotty
