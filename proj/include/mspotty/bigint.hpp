#pragma once

#include <cstddef>

#include <boost/multiprecision/cpp_int.hpp>

namespace mspotty {

/// Arbitrary-precision integer used for codeword counts, character sums and
/// polynomial coefficients.
using Int = boost::multiprecision::cpp_int;

/// base^exp for a non-negative exponent.
inline Int ipow(Int base, std::size_t exp) {
    Int result = 1;
    while (exp != 0) {
        if (exp & 1) result *= base;
        base *= base;
        exp >>= 1;
    }
    return result;
}

/// Ceiling of x/t for positive t.
inline std::size_t ceil_div(std::size_t x, std::size_t t) { return (x + t - 1) / t; }

}  // namespace mspotty
