#pragma once

#include <cstdint>
#include <string>

#include "polyvdw/error.hpp"

namespace polyvdw {

// Coefficient type for every integer quantity in the algebra.
using Int = std::int64_t;

namespace checked {

inline Int add(Int a, Int b)
{
    Int out;
    if (__builtin_add_overflow(a, b, &out)) {
        throw Error(ErrorKind::Overflow, std::to_string(a) + " + " + std::to_string(b));
    }
    return out;
}

inline Int sub(Int a, Int b)
{
    Int out;
    if (__builtin_sub_overflow(a, b, &out)) {
        throw Error(ErrorKind::Overflow, std::to_string(a) + " - " + std::to_string(b));
    }
    return out;
}

inline Int mul(Int a, Int b)
{
    Int out;
    if (__builtin_mul_overflow(a, b, &out)) {
        throw Error(ErrorKind::Overflow, std::to_string(a) + " * " + std::to_string(b));
    }
    return out;
}

inline Int pow(Int base, unsigned exponent)
{
    Int out = 1;
    for (unsigned i = 0; i < exponent; ++i) {
        out = mul(out, base);
    }
    return out;
}

}  // namespace checked
}  // namespace polyvdw
