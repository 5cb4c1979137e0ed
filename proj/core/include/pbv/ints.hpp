#pragma once

#include <boost/functional/hash.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace pbv {

// Coefficients and degrees are arbitrary precision; lex order encodings use
// coefficients of magnitude 2^(n-1), so machine words are unsound.
using Int = boost::multiprecision::cpp_int;

inline Int ceilDiv(const Int& value, const Int& divisor) {
    return (value + divisor - 1) / divisor;
}

inline size_t hashInt(const Int& value) {
    return boost::hash<Int>()(value);
}

} // namespace pbv
