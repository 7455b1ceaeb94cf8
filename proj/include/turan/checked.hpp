#pragma once
// Overflow-checked signed 64-bit arithmetic. Clique counts and bound sums
// must stay exact up to 2^63-1 and error out instead of wrapping.

#include <stdexcept>

namespace turan {

inline long long checked_add(long long a, long long b) {
    long long out;
    if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("64-bit count overflow");
    return out;
}

inline long long checked_mul(long long a, long long b) {
    long long out;
    if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("64-bit count overflow");
    return out;
}

}  // namespace turan
