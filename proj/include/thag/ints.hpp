#pragma once

#include <stdexcept>

namespace thag {

// All coefficient arithmetic in this library is exact signed 64-bit with
// overflow detection; an overflow is a bug signal, never wraparound.
inline long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("thag: 64-bit overflow in addition");
    return r;
}

inline long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("thag: 64-bit overflow in multiplication");
    return r;
}

// n! for 0 <= n <= 20 (21! does not fit in 64 bits).
long long factorial(int n);

// Exact binomial coefficient; 0 when k < 0 or k > n. Rejects n > 20 so that
// dimension computations stay inside checked 64-bit range.
long long binomial(int n, int k);

} // namespace thag
