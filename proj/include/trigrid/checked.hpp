// checked.hpp - signed 64-bit arithmetic that reports overflow instead of wrapping
#pragma once

#include <cstdint>
#include <stdexcept>

namespace trigrid {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw std::overflow_error("int64 overflow in addition");
    }
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) {
        throw std::overflow_error("int64 overflow in subtraction");
    }
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw std::overflow_error("int64 overflow in multiplication");
    }
    return r;
}

inline std::int64_t checked_neg(std::int64_t a) {
    return checked_sub(0, a);
}

// Narrow a 128-bit intermediate back to int64, reporting overflow.
inline std::int64_t narrow_i128(__int128 v) {
    if (v > static_cast<__int128>(INT64_MAX) || v < static_cast<__int128>(INT64_MIN)) {
        throw std::overflow_error("result does not fit in int64");
    }
    return static_cast<std::int64_t>(v);
}

}  // namespace trigrid
