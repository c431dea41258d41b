#ifndef GROEMER_ARITH_HPP
#define GROEMER_ARITH_HPP

/**
 * @file arith.hpp
 * @brief Exact integer helpers shared by every other header.
 *
 * Public quantities are 64-bit signed integers. Anything that multiplies two
 * of them is evaluated in 128 bits, and every narrowing or potentially
 * overflowing step goes through a checked helper that throws
 * std::overflow_error instead of wrapping.
 */

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <type_traits>

namespace groemer {

using integer = std::int64_t;
__extension__ typedef __int128 wide;
__extension__ typedef unsigned __int128 uwide;

template<typename T>
concept exact_integer = std::is_integral_v<T> || std::is_same_v<T, wide> || std::is_same_v<T, uwide>;

template<exact_integer T>
constexpr T checked_add(T x, T y) {
    T out{};
    if (__builtin_add_overflow(x, y, &out)) {
        throw std::overflow_error("groemer: integer overflow in addition");
    }
    return out;
}

template<exact_integer T>
constexpr T checked_sub(T x, T y) {
    T out{};
    if (__builtin_sub_overflow(x, y, &out)) {
        throw std::overflow_error("groemer: integer overflow in subtraction");
    }
    return out;
}

template<exact_integer T>
constexpr T checked_mul(T x, T y) {
    T out{};
    if (__builtin_mul_overflow(x, y, &out)) {
        throw std::overflow_error("groemer: integer overflow in multiplication");
    }
    return out;
}

/// Narrow a 128-bit intermediate back to a 64-bit result, throwing if it does not fit.
constexpr integer narrow(wide x) {
    if (x > std::numeric_limits<integer>::max() || x < std::numeric_limits<integer>::min()) {
        throw std::overflow_error("groemer: value does not fit in 64 bits");
    }
    return static_cast<integer>(x);
}

template<exact_integer T>
constexpr int bit_width(T x) {
    int bits = 0;
    while (x > 0) {
        x >>= 1;
        ++bits;
    }
    return bits;
}

/**
 * Floor square root by integer Newton iteration.
 *
 * The seed 2^ceil(bits/2) is never below the true root, so the iterates
 * decrease monotonically and the first non-decreasing step stops at
 * floor(sqrt(x)). Result r satisfies r*r <= x < (r+1)*(r+1).
 */
template<exact_integer T>
constexpr T isqrt(T x) {
    if (x < 0) {
        throw std::domain_error("groemer: isqrt of a negative number");
    }
    if (x < 2) {
        return x;
    }
    T root = T{1} << ((bit_width(x) + 1) / 2);
    while (true) {
        const T next = (root + x / root) / 2;
        if (next >= root) {
            return root;
        }
        root = next;
    }
}

/// Smallest r with r*r >= x.
template<exact_integer T>
constexpr T ceil_sqrt(T x) {
    const T root = isqrt(x);
    return root * root == x ? root : root + 1;
}

/// Exact perfect-square test; returns the root through `root` when it succeeds.
template<exact_integer T>
constexpr bool is_square(T x, T& root) {
    if (x < 0) {
        return false;
    }
    // Squares occupy 12 of the 64 residues mod 64; reject the rest cheaply.
    constexpr std::uint64_t square_residues = 0x0202021202030213ULL;
    if (((square_residues >> static_cast<unsigned>(x & 63)) & 1U) == 0) {
        return false;
    }
    root = isqrt(x);
    return root * root == x;
}

/// Multiplicity of `prime` in x (x > 0). The cofactor is written back to `x`.
template<exact_integer T>
constexpr int valuation(T& x, T prime) {
    if (x <= 0) {
        throw std::domain_error("groemer: valuation of a non-positive number");
    }
    int count = 0;
    while (x % prime == 0) {
        x /= prime;
        ++count;
    }
    return count;
}

/// 9^e, checked.
constexpr wide pow9(integer e) {
    if (e < 0) {
        throw std::domain_error("groemer: negative exponent");
    }
    wide out = 1;
    for (integer i = 0; i < e; ++i) {
        out = checked_mul<wide>(out, 9);
    }
    return out;
}

/// Non-negative residue of x modulo m (m > 0).
constexpr wide mod_floor(wide x, wide m) {
    const wide r = x % m;
    return r < 0 ? r + m : r;
}

/// C(x, 2) = x(x-1)/2.
constexpr wide binom2(wide x) {
    return checked_mul<wide>(x, x - 1) / 2;
}

}

#endif
