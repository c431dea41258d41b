#ifndef GROEMER_PARAMS_HPP
#define GROEMER_PARAMS_HPP

#include <compare>
#include <stdexcept>
#include <string>

#include "groemer/arith.hpp"

namespace groemer {

/**
 * Hexagonal parametrization of a disc count.
 *
 * Every n >= 1 is written uniquely as n = 1 + 6*C(a,2) + a*b + c with a, then
 * b, then c chosen maximal. That forces 1 <= a, 0 <= b <= 5 and 0 <= c < a.
 * The centred hexagonal numbers 1 + 6*C(a,2) are exactly the b = c = 0 case.
 */
struct HexParams {
    integer a = 1;
    integer b = 0;
    integer c = 0;

    constexpr bool valid() const { return a >= 1 && b >= 0 && b <= 5 && c >= 0 && c < a; }

    /// True for the centred hexagonal numbers, where the Kronecker delta in p0 fires.
    constexpr bool regular() const { return b == 0 && c == 0; }

    friend constexpr auto operator<=>(const HexParams&, const HexParams&) = default;
};

inline void require_valid(const HexParams& p) {
    if (!p.valid()) {
        throw std::invalid_argument("groemer: invalid parameters (a=" + std::to_string(p.a) + ", b=" +
                                    std::to_string(p.b) + ", c=" + std::to_string(p.c) + ")");
    }
}

inline void require_positive(integer n) {
    if (n <= 0) {
        throw std::invalid_argument("groemer: n must be a positive integer, got " + std::to_string(n));
    }
}

/// 1 + 6*C(a,2) = 3a^2 - 3a + 1.
constexpr wide centred_hexagonal(wide a) {
    return checked_add<wide>(checked_mul<wide>(6, binom2(a)), 1);
}

inline integer recompose(const HexParams& p) {
    require_valid(p);
    return narrow(checked_add<wide>(centred_hexagonal(p.a), checked_add<wide>(checked_mul<wide>(p.a, p.b), p.c)));
}

/**
 * Invert the quadratic: 3a^2 - 3a + 1 <= n  <=>  (6a - 3)^2 <= 12n - 3, so
 * a = floor((isqrt(12n - 3) + 3) / 6). The remainder then splits as b = r div a
 * and c = r mod a; r < 6a keeps b in [0, 5].
 */
inline HexParams decompose(integer n) {
    require_positive(n);
    const wide disc = checked_sub<wide>(checked_mul<wide>(12, n), 3);
    wide a = (isqrt(disc) + 3) / 6;
    while (centred_hexagonal(a + 1) <= n) {
        ++a;
    }
    while (centred_hexagonal(a) > n) {
        --a;
    }
    const wide rest = wide{n} - centred_hexagonal(a);
    HexParams out{narrow(a), narrow(rest / a), narrow(rest % a)};
    if (!out.valid()) {
        throw std::logic_error("groemer: decompose produced out-of-range parameters");
    }
    return out;
}

/// p0 = 6(a-1) + b + 1 - [b = c = 0].
inline integer p0_of_params(const HexParams& p) {
    require_valid(p);
    return narrow(checked_add<wide>(checked_mul<wide>(6, p.a - 1), p.b + 1 - (p.regular() ? 1 : 0)));
}

/// p0 = ceil(sqrt(12n - 3)) - 3, evaluated with an exact integer square root.
inline integer p0_of_n(integer n) {
    require_positive(n);
    return narrow(ceil_sqrt(checked_sub<wide>(checked_mul<wide>(12, n), 3)) - 3);
}

}

#endif
