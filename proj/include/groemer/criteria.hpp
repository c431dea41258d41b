#ifndef GROEMER_CRITERIA_HPP
#define GROEMER_CRITERIA_HPP

/**
 * @file criteria.hpp
 * @brief Number-theoretic predicates for exceptional disc counts.
 *
 * Three predicates are provided:
 *  - check_wegner_conjecture: Wegner's original congruence conditions on (a, b, c).
 *    Known to be wrong, kept so it can be compared against the others.
 *  - check_boeroeczky_ruzsa: the discriminant ceil(sqrt(12n-3))^2 + 3 - 12n
 *    must factor as (3k-1) * 9^l with k, l >= 1.
 *  - check_corrected: the congruence form of the same statement, phrased in
 *    (a, b, c) like Wegner's conditions.
 *
 * Each predicate returns a witness on a positive answer and std::nullopt otherwise.
 * Natural numbers start at 1 (k, l) unless written N0 (m).
 */

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "groemer/arith.hpp"
#include "groemer/params.hpp"

namespace groemer {

struct BRWitness {
    integer k = 0;
    integer l = 0;
    integer discriminant = 0;

    friend constexpr bool operator==(const BRWitness&, const BRWitness&) = default;
};

enum class WegnerBranch { b2, b5 };

struct WegnerWitness {
    WegnerBranch branch = WegnerBranch::b2;
    integer m = 0;

    friend constexpr bool operator==(const WegnerWitness&, const WegnerWitness&) = default;
};

/**
 * Writes D = 9^l (3k - 1) with k, l >= 1 if possible.
 *
 * Since 3k - 1 is prime to 3, l is forced to half the 3-adic valuation of D,
 * so there is at most one witness. D = 0 never qualifies.
 */
inline std::optional<BRWitness> factor_discriminant(wide discriminant) {
    if (discriminant <= 0) {
        return std::nullopt;
    }
    wide cofactor = discriminant;
    const int v = valuation<wide>(cofactor, 3);
    if (v == 0 || v % 2 != 0) {
        return std::nullopt;
    }
    if (cofactor % 3 != 2) {
        return std::nullopt;
    }
    return BRWitness{narrow((cofactor + 1) / 3), v / 2, narrow(discriminant)};
}

/// D = ceil(sqrt(12n-3))^2 + 3 - 12n, always >= 0.
inline integer br_discriminant(integer n) {
    require_positive(n);
    const wide twelve_n = checked_mul<wide>(12, n);
    const wide root = ceil_sqrt(twelve_n - 3);
    return narrow(checked_mul<wide>(root, root) + 3 - twelve_n);
}

inline std::optional<BRWitness> check_boeroeczky_ruzsa(integer n) {
    return factor_discriminant(br_discriminant(n));
}

/**
 * Smallest m >= 0 satisfying Wegner's condition for the branch selected by b.
 *
 * a - c >= 1 always (c < a), so for b = 2 a solution needs
 * 9^(m+1) <= a - c + 6m and for b = 5 it needs 9^m <= a - c. Both bounds
 * only get harder as m grows, which ends the search.
 */
inline std::optional<WegnerWitness> check_wegner_conjecture(const HexParams& p) {
    require_valid(p);
    const wide diff = wide{p.a} - p.c;
    if (p.b == 2) {
        for (integer m = 0;; ++m) {
            const wide modulus = pow9(m + 1);
            const wide shifted = diff + 6 * wide{m};
            if (modulus > shifted) {
                return std::nullopt;
            }
            if (shifted % modulus == 0) {
                return WegnerWitness{WegnerBranch::b2, m};
            }
        }
    }
    if (p.b == 5) {
        for (integer m = 0;; ++m) {
            const wide unit = pow9(m);
            if (unit > diff) {
                return std::nullopt;
            }
            if (mod_floor(diff - 6 * unit, 9 * unit) == 0) {
                return WegnerWitness{WegnerBranch::b5, m};
            }
        }
    }
    return std::nullopt;
}

/// 12(a-c) + (b-2)^2 - 9. Agrees with br_discriminant(recompose(p)) off the regular case.
inline integer param_discriminant(const HexParams& p) {
    require_valid(p);
    if (p.regular()) {
        throw std::invalid_argument("groemer: param_discriminant is undefined for b = c = 0");
    }
    return narrow(checked_mul<wide>(12, wide{p.a} - p.c) + (p.b - 2) * (p.b - 2) - 9);
}

/// 1 + 9 + ... + 9^(l-2); zero when l < 2.
inline wide repunit9(integer l) {
    return l < 2 ? wide{0} : (pow9(l - 1) - 1) / 8;
}

/**
 * Congruence characterization.
 *
 * b = 2: D = 12(a-c) - 9 = 9^l (3k-1) and a - c = -6m (mod 9^l), m = 1 + 9 + ... + 9^(l-2).
 * b = 5: D = 12(a-c)     = 9^l (3k-1) and a - c = 6 * 9^(l-1) (mod 9^l).
 * Any other b is ruled out by reducing D modulo 3.
 */
inline std::optional<BRWitness> check_corrected(const HexParams& p) {
    require_valid(p);
    if (p.b != 2 && p.b != 5) {
        return std::nullopt;
    }
    const wide diff = wide{p.a} - p.c;
    const wide discriminant = checked_mul<wide>(12, diff) - (p.b == 2 ? 9 : 0);
    auto witness = factor_discriminant(discriminant);
    if (!witness) {
        return std::nullopt;
    }
    const wide modulus = pow9(witness->l);
    const wide target = p.b == 2 ? -6 * repunit9(witness->l) : 6 * pow9(witness->l - 1);
    if (mod_floor(diff - target, modulus) != 0) {
        return std::nullopt;
    }
    return witness;
}

/**
 * Checks that -8(1 + 9 + ... + 9^(l-2)) + 12 * 9^(l-1) * z - 1 equals
 * 9^(l-1) (3k - 1) for some k >= 1.
 */
inline bool induction_lemma_holds(integer l, integer z) {
    if (l < 1 || z < 1) {
        throw std::invalid_argument("groemer: induction lemma needs l >= 1 and z >= 1");
    }
    const wide scale = pow9(l - 1);
    const wide lhs = -8 * repunit9(l) + checked_mul<wide>(checked_mul<wide>(12, scale), z) - 1;
    if (lhs % scale != 0) {
        return false;
    }
    const wide factor = lhs / scale;
    return factor > 0 && factor % 3 == 2 && (factor + 1) / 3 >= 1;
}

/// Oracle outcome as carried in a Verdict. Solutions are canonical 6-tuples, possibly truncated.
struct OracleSummary {
    bool exceptional = false;
    std::size_t solution_count = 0;
    std::vector<std::array<integer, 6>> solutions;

    friend bool operator==(const OracleSummary&, const OracleSummary&) = default;
};

struct Verdict {
    integer n = 1;
    HexParams params;
    integer p0 = 0;
    std::optional<WegnerWitness> wegner_conjecture;
    std::optional<BRWitness> boeroeczky_ruzsa;
    std::optional<BRWitness> corrected;
    std::optional<OracleSummary> oracle;

    friend bool operator==(const Verdict&, const Verdict&) = default;

    /// Whether the proven predicates (and the oracle, if run) agree.
    bool consistent() const {
        const bool br = boeroeczky_ruzsa.has_value();
        if (br != corrected.has_value()) {
            return false;
        }
        if (br && (boeroeczky_ruzsa->k != corrected->k || boeroeczky_ruzsa->l != corrected->l)) {
            return false;
        }
        return !oracle || oracle->exceptional == br;
    }
};

/// Evaluates all number-theoretic predicates; the oracle block is left empty.
inline Verdict evaluate_criteria(integer n) {
    Verdict out;
    out.n = n;
    out.params = decompose(n);
    out.p0 = p0_of_n(n);
    out.wegner_conjecture = check_wegner_conjecture(out.params);
    out.boeroeczky_ruzsa = check_boeroeczky_ruzsa(n);
    out.corrected = check_corrected(out.params);
    return out;
}

}

#endif
