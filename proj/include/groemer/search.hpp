#ifndef GROEMER_SEARCH_HPP
#define GROEMER_SEARCH_HPP

/**
 * @file search.hpp
 * @brief Exhaustive existence oracle for extremal Groemer packings.
 *
 * An extremal packing of n discs exists iff there are p1..p4 >= 1 with
 *
 *   n  = (p1 + p2 - 1)(p3 + p4 - 1) - C(p1,2) - C(p4,2)
 *   p0 = p1 + 2 p2 + 2 p3 + p4 - 6
 *
 * whose completed boundary sequence (p5 = p1 + p2 - p4, p6 = p3 + p4 - p1)
 * has every side in side_window: at least (a-1)/2, and at most what the
 * perimeter leaves over once the other five sides take their minimum.
 *
 * find_extremal scans (p1, p4) over that window, takes p2 + p3 from the
 * perimeter equation and solves the count equation for p2 as an integer
 * quadratic. Cost is O(window^2) integer square roots per n.
 */

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string_view>
#include <thread>
#include <vector>

#include "groemer/arith.hpp"
#include "groemer/criteria.hpp"
#include "groemer/params.hpp"

namespace groemer {

/// Side counts p1..p6 of a lattice hexagon, stored as p[0]..p[5].
struct BoundarySeq {
    std::array<integer, 6> p{1, 1, 1, 1, 1, 1};

    constexpr integer operator[](std::size_t i) const { return p[i]; }

    friend constexpr auto operator<=>(const BoundarySeq&, const BoundarySeq&) = default;
};

/// p_i + p_{i+1} == p_{i+3} + p_{i+4} cyclically, and every p_i >= 1.
constexpr bool closure_holds(const BoundarySeq& s) {
    for (std::size_t i = 0; i < 6; ++i) {
        if (s[i] < 1) {
            return false;
        }
        if (s[i] + s[(i + 1) % 6] != s[(i + 3) % 6] + s[(i + 4) % 6]) {
            return false;
        }
    }
    return true;
}

inline void require_sides(integer p1, integer p2, integer p3, integer p4) {
    if (p1 < 1 || p2 < 1 || p3 < 1 || p4 < 1) {
        throw std::invalid_argument("groemer: side counts must be positive");
    }
}

inline integer n_of_seq(integer p1, integer p2, integer p3, integer p4) {
    require_sides(p1, p2, p3, p4);
    const wide first = checked_sub<wide>(checked_add<wide>(p1, p2), 1);
    const wide second = checked_sub<wide>(checked_add<wide>(p3, p4), 1);
    return narrow(checked_mul(first, second) - binom2(p1) - binom2(p4));
}

inline integer perimeter_of_seq(integer p1, integer p2, integer p3, integer p4) {
    require_sides(p1, p2, p3, p4);
    return narrow(wide{p1} + 2 * wide{p2} + 2 * wide{p3} + p4 - 6);
}

inline integer n_of_seq(const BoundarySeq& s) { return n_of_seq(s[0], s[1], s[2], s[3]); }
inline integer perimeter_of_seq(const BoundarySeq& s) { return perimeter_of_seq(s[0], s[1], s[2], s[3]); }

/// Range every side of an extremal hexagon must fall in.
struct SideWindow {
    integer lo = 1;
    integer hi = 1;

    constexpr bool contains(integer side) const { return side >= lo && side <= hi; }
};

/**
 * lo = ceil((a-1)/2), floored at 1. The six sides of an extremal hexagon sum
 * to p0 + 6 (each side of length p_i - 1 contributes that many boundary
 * points), so with the other five at least lo, no side exceeds p0 + 6 - 5 lo.
 */
inline SideWindow side_window(const HexParams& p) {
    const integer lo = std::max<integer>(1, p.a / 2);
    return SideWindow{lo, p0_of_params(p) + 6 - 5 * lo};
}

inline void require_irregular(const HexParams& p) {
    require_valid(p);
    if (p.regular()) {
        throw std::invalid_argument("groemer: side bounds only apply when b and c are not both 0");
    }
}

/// Every side inside side_window(p); the lower bound (a-1)/2 <= p_i is compared as 2 p_i >= a - 1.
inline bool bounds_ok(const BoundarySeq& s, const HexParams& p) {
    require_irregular(p);
    const SideWindow w = side_window(p);
    return std::all_of(s.p.begin(), s.p.end(), [&](integer side) { return 2 * side >= p.a - 1 && side <= w.hi; });
}

/**
 * The narrower window (a-1)/2 <= p_i <= 2a - c.
 *
 * Not a necessary condition for extremal hexagons: the only extremal shape
 * for n = 5 is (1,2,2,2,1,3), with a side of 3 > 2a - c = 2, and the only one
 * for n = 120 is (6,7,7,7,6,8) with 8 > 2a - c = 7. Filtering by this window
 * would misreport such counts as exceptional. Kept for reporting only; the
 * oracle uses bounds_ok.
 */
inline bool narrow_bounds_ok(const BoundarySeq& s, const HexParams& p) {
    require_irregular(p);
    const integer hi = 2 * p.a - p.c;
    return std::all_of(s.p.begin(), s.p.end(), [&](integer side) { return 2 * side >= p.a - 1 && side <= hi; });
}

inline std::optional<BoundarySeq> complete_seq(integer p1, integer p2, integer p3, integer p4) {
    require_sides(p1, p2, p3, p4);
    const integer p5 = p1 + p2 - p4;
    const integer p6 = p3 + p4 - p1;
    if (p5 < 1 || p6 < 1) {
        return std::nullopt;
    }
    return BoundarySeq{{p1, p2, p3, p4, p5, p6}};
}

/// Cyclic shift so that side j becomes the first side.
constexpr BoundarySeq rotate(const BoundarySeq& s, std::size_t j) {
    BoundarySeq out;
    for (std::size_t i = 0; i < 6; ++i) {
        out.p[i] = s.p[(i + j) % 6];
    }
    return out;
}

/// Walks the sides in the opposite order, i.e. the mirror-image hexagon.
constexpr BoundarySeq mirror(const BoundarySeq& s) {
    return BoundarySeq{{s[0], s[5], s[4], s[3], s[2], s[1]}};
}

/// Lexicographically smallest cyclic rotation.
constexpr BoundarySeq canonicalize(const BoundarySeq& s) {
    BoundarySeq best = s;
    for (std::size_t j = 1; j < 6; ++j) {
        best = std::min(best, rotate(s, j));
    }
    return best;
}

/// Smallest representative under rotations and reflection.
constexpr BoundarySeq canonicalize_dihedral(const BoundarySeq& s) {
    return std::min(canonicalize(s), canonicalize(mirror(s)));
}

struct SearchOptions {
    /// Identify a sequence with its mirror image. Off by default: only rotations are identified.
    bool merge_mirrors = false;
    /// Stop after the first solution; enough to decide exceptionality.
    bool first_only = false;
};

struct SearchReport {
    integer n = 1;
    HexParams params;
    integer p0 = 0;
    std::vector<BoundarySeq> solutions;  // canonical, ascending
    bool exceptional = false;
    /// Small counts where the hull need not have six sides; the result only follows the algebra.
    bool algebraic_only = false;
};

inline SearchReport find_extremal(integer n, const SearchOptions& opts = {}) {
    require_positive(n);
    SearchReport report;
    report.n = n;
    report.params = decompose(n);
    report.p0 = p0_of_n(n);
    report.algebraic_only = n <= 6;

    const HexParams& hp = report.params;
    if (hp.regular()) {
        report.solutions.push_back(BoundarySeq{{hp.a, hp.a, hp.a, hp.a, hp.a, hp.a}});
        return report;
    }

    const SideWindow window = side_window(hp);
    const integer lo = window.lo;
    const integer hi = window.hi;
    const wide target_n = n;
    std::set<BoundarySeq> found;

    for (integer p1 = lo; p1 <= hi; ++p1) {
        const wide c1 = binom2(p1);
        for (integer p4 = lo; p4 <= hi; ++p4) {
            // p2 + p3 from the perimeter equation.
            const integer twice_sum = report.p0 + 6 - p1 - p4;
            if (twice_sum < 2 * lo) {
                break;
            }
            if (twice_sum % 2 != 0 || twice_sum > 4 * hi) {
                continue;
            }
            const integer sum23 = twice_sum / 2;

            // With x = p1 + p2 - 1 the count equation reads x (mid - x) = rhs.
            const wide mid = wide{sum23} + p1 + p4 - 2;
            const wide rhs = target_n + c1 + binom2(p4);
            const wide disc = mid * mid - 4 * rhs;
            wide root = 0;
            if (!is_square(disc, root) || (mid + root) % 2 != 0) {
                continue;
            }

            for (const wide x : {(mid - root) / 2, (mid + root) / 2}) {
                const wide p2 = x - p1 + 1;
                const wide p3 = sum23 - p2;
                if (p2 < lo || p2 > hi || p3 < lo || p3 > hi) {
                    continue;
                }
                auto seq = complete_seq(p1, narrow(p2), narrow(p3), p4);
                if (!seq || !bounds_ok(*seq, hp)) {
                    continue;
                }
                found.insert(opts.merge_mirrors ? canonicalize_dihedral(*seq) : canonicalize(*seq));
                if (opts.first_only) {
                    report.solutions.assign(found.begin(), found.end());
                    return report;
                }
            }
        }
    }

    report.solutions.assign(found.begin(), found.end());
    report.exceptional = report.solutions.empty();
    return report;
}

/// Runs the oracle and stores its outcome in `verdict`, keeping at most `max_solutions` tuples.
inline void attach_oracle(Verdict& verdict, std::size_t max_solutions, const SearchOptions& opts = {}) {
    const SearchReport report = find_extremal(verdict.n, opts);
    OracleSummary summary;
    summary.exceptional = report.exceptional;
    summary.solution_count = report.solutions.size();
    for (std::size_t i = 0; i < report.solutions.size() && i < max_solutions; ++i) {
        summary.solutions.push_back(report.solutions[i].p);
    }
    verdict.oracle = std::move(summary);
}

enum class Criterion { oracle, boeroeczky_ruzsa, corrected, wegner_conjecture };

/// CLI spellings: oracle, br, corrected, wegner.
inline std::optional<Criterion> parse_criterion(std::string_view name) {
    if (name == "oracle") return Criterion::oracle;
    if (name == "br") return Criterion::boeroeczky_ruzsa;
    if (name == "corrected") return Criterion::corrected;
    if (name == "wegner") return Criterion::wegner_conjecture;
    return std::nullopt;
}

inline std::string_view criterion_name(Criterion c) {
    switch (c) {
    case Criterion::oracle: return "oracle";
    case Criterion::boeroeczky_ruzsa: return "br";
    case Criterion::corrected: return "corrected";
    case Criterion::wegner_conjecture: return "wegner";
    }
    return "?";
}

inline bool is_exceptional(integer n, Criterion criterion) {
    switch (criterion) {
    case Criterion::oracle: return find_extremal(n, SearchOptions{false, true}).exceptional;
    case Criterion::boeroeczky_ruzsa: return check_boeroeczky_ruzsa(n).has_value();
    case Criterion::corrected: return check_corrected(decompose(n)).has_value();
    case Criterion::wegner_conjecture: return check_wegner_conjecture(decompose(n)).has_value();
    }
    return false;
}

namespace detail {

/**
 * Splits [1, n_max] into `jobs` contiguous blocks, evaluates `body(lo, hi)`
 * on each in its own thread and concatenates the results block by block.
 * Since blocks are ascending and disjoint, the output does not depend on `jobs`.
 */
template<typename Result, typename Body>
std::vector<Result> parallel_blocks(integer n_max, unsigned jobs, Body body) {
    jobs = std::max(1U, jobs);
    const integer count = std::max<integer>(0, n_max);
    const integer blocks = std::min<integer>(jobs, std::max<integer>(1, count));
    std::vector<std::vector<Result>> parts(static_cast<std::size_t>(blocks));
    {
        std::vector<std::jthread> workers;
        for (integer i = 0; i < blocks; ++i) {
            const integer lo = 1 + count * i / blocks;
            const integer hi = count * (i + 1) / blocks;
            workers.emplace_back([&parts, &body, i, lo, hi] { parts[static_cast<std::size_t>(i)] = body(lo, hi); });
        }
    }
    std::vector<Result> merged;
    for (auto& part : parts) {
        merged.insert(merged.end(), part.begin(), part.end());
    }
    return merged;
}

}

inline std::vector<integer> enumerate_exceptional(integer n_max, Criterion criterion, unsigned jobs = 1) {
    require_positive(n_max);
    return detail::parallel_blocks<integer>(n_max, jobs, [criterion](integer lo, integer hi) {
        std::vector<integer> out;
        for (integer n = lo; n <= hi; ++n) {
            if (is_exceptional(n, criterion)) {
                out.push_back(n);
            }
        }
        return out;
    });
}

/// A count where Wegner's conjecture and the Boeroeczky-Ruzsa criterion disagree.
struct Discrepancy {
    integer n = 0;
    bool conjecture = false;
    bool boeroeczky_ruzsa = false;
    bool oracle = false;
    std::size_t oracle_solutions = 0;

    friend bool operator==(const Discrepancy&, const Discrepancy&) = default;
};

struct CrossValidation {
    integer n_max = 0;
    std::vector<Discrepancy> discrepancies;
    /// Counts where check_corrected and check_boeroeczky_ruzsa differ (witness included); expected empty.
    std::vector<integer> corrected_mismatches;

    std::size_t conjecture_only() const {
        return static_cast<std::size_t>(std::count_if(discrepancies.begin(), discrepancies.end(),
                                                      [](const Discrepancy& d) { return d.conjecture; }));
    }
    std::size_t conjecture_missed() const { return discrepancies.size() - conjecture_only(); }
    /// Whether the oracle sided with the Boeroeczky-Ruzsa criterion at every discrepancy.
    bool oracle_confirms_br() const {
        return std::all_of(discrepancies.begin(), discrepancies.end(),
                           [](const Discrepancy& d) { return d.oracle == d.boeroeczky_ruzsa; });
    }
};

inline CrossValidation cross_validate(integer n_max, unsigned jobs = 1) {
    require_positive(n_max);
    struct Event {
        bool mismatch;
        Discrepancy d;
    };
    const auto events = detail::parallel_blocks<Event>(n_max, jobs, [](integer lo, integer hi) {
        std::vector<Event> out;
        for (integer n = lo; n <= hi; ++n) {
            const HexParams p = decompose(n);
            const auto br = check_boeroeczky_ruzsa(n);
            const auto corrected = check_corrected(p);
            const bool agree = br.has_value() == corrected.has_value() &&
                               (!br || (br->k == corrected->k && br->l == corrected->l));
            if (!agree) {
                out.push_back(Event{true, Discrepancy{n}});
            }
            const bool conjecture = check_wegner_conjecture(p).has_value();
            if (conjecture != br.has_value()) {
                const SearchReport report = find_extremal(n);
                out.push_back(Event{false, Discrepancy{n, conjecture, br.has_value(), report.exceptional,
                                                       report.solutions.size()}});
            }
        }
        return out;
    });

    CrossValidation result;
    result.n_max = n_max;
    for (const auto& e : events) {
        if (e.mismatch) {
            result.corrected_mismatches.push_back(e.d.n);
        } else {
            result.discrepancies.push_back(e.d);
        }
    }
    return result;
}

}

#endif
