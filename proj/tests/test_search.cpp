#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "brute_force.hpp"
#include "groemer/search.hpp"

using namespace groemer;

namespace {

const BoundarySeq witness{{702, 717, 714, 741, 678, 753}};

std::vector<reference::Seq> as_arrays(const std::vector<BoundarySeq>& v) {
    std::vector<reference::Seq> out;
    for (const auto& s : v) {
        out.push_back(s.p);
    }
    return out;
}

}

TEST(SeqFormulas, CountExamples) {
    EXPECT_EQ(n_of_seq(702, 717, 714, 741), 1541551);
    EXPECT_EQ(n_of_seq(1, 1, 1, 1), 1);
    EXPECT_EQ(n_of_seq(2, 2, 2, 2), 7);
    EXPECT_THROW(n_of_seq(0, 1, 1, 1), std::invalid_argument);
    EXPECT_THROW(n_of_seq(4000000000LL, 4000000000LL, 4000000000LL, 4000000000LL), std::overflow_error);
}

TEST(SeqFormulas, PerimeterExamples) {
    EXPECT_EQ(perimeter_of_seq(702, 717, 714, 741), 4299);
    EXPECT_EQ(perimeter_of_seq(1, 1, 1, 1), 0);
    EXPECT_EQ(perimeter_of_seq(2, 2, 2, 2), 6);
}

TEST(SeqFormulas, RegularHexagon) {
    for (integer a = 1; a <= 500; ++a) {
        EXPECT_EQ(n_of_seq(a, a, a, a), 3 * a * a - 3 * a + 1);
        EXPECT_EQ(perimeter_of_seq(a, a, a, a), 6 * a - 6);
        EXPECT_EQ(perimeter_of_seq(a, a, a, a), p0_of_n(3 * a * a - 3 * a + 1));
    }
}

TEST(BoundsOk, Examples) {
    const HexParams p{717, 2, 0};
    EXPECT_TRUE(bounds_ok(witness, p));
    EXPECT_TRUE(bounds_ok(BoundarySeq{{1434, 717, 717, 717, 717, 717}}, p));
    EXPECT_FALSE(bounds_ok(BoundarySeq{{357, 717, 717, 717, 717, 717}}, p));
    EXPECT_TRUE(bounds_ok(BoundarySeq{{358, 717, 717, 717, 717, 717}}, p));
    EXPECT_THROW(bounds_ok(witness, HexParams{717, 0, 0}), std::invalid_argument);
}

TEST(BoundsOk, SideWindow) {
    const SideWindow w = side_window(HexParams{717, 2, 0});
    EXPECT_EQ(w.lo, 358);
    EXPECT_EQ(w.hi, 4299 + 6 - 5 * 358);
    EXPECT_EQ(side_window(HexParams{1, 4, 0}).lo, 1);
}

TEST(BoundsOk, NarrowWindowRejectsRealExtremalShapes) {
    // Sole extremal shapes of 5 and 120 discs, each with a side above 2a - c.
    const BoundarySeq five{{1, 2, 2, 2, 1, 3}};
    EXPECT_EQ(n_of_seq(five), 5);
    EXPECT_EQ(perimeter_of_seq(five), p0_of_n(5));
    EXPECT_FALSE(narrow_bounds_ok(five, decompose(5)));
    EXPECT_TRUE(bounds_ok(five, decompose(5)));

    const BoundarySeq hundred_twenty{{6, 7, 7, 7, 6, 8}};
    EXPECT_EQ(n_of_seq(hundred_twenty), 120);
    EXPECT_EQ(perimeter_of_seq(hundred_twenty), p0_of_n(120));
    EXPECT_FALSE(narrow_bounds_ok(hundred_twenty, decompose(120)));
    EXPECT_TRUE(narrow_bounds_ok(witness, decompose(1541551)));
}

TEST(CompleteSeq, Examples) {
    EXPECT_EQ(complete_seq(702, 717, 714, 741), witness);
    EXPECT_EQ(complete_seq(2, 2, 2, 2), (BoundarySeq{{2, 2, 2, 2, 2, 2}}));
    EXPECT_FALSE(complete_seq(1, 1, 5, 5).has_value());
}

TEST(Canonicalize, Examples) {
    EXPECT_EQ(canonicalize(BoundarySeq{{2, 2, 2, 2, 2, 2}}), (BoundarySeq{{2, 2, 2, 2, 2, 2}}));
    EXPECT_EQ(canonicalize(BoundarySeq{{3, 2, 2, 3, 2, 2}}), (BoundarySeq{{2, 2, 3, 2, 2, 3}}));
    EXPECT_EQ(canonicalize(witness), (BoundarySeq{{678, 753, 702, 717, 714, 741}}));
}

TEST(Canonicalize, IdempotentAndRotationInvariant) {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<integer> side(1, 40);
    for (int trial = 0; trial < 5000; ++trial) {
        const auto s = complete_seq(side(rng), side(rng), side(rng), side(rng));
        if (!s) {
            continue;
        }
        ASSERT_TRUE(closure_holds(*s));
        const BoundarySeq c = canonicalize(*s);
        ASSERT_EQ(canonicalize(c), c);
        ASSERT_TRUE(closure_holds(c));
        ASSERT_TRUE(closure_holds(mirror(*s)));
        for (std::size_t j = 0; j < 6; ++j) {
            ASSERT_EQ(canonicalize(rotate(*s, j)), c);
            ASSERT_EQ(canonicalize_dihedral(rotate(mirror(*s), j)), canonicalize_dihedral(*s));
        }
    }
}

TEST(FindExtremal, Counterexample) {
    const SearchReport r = find_extremal(1541551);
    EXPECT_FALSE(r.exceptional);
    EXPECT_TRUE(std::binary_search(r.solutions.begin(), r.solutions.end(), canonicalize(witness)));
    for (const auto& s : r.solutions) {
        EXPECT_TRUE(closure_holds(s));
        EXPECT_EQ(n_of_seq(s), 1541551);
        EXPECT_EQ(perimeter_of_seq(s), 4299);
        EXPECT_TRUE(bounds_ok(s, r.params));
        EXPECT_EQ(canonicalize(s), s);
    }
}

TEST(FindExtremal, Examples) {
    const SearchReport exceptional = find_extremal(121);
    EXPECT_TRUE(exceptional.exceptional);
    EXPECT_TRUE(exceptional.solutions.empty());

    const SearchReport seven = find_extremal(7);
    EXPECT_FALSE(seven.exceptional);
    ASSERT_EQ(seven.solutions.size(), 1U);
    EXPECT_EQ(seven.solutions.front(), (BoundarySeq{{2, 2, 2, 2, 2, 2}}));

    EXPECT_TRUE(find_extremal(2).algebraic_only);
    EXPECT_FALSE(find_extremal(7).algebraic_only);
    EXPECT_THROW(find_extremal(0), std::invalid_argument);
}

TEST(FindExtremal, FirstOnlyDecidesTheSame) {
    for (integer n = 1; n <= 3000; ++n) {
        const auto full = find_extremal(n);
        const auto quick = find_extremal(n, SearchOptions{false, true});
        ASSERT_EQ(full.exceptional, quick.exceptional) << n;
        if (!quick.exceptional) {
            ASSERT_EQ(quick.solutions.size(), 1U);
            ASSERT_TRUE(std::binary_search(full.solutions.begin(), full.solutions.end(), quick.solutions.front()));
        }
    }
}

TEST(FindExtremal, MirrorMergingOnlyShrinks) {
    for (integer n = 100; n <= 1500; ++n) {
        const auto plain = find_extremal(n);
        const auto merged = find_extremal(n, SearchOptions{true, false});
        ASSERT_LE(merged.solutions.size(), plain.solutions.size());
        ASSERT_EQ(merged.solutions.empty(), plain.solutions.empty());
        for (const auto& s : plain.solutions) {
            ASSERT_TRUE(std::binary_search(merged.solutions.begin(), merged.solutions.end(), canonicalize_dihedral(s)));
        }
    }
}

TEST(FindExtremal, MatchesNaiveOracleSmall) {
    for (integer n = 1; n <= 600; ++n) {
        ASSERT_EQ(as_arrays(find_extremal(n).solutions), reference::naive_extremal(n)) << n;
    }
}

TEST(FindExtremal, LowerSideBoundNeverBinds) {
    // Dropping (a-1)/2 <= p_i altogether finds the same shapes.
    for (integer n = 1; n <= 400; ++n) {
        ASSERT_EQ(as_arrays(find_extremal(n).solutions), reference::naive_extremal(n, true)) << n;
    }
}

TEST(FindExtremal, AgreesWithBoeroeczkyRuzsa) {
    for (integer n = 1; n <= 5000; ++n) {
        ASSERT_EQ(find_extremal(n, SearchOptions{false, true}).exceptional, check_boeroeczky_ruzsa(n).has_value())
            << n;
    }
}

TEST(Enumerate, Examples) {
    EXPECT_EQ(enumerate_exceptional(200, Criterion::boeroeczky_ruzsa), (std::vector<integer>{121, 163}));
    EXPECT_EQ(enumerate_exceptional(200, Criterion::corrected), (std::vector<integer>{121, 163}));
    EXPECT_EQ(enumerate_exceptional(200, Criterion::oracle), (std::vector<integer>{121, 163}));
    EXPECT_TRUE(enumerate_exceptional(100, Criterion::oracle).empty());
    EXPECT_THROW(enumerate_exceptional(0, Criterion::oracle), std::invalid_argument);
}

TEST(Enumerate, DeterministicAcrossJobs) {
    for (auto c : {Criterion::boeroeczky_ruzsa, Criterion::wegner_conjecture, Criterion::corrected}) {
        const auto one = enumerate_exceptional(50000, c, 1);
        EXPECT_EQ(enumerate_exceptional(50000, c, 3), one);
        EXPECT_EQ(enumerate_exceptional(50000, c, 8), one);
        EXPECT_TRUE(std::is_sorted(one.begin(), one.end()));
    }
    EXPECT_EQ(enumerate_exceptional(3, Criterion::boeroeczky_ruzsa, 8), std::vector<integer>{});
}

TEST(Enumerate, ConjectureAndBrDisagreeAtCounterexample) {
    const auto wegner = enumerate_exceptional(1600000, Criterion::wegner_conjecture, 2);
    const auto br = enumerate_exceptional(1600000, Criterion::boeroeczky_ruzsa, 2);
    EXPECT_TRUE(std::binary_search(wegner.begin(), wegner.end(), 1541551));
    EXPECT_FALSE(std::binary_search(br.begin(), br.end(), 1541551));
}

TEST(CrossValidate, SmallRanges) {
    EXPECT_TRUE(cross_validate(100).discrepancies.empty());
    const auto at121 = cross_validate(121);
    EXPECT_TRUE(at121.discrepancies.empty());
    EXPECT_TRUE(at121.corrected_mismatches.empty());
    EXPECT_TRUE(cross_validate(200000, 4).discrepancies.empty());
}

TEST(CrossValidate, ParameterFamilies) {
    // Disagreements need b = 2 and l >= 3, i.e. a - c = 669 or 717 (mod 729).
    const integer missed = recompose(HexParams{669, 2, 0});
    const integer claimed = recompose(HexParams{717, 2, 0});
    EXPECT_TRUE(check_boeroeczky_ruzsa(missed).has_value());
    EXPECT_FALSE(check_wegner_conjecture(decompose(missed)).has_value());
    EXPECT_TRUE(find_extremal(missed).exceptional);
    EXPECT_FALSE(check_boeroeczky_ruzsa(claimed).has_value());
    EXPECT_TRUE(check_wegner_conjecture(decompose(claimed)).has_value());
}
