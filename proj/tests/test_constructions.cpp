#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "setfam/constructions.hpp"
#include "setfam/core.hpp"

using setfam::BigCount;
using setfam::Family;
using setfam::binom;
using oracles::family_of;

TEST_CASE("star holds every k-set through its center") {
    CHECK(setfam::star(4, 2, 1) == family_of(4, {{1, 2}, {1, 3}, {1, 4}}));
    CHECK(BigCount(setfam::star(6, 3, 2).size()) == binom(5, 2));
    CHECK(setfam::diversity(setfam::star(6, 3, 1)) == 0);
    CHECK(setfam::diversity(setfam::star(9, 4, 7)) == 0);

    for (int n = 1; n <= 9; ++n) {
        for (int k = 1; k <= n; ++k) {
            for (int x = 1; x <= n; ++x) {
                const Family s = setfam::star(n, k, x);
                REQUIRE(BigCount(s.size()) == binom(n - 1, k - 1));
                for (std::size_t i = 0; i < s.size(); ++i) {
                    REQUIRE(s.member(i).contains(x));
                    REQUIRE(s.member(i).cardinality() == k);
                }
            }
        }
    }

    CHECK_THROWS_AS(setfam::star(4, 0, 1), std::domain_error);
    CHECK_THROWS_AS(setfam::star(4, 5, 1), std::domain_error);
    CHECK_THROWS_AS(setfam::star(4, 2, 0), std::domain_error);
    CHECK_THROWS_AS(setfam::star(4, 2, 5), std::domain_error);
}

TEST_CASE("star_split halves the star evenly and stays cross-intersecting") {
    const auto [s1, s2] = setfam::star_split(4, 2, 1);
    CHECK(s1.size() == 2);
    CHECK(s2.size() == 1);

    const auto [t1, t2] = setfam::star_split(6, 3, 1);
    CHECK(t1.size() == 5);
    CHECK(t2.size() == 5);
    CHECK(setfam::are_disjoint_families(t1, t2));
    CHECK(setfam::are_cross_intersecting(t1, t2));

    for (int n = 2; n <= 9; ++n) {
        for (int k = 1; k <= n; ++k) {
            const auto [a, b] = setfam::star_split(n, k, 2);
            const Family whole = setfam::star(n, k, 2);
            REQUIRE(a.size() == (whole.size() + 1) / 2);
            REQUIRE(b.size() == whole.size() / 2);
            REQUIRE(setfam::are_disjoint_families(a, b));
            std::vector<std::uint64_t> merged = a.masks();
            merged.insert(merged.end(), b.masks().begin(), b.masks().end());
            REQUIRE(Family(n, merged) == whole);
        }
    }
}

TEST_CASE("threshold_pair sizes and membership agree with the closed forms") {
    const auto p632 = setfam::threshold_pair(6, 3, 2);
    CHECK(p632.a_size == 6);
    CHECK(p632.b_size == 7);
    CHECK(BigCount(p632.a_family.size()) == p632.a_size);
    CHECK(BigCount(p632.b_family.size()) == p632.b_size);

    const auto p832 = setfam::threshold_pair(8, 3, 2);
    CHECK(p832.a_size == 15);
    CHECK(p832.b_size == 11);
    CHECK(p832.a_size + p832.b_size > binom(7, 2));

    // t = k-1 collapses the first closed form to binom(n-k,k-1) + (n-k).
    const auto p943 = setfam::threshold_pair(9, 4, 3);
    CHECK(p943.a_size == 15);
    CHECK(p943.a_size == binom(5, 3) + 5);
    CHECK(p943.b_size == 46);

    for (int n = 3; n <= 12; ++n) {
        for (int k = 2; k <= n; ++k) {
            for (int t = 2; t <= k && t + 1 <= n; ++t) {
                const auto pair = setfam::threshold_pair(n, k, t);
                REQUIRE(BigCount(pair.a_family.size()) == pair.a_size);
                REQUIRE(BigCount(pair.b_family.size()) == pair.b_size);
                REQUIRE(pair.a_size == binom(n - t - 1, k - 1) + binom(n - t - 1, k - t));
                REQUIRE(pair.b_size == binom(n - 1, k - 1) - binom(n - t - 1, k - 1));

                // Membership rule, re-derived from scratch on the window [t+1].
                const std::uint64_t window = setfam::full_mask(t + 1);
                const std::uint64_t tail = window & ~std::uint64_t{1};
                const setfam::Family candidates = setfam::enumerate_k_subsets(n, k);
                for (std::uint64_t m : candidates.masks()) {
                    const std::uint64_t trace = m & window;
                    const bool in_a = trace == 1 || trace == tail;
                    const bool in_b = !in_a && (trace & 1) != 0 && (trace & tail) != 0;
                    REQUIRE(pair.a_family.contains(m) == in_a);
                    REQUIRE(pair.b_family.contains(m) == in_b);
                }

                if (n <= 10) {
                    REQUIRE(setfam::are_disjoint_families(pair.a_family, pair.b_family));
                    REQUIRE(setfam::are_cross_intersecting(pair.a_family, pair.b_family));
                }
                if (binom(n - t - 1, k - t) > 0) {
                    REQUIRE(pair.a_size + pair.b_size > binom(n - 1, k - 1));
                }
            }
        }
    }

    CHECK_THROWS_AS(setfam::threshold_pair(6, 3, 1), std::domain_error);
    CHECK_THROWS_AS(setfam::threshold_pair(6, 3, 4), std::domain_error);
    CHECK_THROWS_AS(setfam::threshold_pair(3, 3, 3), std::domain_error);
}

TEST_CASE("rebalance_pair moves the smallest donor members") {
    const auto base = setfam::threshold_pair(9, 4, 3);
    const auto [a, b] = setfam::rebalance_pair(base.a_family, base.b_family, 15);
    CHECK(a.size() == 30);
    CHECK(b.size() == 31);
    CHECK(BigCount(std::min(a.size(), b.size())) > binom(8, 3) / 2);
    CHECK(setfam::are_disjoint_families(a, b));
    CHECK(setfam::are_cross_intersecting(a, b));

    // Exactly the 15 canonically smallest members of B moved across.
    for (std::size_t i = 0; i < base.b_family.size(); ++i) {
        const std::uint64_t m = base.b_family.masks()[i];
        CHECK(a.contains(m) == (i < 15));
        CHECK(b.contains(m) == (i >= 15));
    }

    const auto [same_a, same_b] = setfam::rebalance_pair(base.a_family, base.b_family, 0);
    CHECK(same_a == base.a_family);
    CHECK(same_b == base.b_family);

    const auto [all_a, none_b] =
        setfam::rebalance_pair(base.a_family, base.b_family, base.b_family.size());
    CHECK(all_a.size() == base.a_family.size() + base.b_family.size());
    CHECK(none_b.empty());
    CHECK(setfam::are_cross_intersecting(all_a, none_b));

    CHECK_THROWS_AS(
        setfam::rebalance_pair(base.a_family, base.b_family, base.b_family.size() + 1),
        std::domain_error);
    CHECK_THROWS_AS(
        setfam::rebalance_pair(family_of(4, {{1, 2}}), family_of(4, {{1, 3}, {2, 4}}), 1),
        std::invalid_argument);
}

TEST_CASE("complement_pairing keeps complement pairs together") {
    const auto [a3, b3] = setfam::complement_pairing(3);
    CHECK(BigCount(a3.size()) == binom(5, 2));
    CHECK(BigCount(b3.size()) == binom(5, 2));

    const auto [a2, b2] = setfam::complement_pairing(2);
    CHECK(a2.size() == 4);
    CHECK(b2.size() == 2);

    for (int k = 2; k <= 5; ++k) {
        const auto [a, b] = setfam::complement_pairing(k);
        const int n = 2 * k;
        REQUIRE(setfam::are_disjoint_families(a, b));
        REQUIRE(setfam::are_cross_intersecting(a, b));

        // Together the halves cover every k-subset of [2k].
        std::vector<std::uint64_t> merged = a.masks();
        merged.insert(merged.end(), b.masks().begin(), b.masks().end());
        REQUIRE(Family(n, merged) == setfam::enumerate_k_subsets(n, k));

        const std::uint64_t full = setfam::full_mask(n);
        for (std::uint64_t m : a.masks()) {
            REQUIRE(a.contains(full & ~m));
        }
        for (std::uint64_t m : b.masks()) {
            REQUIRE(b.contains(full & ~m));
        }

        const BigCount pairs = binom(n - 1, k - 1);
        const BigCount min_size = BigCount(std::min(a.size(), b.size()));
        REQUIRE(min_size == 2 * (pairs / 2));
    }

    CHECK_THROWS_AS(setfam::complement_pairing(1), std::domain_error);
    CHECK_THROWS_AS(setfam::complement_pairing(33), std::domain_error);
}

TEST_CASE("d_family applies its window quota") {
    const Family d631 = setfam::d_family(6, 3, 1);
    CHECK(d631.size() == 10);
    CHECK(setfam::diversity(d631) == 3);
    CHECK(setfam::is_intersecting(d631));

    CHECK(setfam::d_family(5, 2, 1) == family_of(5, {{1, 2}, {1, 3}, {2, 3}}));
    CHECK(setfam::diversity(setfam::d_family(5, 2, 1)) == binom(2, 0));

    const Family d732 = setfam::d_family(7, 3, 2);
    CHECK(setfam::is_intersecting(d732));
    for (std::size_t i = 0; i < d732.size(); ++i) {
        CHECK(std::popcount(d732.masks()[i] & setfam::full_mask(5)) >= 3);
    }

    // With r = 1 the diversity is binom(n-3,k-2) on the EKR range.
    for (int n = 5; n <= 12; ++n) {
        for (int k = 2; k <= 5; ++k) {
            if (n < 2 * k) {
                continue;
            }
            REQUIRE(setfam::diversity(setfam::d_family(n, k, 1)) == binom(n - 3, k - 2));
            REQUIRE(setfam::is_intersecting(setfam::d_family(n, k, 1)));
        }
    }

    CHECK_THROWS_AS(setfam::d_family(6, 3, 0), std::domain_error);
    CHECK_THROWS_AS(setfam::d_family(6, 3, 3), std::domain_error);
    CHECK_THROWS_AS(setfam::d_family(4, 3, 2), std::domain_error);
}

TEST_CASE("q_family stacks the large subsets of an odd ground set") {
    const Family q2 = setfam::q_family(2);
    CHECK(q2.size() == 16);
    CHECK(setfam::diversity(q2) == 5);
    CHECK(setfam::diversity(q2) == setfam::q_diversity_formula(2));
    CHECK(setfam::is_intersecting(q2));

    const Family q1 = setfam::q_family(1);
    CHECK(q1 == family_of(3, {{1, 2}, {1, 3}, {2, 3}, {1, 2, 3}}));
    CHECK(setfam::diversity(q1) == 1);

    for (int k = 1; k <= 5; ++k) {
        const Family q = setfam::q_family(k);
        BigCount expected_size = 0;
        for (int i = k + 1; i <= 2 * k + 1; ++i) {
            expected_size += binom(2 * k + 1, i);
        }
        REQUIRE(BigCount(q.size()) == expected_size);
        REQUIRE(setfam::is_intersecting(q));
        REQUIRE(setfam::diversity(q) == setfam::q_diversity_formula(k));
    }

    CHECK_THROWS_AS(setfam::q_family(0), std::domain_error);
}

TEST_CASE("the ten-triple base family is a doubly balanced intersecting design") {
    const Family g = setfam::g_base();
    REQUIRE(g.size() == 10);
    REQUIRE(g.ground_n() == 6);
    CHECK(setfam::is_intersecting(g));

    for (const auto& d : setfam::degree_profile(g)) {
        CHECK(d == 5);
    }

    for (int x = 1; x <= 6; ++x) {
        for (int y = x + 1; y <= 6; ++y) {
            const std::uint64_t pair_mask = setfam::mask_from_elements({x, y}, 6);
            int covered = 0;
            for (std::uint64_t m : g.masks()) {
                if ((m & pair_mask) == pair_mask) {
                    ++covered;
                }
            }
            CHECK(covered == 2);
        }
    }
}

TEST_CASE("upward_closure of the base family has the documented profile") {
    const Family closure = setfam::upward_closure(setfam::g_base(), 6);
    CHECK(closure.size() == 32);
    CHECK(setfam::is_intersecting(closure));
    CHECK(setfam::diversity(closure) == 11);

    const auto profile = setfam::make_lift_profile(closure);
    REQUIRE(profile.window_t == 6);
    CHECK(profile.n_counts == std::vector<std::size_t>{0, 0, 0, 10, 15, 6, 1});
    for (int x = 1; x <= 6; ++x) {
        CHECK(profile.n_counts_missing[3][static_cast<std::size_t>(x - 1)] == 5);
        CHECK(profile.n_counts_missing[4][static_cast<std::size_t>(x - 1)] == 5);
        CHECK(profile.n_counts_missing[5][static_cast<std::size_t>(x - 1)] == 1);
        CHECK(profile.n_counts_missing[6][static_cast<std::size_t>(x - 1)] == 0);
    }

    for (const auto& d : setfam::degree_profile(closure)) {
        CHECK(d == 21);
    }

    // Closures are upward closed inside the window.
    for (std::uint64_t m : closure.masks()) {
        for (int x = 1; x <= 6; ++x) {
            const std::uint64_t wider = m | (std::uint64_t{1} << (x - 1));
            REQUIRE(closure.contains(wider));
        }
    }

    const Family tiny = setfam::upward_closure(family_of(3, {{1}}), 3);
    CHECK(tiny == family_of(3, {{1}, {1, 2}, {1, 3}, {1, 2, 3}}));

    CHECK_THROWS_AS(setfam::upward_closure(family_of(4, {{4}}), 3), std::domain_error);
}

TEST_CASE("lift_family plants window traces into a uniform layer") {
    const Family closure = setfam::upward_closure(setfam::g_base(), 6);
    const Family lifted = setfam::lift_family(closure, 6, 7, 4);

    std::size_t avoiding_last = 0;
    for (std::uint64_t m : lifted.masks()) {
        REQUIRE(closure.contains(m & setfam::full_mask(6)));
        if ((m & (std::uint64_t{1} << 6)) == 0) {
            ++avoiding_last;
        }
    }
    CHECK(avoiding_last == 15);

    CHECK(setfam::lift_family(family_of(1, {{1}}), 1, 6, 3) == setfam::star(6, 3, 1));

    // Lifting preserves the intersecting property.
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<std::uint64_t> kept;
        for (std::uint64_t m = 1; m <= setfam::full_mask(5); ++m) {
            if (rng() % 3 != 0) {
                continue;
            }
            bool meets_all = true;
            for (std::uint64_t other : kept) {
                if ((m & other) == 0) {
                    meets_all = false;
                    break;
                }
            }
            if (meets_all) {
                kept.push_back(m);
            }
        }
        const Family h(5, kept);
        REQUIRE(setfam::is_intersecting(h));
        CHECK(setfam::is_intersecting(setfam::lift_family(h, 5, 9, 4)));
    }

    CHECK_THROWS_AS(setfam::lift_family(closure, 5, 9, 4), std::domain_error);
    CHECK_THROWS_AS(setfam::lift_family(closure, 6, 5, 3), std::domain_error);
}

TEST_CASE("lifted_missing_counts equals enumeration on the lifted family") {
    const Family closure = setfam::upward_closure(setfam::g_base(), 6);
    const auto profile = setfam::make_lift_profile(closure);

    const auto counts74 = setfam::lifted_missing_counts(profile, 7, 4);
    CHECK(counts74.outside == 15);
    CHECK(counts74.inside[0] == 10);

    for (int n = 7; n <= 10; ++n) {
        for (int k = 3; k <= 5; ++k) {
            const Family lifted = setfam::lift_family(closure, 6, n, k);
            const auto counts = setfam::lifted_missing_counts(profile, n, k);
            const auto degrees = setfam::degree_profile(lifted);
            const BigCount total(lifted.size());
            for (int x = 1; x <= 6; ++x) {
                REQUIRE(counts.inside[static_cast<std::size_t>(x - 1)] ==
                        total - degrees[static_cast<std::size_t>(x - 1)]);
            }
            for (int x = 7; x <= n; ++x) {
                REQUIRE(counts.outside == total - degrees[static_cast<std::size_t>(x - 1)]);
            }
        }
    }

    setfam::LiftProfile empty_profile;
    empty_profile.window_t = 3;
    empty_profile.n_counts.assign(4, 0);
    empty_profile.n_counts_missing.assign(4, std::vector<std::size_t>(3, 0));
    const auto zero = setfam::lifted_missing_counts(empty_profile, 8, 3);
    CHECK(zero.outside == 0);
    for (const auto& c : zero.inside) {
        CHECK(c == 0);
    }
}

TEST_CASE("theorem3_certificate separates the two alpha regimes") {
    const auto wide = setfam::theorem3_certificate(300, 90);
    CHECK(wide.beats);
    CHECK(wide.target == binom(297, 88));

    const auto narrow = setfam::theorem3_certificate(300, 30);
    CHECK_FALSE(narrow.beats);

    // At small sizes the certificate is the enumerated diversity itself.
    for (int n = 7; n <= 10; ++n) {
        for (int k = 3; k <= 4; ++k) {
            const auto cert = setfam::theorem3_certificate(n, k);
            const Family lifted =
                setfam::lift_family(setfam::upward_closure(setfam::g_base(), 6), 6, n, k);
            REQUIRE(cert.diversity_lb == setfam::diversity(lifted));
        }
    }

    CHECK_THROWS_AS(setfam::theorem3_certificate(6, 3), std::domain_error);
    CHECK_THROWS_AS(setfam::theorem3_certificate(10, 1), std::domain_error);
}

TEST_CASE("conjecture diversity formulas") {
    CHECK(setfam::q_diversity_formula(1) == 1);
    CHECK(setfam::q_diversity_formula(2) == 5);
    CHECK(setfam::q_diversity_formula(3) == 22);

    CHECK(setfam::even_diversity_formula(1) == 0);
    CHECK(setfam::even_diversity_formula(2) == 2);
    CHECK(setfam::even_diversity_formula(3) == 11);
    // k = 4 is a power of two again: (binom(7,3)-1)/2 + 21 + 7 + 1.
    CHECK(setfam::even_diversity_formula(4) == 46);

    CHECK_THROWS_AS(setfam::q_diversity_formula(0), std::domain_error);
    CHECK_THROWS_AS(setfam::even_diversity_formula(0), std::domain_error);
}
