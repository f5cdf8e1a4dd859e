#ifndef SETFAM_CONSTRUCTIONS_HPP
#define SETFAM_CONSTRUCTIONS_HPP

#include <utility>
#include <vector>

#include "setfam/core.hpp"

namespace setfam {

// Disjoint cross-intersecting pair built from a threshold rule on the
// window [t+1]: the first family meets it in exactly {1} or exactly
// {2,...,t+1}, the second contains 1 and an element of {2,...,t+1}.
struct ThresholdPair {
    int n = 0;
    int k = 0;
    int t = 0;
    Family a_family;
    Family b_family;
    BigCount a_size;  // binom(n-t-1,k-1) + binom(n-t-1,k-t)
    BigCount b_size;  // binom(n-1,k-1) - binom(n-t-1,k-1)
};

// Member counts of a non-uniform family over a window [t], by cardinality:
// n_counts[i] is the number of i-sets, n_counts_missing[i][x-1] the number
// of i-sets avoiding element x.
struct LiftProfile {
    int window_t = 0;
    std::vector<std::size_t> n_counts;
    std::vector<std::vector<std::size_t>> n_counts_missing;
};

// Closed-form |F \ F_x| counts of a lifted family: one value per window
// element, plus the common value for every element outside the window.
struct LiftedMissing {
    std::vector<BigCount> inside;
    BigCount outside;
};

struct Theorem3Certificate {
    BigCount diversity_lb;
    BigCount target;  // binom(n-3,k-2)
    bool beats = false;
};

// All k-subsets of [n] containing x; size binom(n-1,k-1), diversity 0.
Family star(int n, int k, int x);

// Splits the star by alternating canonical rank: even ranks to the first
// half, odd ranks to the second. Sizes ceil/floor of binom(n-1,k-1)/2.
std::pair<Family, Family> star_split(int n, int k, int x);

ThresholdPair threshold_pair(int n, int k, int t);

// Moves the m canonically smallest members of the donor b into a. The
// donor must itself be intersecting, which keeps the output pair
// disjoint and cross-intersecting.
std::pair<Family, Family> rebalance_pair(const Family& a, const Family& b, std::size_t m);

// Ground set [2k]: assigns each complement pair {S, [2k]\S} wholly to one
// side, alternating by canonical pair rank. Output is disjoint and
// cross-intersecting with min size 2*floor(binom(2k-1,k-1)/2).
std::pair<Family, Family> complement_pairing(int k);

// k-subsets of [n] meeting [2r+1] in at least r+1 elements; intersecting.
Family d_family(int n, int k, int r);

// All subsets of [2k+1] of size at least k+1 (non-uniform, intersecting).
Family q_family(int k);

// A fixed intersecting family of 10 triples over [6]: every pair of
// elements is covered exactly twice, every element exactly 5 times.
Family g_base();

// All subsets of [t] containing some member of the base family.
Family upward_closure(const Family& base, int t);

// k-subsets of [n] whose trace on [t] lies in H; intersecting when H is.
Family lift_family(const Family& h, int t, int n, int k);

// Counts of make_lift_profile's family within its own window.
LiftProfile make_lift_profile(const Family& h);

// Closed-form |F \ F_x| of the lift of the profiled family into C([n],k):
// sum_i N_i(x)*binom(n-t,k-i) inside the window, sum_i N_i*binom(n-t-1,k-i)
// outside.
LiftedMissing lifted_missing_counts(const LiftProfile& profile, int n, int k);

// Exact diversity of the lifted closure of g_base() at (n,k), as the
// minimum of the closed-form missing counts, compared against
// binom(n-3,k-2).
Theorem3Certificate theorem3_certificate(int n, int k);

// Diversity targets of the small-n conjecture checks.
BigCount q_diversity_formula(int k);            // sum_{i=k+1}^{2k} binom(2k,i)
BigCount even_diversity_formula(int k);         // half-binomial form, -1 when k is a power of 2

}  // namespace setfam

#endif
