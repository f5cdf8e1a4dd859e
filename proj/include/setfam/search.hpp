#ifndef SETFAM_SEARCH_HPP
#define SETFAM_SEARCH_HPP

#include <cstdint>
#include <vector>

#include "setfam/core.hpp"

namespace setfam {

struct SearchBudget {
    std::uint64_t max_nodes = 1'000'000'000;
    int max_seconds = 900;
    int worker_count = 1;
};

enum class SearchStatus { verified, refuted, exhausted_budget };

const char* to_string(SearchStatus status);

// Outcome of an exhaustive engine. Everything except elapsed_ms is a pure
// function of the inputs: traversal order, pruning, and node accounting are
// fixed, so reports agree across runs and worker counts.
struct SearchReport {
    SearchStatus status = SearchStatus::verified;
    BigCount optimum;
    std::vector<Family> witnesses;
    std::uint64_t nodes_explored = 0;
    std::int64_t elapsed_ms = 0;
};

// Every maximal intersecting family of subsets of [n], 2 <= n <= 6. Each
// holds exactly one set from each complement pair {S, [n]\S} and is
// upward-closed; the list is sorted by member masks.
std::vector<Family> maximal_intersecting_families(int n);

// Maximum diversity over all intersecting families of subsets of [n],
// 2 <= n <= 6. Scans maximal families only: adding a set never decreases
// diversity, so the maximum is attained at a maximal family.
SearchReport max_diversity_nonuniform(int n);

// Maximum diversity over intersecting families of k-subsets of [n].
// For n = 2k the search runs over one-per-complement-pair selections
// (envelope binom(2k,k) <= 70); otherwise over all subsets of the
// binom(n,k) <= 24 candidate sets.
SearchReport max_diversity_uniform(int n, int k);

// Maximum of min(|A|,|B|) over disjoint cross-intersecting pairs of
// families of k-subsets of [n], binom(n,k) <= 20. Witnesses are [A, B].
// Subtrees under a fixed assignment frontier may run on several workers;
// each subtree is pruned only against its own best, so the merged report
// does not depend on worker_count.
SearchReport max_min_disjoint_cross(int n, int k, const SearchBudget& budget);

// Compares max_diversity_nonuniform(2k+1) against the formula
// sum_{i=k+1}^{2k} binom(2k,i); k <= 2.
SearchReport check_conjecture_odd(int k);

// Compares max_diversity_nonuniform(2k) against the half-binomial formula
// (with the -1 correction when k is a power of two); k <= 3.
SearchReport check_conjecture_even(int k);

}  // namespace setfam

#endif
