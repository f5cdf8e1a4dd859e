#include "setfam/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstddef>
#include <thread>

#include "setfam/constructions.hpp"

namespace setfam {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start)
        .count();
}

// Depth-first assignment over complement pairs {S, [n]\S} of 2^[n].
// Adding a set forces every set disjoint from it out and, to keep one
// member per pair, forces the complements of the excluded sets in. Leaves
// are exactly the maximal intersecting families.
class MaximalEnumerator {
public:
    explicit MaximalEnumerator(int n) : full_(full_mask(n)) {
        disjoint_.resize(full_ + 1);
        for (std::uint64_t m = 0; m <= full_; ++m) {
            const std::uint64_t rest = full_ ^ m;
            std::uint64_t acc = 1;  // the empty set is disjoint from everything
            for (std::uint64_t s = rest; s != 0; s = (s - 1) & rest) {
                acc |= std::uint64_t(1) << s;
            }
            disjoint_[m] = acc;
        }
        for (std::uint64_t m = 0; m <= full_; ++m) {
            if (m < (full_ ^ m)) {
                reps_.push_back(m);
            }
        }
    }

    // leaf receives a bitset over mask values: bit m set iff m is a member.
    template <typename Leaf>
    std::uint64_t enumerate(Leaf&& leaf) {
        std::uint64_t nodes = 0;
        dfs(State{}, 0, nodes, leaf);
        return nodes;
    }

private:
    struct State {
        std::uint64_t in = 0;
        std::uint64_t out = 0;
    };

    bool assign(State& st, std::uint64_t first) const {
        std::array<std::uint64_t, 80> work{};
        std::size_t top = 0;
        work[top++] = first;
        while (top > 0) {
            const std::uint64_t m = work[--top];
            const std::uint64_t bit = std::uint64_t(1) << m;
            if (st.in & bit) {
                continue;
            }
            if (st.out & bit) {
                return false;
            }
            st.in |= bit;
            const std::uint64_t dis = disjoint_[m];
            if (st.in & dis) {
                return false;
            }
            std::uint64_t fresh = dis & ~st.out;
            st.out |= dis;
            while (fresh != 0) {
                const int s = std::countr_zero(fresh);
                fresh &= fresh - 1;
                work[top++] = full_ ^ static_cast<std::uint64_t>(s);
            }
        }
        return true;
    }

    template <typename Leaf>
    void dfs(const State& st, std::size_t from, std::uint64_t& nodes, Leaf&& leaf) const {
        ++nodes;
        const std::uint64_t decided = st.in | st.out;
        std::size_t idx = from;
        while (idx < reps_.size() &&
               (decided & (std::uint64_t(1) << reps_[idx])) != 0) {
            ++idx;
        }
        if (idx == reps_.size()) {
            leaf(st.in);
            return;
        }
        State pick = st;
        if (assign(pick, reps_[idx])) {
            dfs(pick, idx + 1, nodes, leaf);
        }
        State other = st;
        if (assign(other, full_ ^ reps_[idx])) {
            dfs(other, idx + 1, nodes, leaf);
        }
    }

    std::uint64_t full_;
    std::vector<std::uint64_t> disjoint_;  // indexed by mask, bitset over masks
    std::vector<std::uint64_t> reps_;      // smaller member of each pair
};

void check_nonuniform_envelope(int n) {
    if (n < 2 || n > 6) {
        throw resource_error("maximal-family enumeration limited to 2 <= n <= 6");
    }
}

std::vector<std::uint64_t> bitset_to_masks(std::uint64_t bits) {
    std::vector<std::uint64_t> masks;
    masks.reserve(static_cast<std::size_t>(std::popcount(bits)));
    while (bits != 0) {
        masks.push_back(static_cast<std::uint64_t>(std::countr_zero(bits)));
        bits &= bits - 1;
    }
    return masks;
}

// One-per-complement-pair selections of C([2k],k): two k-sets of [2k] are
// disjoint exactly when complementary, so every selection is intersecting
// and every maximal intersecting k-uniform family is such a selection.
class PairSelectionSearch {
public:
    PairSelectionSearch(int n, int k) : n_(n) {
        const std::uint64_t full = full_mask(n);
        const Family candidates = enumerate_k_subsets(n, k);
        for (const std::uint64_t m : candidates.masks()) {
            if (m < (full ^ m)) {
                reps_.push_back(m);
            }
        }
        pair_count_ = static_cast<int>(reps_.size());
        full_ = full;
    }

    void run(SearchReport& report) {
        degrees_.assign(static_cast<std::size_t>(n_), 0);
        path_.assign(static_cast<std::size_t>(pair_count_), 0);
        best_ = -1;
        nodes_ = 0;
        dfs(0, 0);
        report.optimum = best_;
        report.nodes_explored = nodes_;
        report.witnesses = {Family(n_, best_masks_)};
    }

private:
    int bumped_max(std::uint64_t mask, int current) const {
        int result = current;
        std::uint64_t rest = mask;
        while (rest != 0) {
            const int x = std::countr_zero(rest);
            rest &= rest - 1;
            result = std::max(result, degrees_[static_cast<std::size_t>(x)] + 1);
        }
        return result;
    }

    void apply(std::uint64_t mask, int delta) {
        std::uint64_t rest = mask;
        while (rest != 0) {
            const int x = std::countr_zero(rest);
            rest &= rest - 1;
            degrees_[static_cast<std::size_t>(x)] += delta;
        }
    }

    void dfs(int depth, int max_degree) {
        ++nodes_;
        const int floor_best = pair_count_ - std::max(max_degree, (pair_count_ + 1) / 2);
        if (floor_best <= best_) {
            return;
        }
        if (depth == pair_count_) {
            best_ = pair_count_ - max_degree;
            best_masks_ = path_;
            return;
        }
        const std::uint64_t rep = reps_[static_cast<std::size_t>(depth)];
        const std::uint64_t other = full_ ^ rep;
        const int rep_max = bumped_max(rep, max_degree);
        const int other_max = bumped_max(other, max_degree);
        // Balanced choice first: growing the currently lighter elements
        // reaches low-max-degree leaves sooner.
        const bool rep_first = rep_max <= other_max;
        for (int pass = 0; pass < 2; ++pass) {
            const std::uint64_t choice = (pass == 0) == rep_first ? rep : other;
            apply(choice, 1);
            path_[static_cast<std::size_t>(depth)] = choice;
            dfs(depth + 1, choice == rep ? rep_max : other_max);
            apply(choice, -1);
        }
    }

    int n_;
    std::uint64_t full_ = 0;
    std::vector<std::uint64_t> reps_;
    int pair_count_ = 0;
    std::vector<int> degrees_;
    std::vector<std::uint64_t> path_;
    std::vector<std::uint64_t> best_masks_;
    int best_ = -1;
    std::uint64_t nodes_ = 0;
};

// Include/exclude search over all binom(n,k) candidate sets with the
// intersecting-prefix constraint.
class UniformSubsetSearch {
public:
    UniformSubsetSearch(int n, int k) : n_(n), k_(k) {
        sets_ = enumerate_k_subsets(n, k).masks();
        const std::size_t count = sets_.size();
        disjoint_.assign(count, 0);
        for (std::size_t i = 0; i < count; ++i) {
            for (std::size_t j = 0; j < count; ++j) {
                if (i != j && (sets_[i] & sets_[j]) == 0) {
                    disjoint_[i] |= std::uint32_t(1) << j;
                }
            }
        }
    }

    void run(SearchReport& report) {
        degrees_.assign(static_cast<std::size_t>(n_), 0);
        best_ = -1;
        nodes_ = 0;
        chosen_.clear();
        dfs(0, 0, 0);
        report.optimum = best_;
        report.nodes_explored = nodes_;
        report.witnesses = {Family(n_, best_masks_)};
    }

private:
    void dfs(std::size_t depth, std::uint32_t chosen_bits, int max_degree) {
        ++nodes_;
        const int total = static_cast<int>(sets_.size());
        const int cap = static_cast<int>(chosen_.size()) + (total - static_cast<int>(depth));
        const int degree_floor = (k_ * cap + n_ - 1) / n_;
        if (cap - std::max(max_degree, degree_floor) <= best_) {
            return;
        }
        if (depth == sets_.size()) {
            best_ = static_cast<int>(chosen_.size()) - max_degree;
            best_masks_ = chosen_;
            return;
        }
        if ((disjoint_[depth] & chosen_bits) == 0) {
            const std::uint64_t mask = sets_[depth];
            int bumped = max_degree;
            for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
                const int x = std::countr_zero(rest);
                bumped = std::max(bumped, ++degrees_[static_cast<std::size_t>(x)]);
            }
            chosen_.push_back(mask);
            dfs(depth + 1, chosen_bits | (std::uint32_t(1) << depth), bumped);
            chosen_.pop_back();
            for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
                --degrees_[static_cast<std::size_t>(std::countr_zero(rest))];
            }
        }
        dfs(depth + 1, chosen_bits, max_degree);
    }

    int n_;
    int k_;
    std::vector<std::uint64_t> sets_;
    std::vector<std::uint32_t> disjoint_;
    std::vector<int> degrees_;
    std::vector<std::uint64_t> chosen_;
    std::vector<std::uint64_t> best_masks_;
    int best_ = -1;
    std::uint64_t nodes_ = 0;
};

// State search for disjoint cross-intersecting pairs: every candidate set
// is assigned to A, to B, or to neither. The first q assignments form a
// frontier of independent subtrees; each subtree keeps its own incumbent,
// so node counts and the merged result are identical however the subtrees
// are scheduled.
class CrossPairSearch {
public:
    CrossPairSearch(int n, int k, const SearchBudget& budget)
        : n_(n), budget_(budget) {
        if (budget.max_nodes == 0 || budget.max_seconds <= 0 || budget.worker_count <= 0) {
            throw std::domain_error("search budget fields must be positive");
        }
        if (binom(n, k) > 20) {
            throw resource_error("cross-pair search limited to binom(n,k) <= 20");
        }
        const Family candidates = enumerate_k_subsets(n, k);
        const std::vector<std::uint64_t>& masks = candidates.masks();
        if (n == 2 * k) {
            // Pair-adjacent order: with sets S and [2k]\S consecutive, the
            // three-state branching visits the seven feasible joint states
            // of each complement pair.
            const std::uint64_t full = full_mask(n);
            for (const std::uint64_t m : masks) {
                if (m < (full ^ m)) {
                    order_.push_back(m);
                    order_.push_back(full ^ m);
                }
            }
        } else {
            order_ = masks;
        }
        const std::size_t count = order_.size();
        disjoint_.assign(count, 0);
        for (std::size_t i = 0; i < count; ++i) {
            for (std::size_t j = 0; j < count; ++j) {
                if (i != j && (order_[i] & order_[j]) == 0) {
                    disjoint_[i] |= std::uint32_t(1) << j;
                }
            }
        }
    }

    SearchReport run() {
        start_ = Clock::now();
        build_frontier();
        results_.assign(cells_.size(), CellResult{});
        slice_ = std::max<std::uint64_t>(1, budget_.max_nodes / std::max<std::size_t>(1, cells_.size()));

        std::atomic<std::size_t> cursor{0};
        auto drain = [&] {
            for (;;) {
                const std::size_t i = cursor.fetch_add(1);
                if (i >= cells_.size()) {
                    break;
                }
                run_cell(cells_[i], results_[i]);
            }
        };
        const int workers = static_cast<int>(
            std::min<std::size_t>(static_cast<std::size_t>(budget_.worker_count),
                                  std::max<std::size_t>(1, cells_.size())));
        if (workers <= 1) {
            drain();
        } else {
            std::vector<std::thread> pool;
            pool.reserve(static_cast<std::size_t>(workers) - 1);
            for (int w = 1; w < workers; ++w) {
                pool.emplace_back(drain);
            }
            drain();
            for (std::thread& t : pool) {
                t.join();
            }
        }
        return merge();
    }

private:
    struct Cell {
        std::uint32_t a_bits = 0;
        std::uint32_t b_bits = 0;
        int a_size = 0;
        int b_size = 0;
        bool any_assigned = false;
    };

    struct CellResult {
        int best = -1;
        std::uint32_t a_bits = 0;
        std::uint32_t b_bits = 0;
        std::uint64_t nodes = 0;
        bool exhausted = false;
    };

    void build_frontier() {
        frontier_depth_ = static_cast<int>(std::min<std::size_t>(order_.size(), 4));
        std::size_t combos = 1;
        for (int i = 0; i < frontier_depth_; ++i) {
            combos *= 3;
        }
        for (std::size_t code = 0; code < combos; ++code) {
            Cell cell;
            std::size_t digits = code;
            bool ok = true;
            for (int i = 0; i < frontier_depth_ && ok; ++i, digits /= 3) {
                const std::uint32_t bit = std::uint32_t(1) << i;
                switch (digits % 3) {
                    case 0:
                        break;
                    case 1:
                        ok = (disjoint_[static_cast<std::size_t>(i)] & cell.b_bits) == 0;
                        cell.a_bits |= bit;
                        ++cell.a_size;
                        cell.any_assigned = true;
                        break;
                    default:
                        // A/B swap symmetry: the first assigned set goes to A.
                        ok = cell.any_assigned &&
                             (disjoint_[static_cast<std::size_t>(i)] & cell.a_bits) == 0;
                        cell.b_bits |= bit;
                        ++cell.b_size;
                        cell.any_assigned = true;
                        break;
                }
            }
            if (ok) {
                cells_.push_back(cell);
            }
        }
    }

    void run_cell(const Cell& cell, CellResult& result) {
        dfs(frontier_depth_, cell.a_bits, cell.b_bits, cell.a_size, cell.b_size,
            cell.any_assigned, result);
    }

    void dfs(int depth, std::uint32_t a_bits, std::uint32_t b_bits, int a_size,
             int b_size, bool any, CellResult& result) {
        if (result.exhausted) {
            return;
        }
        if (result.nodes >= slice_) {
            result.exhausted = true;
            return;
        }
        ++result.nodes;
        if ((result.nodes & 0xFFF) == 0 &&
            ms_since(start_) > std::int64_t(budget_.max_seconds) * 1000) {
            result.exhausted = true;
            return;
        }
        const int total = static_cast<int>(order_.size());
        const int rem = total - depth;
        const int lo = std::min(a_size, b_size);
        const int ub = std::min(lo + rem, (a_size + b_size + rem) / 2);
        if (ub <= result.best) {
            return;
        }
        if (depth == total) {
            result.best = lo;
            result.a_bits = a_bits;
            result.b_bits = b_bits;
            return;
        }
        const std::uint32_t bit = std::uint32_t(1) << depth;
        const std::size_t d = static_cast<std::size_t>(depth);
        const bool a_first = a_size <= b_size;
        for (int pass = 0; pass < 2; ++pass) {
            if ((pass == 0) == a_first) {
                if ((disjoint_[d] & b_bits) == 0) {
                    dfs(depth + 1, a_bits | bit, b_bits, a_size + 1, b_size, true, result);
                }
            } else if (any && (disjoint_[d] & a_bits) == 0) {
                dfs(depth + 1, a_bits, b_bits | bit, a_size, b_size + 1, true, result);
            }
        }
        dfs(depth + 1, a_bits, b_bits, a_size, b_size, any, result);
    }

    SearchReport merge() const {
        SearchReport report;
        int best = -1;
        std::size_t winner = cells_.size();
        bool exhausted = false;
        for (std::size_t i = 0; i < results_.size(); ++i) {
            report.nodes_explored += results_[i].nodes;
            exhausted = exhausted || results_[i].exhausted;
            if (results_[i].best > best) {
                best = results_[i].best;
                winner = i;
            }
        }
        report.status = exhausted ? SearchStatus::exhausted_budget : SearchStatus::verified;
        if (winner == cells_.size()) {
            report.optimum = 0;
            report.witnesses = {Family(n_, {}), Family(n_, {})};
            return report;
        }
        report.optimum = best;
        std::vector<std::uint64_t> a_masks;
        std::vector<std::uint64_t> b_masks;
        for (std::size_t i = 0; i < order_.size(); ++i) {
            if (results_[winner].a_bits & (std::uint32_t(1) << i)) {
                a_masks.push_back(order_[i]);
            }
            if (results_[winner].b_bits & (std::uint32_t(1) << i)) {
                b_masks.push_back(order_[i]);
            }
        }
        report.witnesses = {Family(n_, std::move(a_masks)), Family(n_, std::move(b_masks))};
        return report;
    }

    int n_;
    SearchBudget budget_;
    std::vector<std::uint64_t> order_;
    std::vector<std::uint32_t> disjoint_;
    std::vector<Cell> cells_;
    std::vector<CellResult> results_;
    int frontier_depth_ = 0;
    std::uint64_t slice_ = 0;
    Clock::time_point start_;
};

SearchReport conjecture_report(int n, const BigCount& formula) {
    const auto start = Clock::now();
    SearchReport report = max_diversity_nonuniform(n);
    report.status =
        report.optimum == formula ? SearchStatus::verified : SearchStatus::refuted;
    report.elapsed_ms = ms_since(start);
    return report;
}

}  // namespace

const char* to_string(SearchStatus status) {
    switch (status) {
        case SearchStatus::verified:
            return "verified";
        case SearchStatus::refuted:
            return "refuted";
        default:
            return "exhausted-budget";
    }
}

std::vector<Family> maximal_intersecting_families(int n) {
    check_nonuniform_envelope(n);
    MaximalEnumerator enumerator(n);
    std::vector<Family> families;
    enumerator.enumerate([&](std::uint64_t members) {
        families.emplace_back(n, bitset_to_masks(members));
    });
    std::sort(families.begin(), families.end(),
              [](const Family& a, const Family& b) { return a.masks() < b.masks(); });
    return families;
}

SearchReport max_diversity_nonuniform(int n) {
    check_nonuniform_envelope(n);
    const auto start = Clock::now();
    MaximalEnumerator enumerator(n);

    std::vector<std::uint64_t> contains(static_cast<std::size_t>(n), 0);
    const std::uint64_t full = full_mask(n);
    for (std::uint64_t m = 0; m <= full; ++m) {
        for (std::uint64_t rest = m; rest != 0; rest &= rest - 1) {
            contains[static_cast<std::size_t>(std::countr_zero(rest))] |=
                std::uint64_t(1) << m;
        }
    }

    int best = -1;
    std::uint64_t best_members = 0;
    const std::uint64_t nodes = enumerator.enumerate([&](std::uint64_t members) {
        int max_degree = 0;
        for (int x = 0; x < n; ++x) {
            max_degree = std::max(
                max_degree, std::popcount(members & contains[static_cast<std::size_t>(x)]));
        }
        const int div = std::popcount(members) - max_degree;
        if (div > best) {
            best = div;
            best_members = members;
        }
    });

    SearchReport report;
    report.optimum = best;
    report.witnesses = {Family(n, bitset_to_masks(best_members))};
    report.nodes_explored = nodes;
    report.elapsed_ms = ms_since(start);
    return report;
}

SearchReport max_diversity_uniform(int n, int k) {
    if (n < 1 || k < 1 || k > n) {
        throw std::domain_error("max_diversity_uniform needs 1 <= k <= n");
    }
    const auto start = Clock::now();
    SearchReport report;
    if (n == 2 * k) {
        if (binom(n, k) > 70) {
            throw resource_error("pair-selection search limited to binom(2k,k) <= 70");
        }
        PairSelectionSearch search(n, k);
        search.run(report);
    } else {
        if (binom(n, k) > 24) {
            throw resource_error("uniform diversity search limited to binom(n,k) <= 24");
        }
        UniformSubsetSearch search(n, k);
        search.run(report);
    }
    report.elapsed_ms = ms_since(start);
    return report;
}

SearchReport max_min_disjoint_cross(int n, int k, const SearchBudget& budget) {
    if (n < 1 || k < 1 || k > n) {
        throw std::domain_error("max_min_disjoint_cross needs 1 <= k <= n");
    }
    const auto start = Clock::now();
    CrossPairSearch search(n, k, budget);
    SearchReport report = search.run();
    report.elapsed_ms = ms_since(start);
    return report;
}

SearchReport check_conjecture_odd(int k) {
    if (k < 1) {
        throw std::domain_error("check_conjecture_odd needs k >= 1");
    }
    if (2 * k + 1 > 6) {
        throw resource_error("odd-ground scan limited to k <= 2");
    }
    return conjecture_report(2 * k + 1, q_diversity_formula(k));
}

SearchReport check_conjecture_even(int k) {
    if (k < 1) {
        throw std::domain_error("check_conjecture_even needs k >= 1");
    }
    if (2 * k > 6) {
        throw resource_error("even-ground scan limited to k <= 3");
    }
    return conjecture_report(2 * k, even_diversity_formula(k));
}

}  // namespace setfam
