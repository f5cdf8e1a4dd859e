#include "setfam/constructions.hpp"

#include <algorithm>
#include <bit>

namespace setfam {

namespace {

void check_nk(int n, int k) {
    if (n < 0 || n > 64 || k < 0 || k > n) {
        throw std::domain_error("need 0 <= k <= n <= 64");
    }
}

bool is_power_of_two(int k) {
    return k >= 1 && (k & (k - 1)) == 0;
}

}  // namespace

Family star(int n, int k, int x) {
    check_nk(n, k);
    detail::require_element(x, n);
    if (k < 1) {
        throw std::domain_error("star needs k >= 1");
    }
    const std::uint64_t x_bit = std::uint64_t{1} << (x - 1);
    // Spread (k-1)-subsets of [n-1] over the positions other than x.
    const Family rest = enumerate_k_subsets(n - 1, k - 1);
    std::vector<std::uint64_t> out;
    out.reserve(rest.size());
    const std::uint64_t low = x_bit - 1;
    for (std::uint64_t m : rest.masks()) {
        const std::uint64_t expanded = (m & low) | ((m & ~low) << 1);
        out.push_back(expanded | x_bit);
    }
    return Family(n, std::move(out));
}

std::pair<Family, Family> star_split(int n, int k, int x) {
    const Family s = star(n, k, x);
    std::vector<std::uint64_t> first, second;
    first.reserve((s.size() + 1) / 2);
    second.reserve(s.size() / 2);
    for (std::size_t rank = 0; rank < s.size(); ++rank) {
        (rank % 2 == 0 ? first : second).push_back(s.masks()[rank]);
    }
    return {Family(n, std::move(first)), Family(n, std::move(second))};
}

ThresholdPair threshold_pair(int n, int k, int t) {
    check_nk(n, k);
    if (t < 2 || t > k || t + 1 > n) {
        throw std::domain_error("threshold_pair needs 2 <= t <= k and t+1 <= n");
    }
    const std::uint64_t window = full_mask(t + 1);
    const std::uint64_t one_bit = 1;
    const std::uint64_t tail = window & ~one_bit;  // {2,...,t+1}
    std::vector<std::uint64_t> a_masks, b_masks;
    const Family candidates = enumerate_k_subsets(n, k);
    for (std::uint64_t m : candidates.masks()) {
        const std::uint64_t trace = m & window;
        if (trace == one_bit || trace == tail) {
            a_masks.push_back(m);
        } else if ((trace & one_bit) != 0 && (trace & tail) != 0) {
            b_masks.push_back(m);
        }
    }
    ThresholdPair pair;
    pair.n = n;
    pair.k = k;
    pair.t = t;
    pair.a_family = Family(n, std::move(a_masks));
    pair.b_family = Family(n, std::move(b_masks));
    pair.a_size = binom(n - t - 1, k - 1) + binom(n - t - 1, k - t);
    pair.b_size = binom(n - 1, k - 1) - binom(n - t - 1, k - 1);
    return pair;
}

std::pair<Family, Family> rebalance_pair(const Family& a, const Family& b, std::size_t m) {
    detail::require_same_ground(a, b);
    if (m > b.size()) {
        throw std::domain_error("cannot move more members than the donor has");
    }
    if (!is_intersecting(b)) {
        throw std::invalid_argument("rebalance donor must be intersecting");
    }
    std::vector<std::uint64_t> new_a = a.masks();
    std::vector<std::uint64_t> new_b;
    new_b.reserve(b.size() - m);
    for (std::size_t rank = 0; rank < b.size(); ++rank) {
        (rank < m ? new_a : new_b).push_back(b.masks()[rank]);
    }
    return {Family(a.ground_n(), std::move(new_a)), Family(b.ground_n(), std::move(new_b))};
}

std::pair<Family, Family> complement_pairing(int k) {
    if (k < 2 || 2 * k > 64) {
        throw std::domain_error("complement_pairing needs 2 <= k <= 32");
    }
    const int n = 2 * k;
    const std::uint64_t full = full_mask(n);
    std::vector<std::uint64_t> a_masks, b_masks;
    std::size_t pair_rank = 0;
    const Family candidates = enumerate_k_subsets(n, k);
    for (std::uint64_t m : candidates.masks()) {
        const std::uint64_t comp = full & ~m;
        if (m > comp) {
            continue;  // each pair is visited at its smaller representative
        }
        auto& side = (pair_rank % 2 == 0) ? a_masks : b_masks;
        side.push_back(m);
        side.push_back(comp);
        ++pair_rank;
    }
    return {Family(n, std::move(a_masks)), Family(n, std::move(b_masks))};
}

Family d_family(int n, int k, int r) {
    check_nk(n, k);
    if (r < 1 || r > k - 1 || 2 * r + 1 > n) {
        throw std::domain_error("d_family needs 1 <= r <= k-1 and 2r+1 <= n");
    }
    const std::uint64_t window = full_mask(2 * r + 1);
    std::vector<std::uint64_t> out;
    const Family candidates = enumerate_k_subsets(n, k);
    for (std::uint64_t m : candidates.masks()) {
        if (std::popcount(m & window) >= r + 1) {
            out.push_back(m);
        }
    }
    return Family(n, std::move(out));
}

Family q_family(int k) {
    if (k < 1 || 2 * k + 1 > 64) {
        throw std::domain_error("q_family needs 1 <= k <= 31");
    }
    const int n = 2 * k + 1;
    std::vector<std::uint64_t> out;
    for (std::uint64_t m = 0; m <= full_mask(n); ++m) {
        if (std::popcount(m) >= k + 1) {
            out.push_back(m);
        }
    }
    return Family(n, std::move(out));
}

Family g_base() {
    const std::vector<std::vector<int>> triples = {
        {1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {4, 5, 1}, {5, 1, 2},
        {1, 3, 6}, {2, 4, 6}, {2, 5, 6}, {3, 5, 6}, {1, 4, 6}};
    std::vector<std::uint64_t> out;
    out.reserve(triples.size());
    for (const auto& t : triples) {
        out.push_back(mask_from_elements(t, 6));
    }
    return Family(6, std::move(out));
}

Family upward_closure(const Family& base, int t) {
    if (t < 0 || t > 64) {
        throw std::domain_error("window size must be between 0 and 64");
    }
    const std::uint64_t window = full_mask(t);
    for (std::uint64_t m : base.masks()) {
        if ((m & ~window) != 0) {
            throw std::domain_error("base family member outside the window");
        }
    }
    std::vector<std::uint64_t> out;
    for (std::uint64_t m = 0; m <= window; ++m) {
        for (std::uint64_t g : base.masks()) {
            if ((m & g) == g) {
                out.push_back(m);
                break;
            }
        }
        if (m == window) {
            break;  // guards the m <= window loop when t = 64
        }
    }
    return Family(t, std::move(out));
}

Family lift_family(const Family& h, int t, int n, int k) {
    check_nk(n, k);
    if (t < 0 || t > n || h.ground_n() != t) {
        throw std::domain_error("lift window must match the base family's ground set");
    }
    const std::uint64_t window = full_mask(t);
    std::vector<std::uint64_t> out;
    const Family candidates = enumerate_k_subsets(n, k);
    for (std::uint64_t m : candidates.masks()) {
        if (h.contains(m & window)) {
            out.push_back(m);
        }
    }
    return Family(n, std::move(out));
}

LiftProfile make_lift_profile(const Family& h) {
    const int t = h.ground_n();
    LiftProfile profile;
    profile.window_t = t;
    profile.n_counts.assign(static_cast<std::size_t>(t) + 1, 0);
    profile.n_counts_missing.assign(static_cast<std::size_t>(t) + 1,
                                    std::vector<std::size_t>(static_cast<std::size_t>(t), 0));
    for (std::uint64_t m : h.masks()) {
        const auto size = static_cast<std::size_t>(std::popcount(m));
        profile.n_counts[size] += 1;
        for (int x = 1; x <= t; ++x) {
            if ((m >> (x - 1) & 1u) == 0) {
                profile.n_counts_missing[size][static_cast<std::size_t>(x - 1)] += 1;
            }
        }
    }
    return profile;
}

LiftedMissing lifted_missing_counts(const LiftProfile& profile, int n, int k) {
    const int t = profile.window_t;
    if (t > n || k > n || n < 0) {
        throw std::domain_error("lifted_missing_counts needs t <= n and k <= n");
    }
    LiftedMissing counts;
    counts.inside.assign(static_cast<std::size_t>(t), BigCount(0));
    counts.outside = 0;
    for (int i = 0; i <= t; ++i) {
        const BigCount ways_in = binom(n - t, k - i);
        // With no elements outside the window the outside count stays zero.
        const BigCount ways_out = n > t ? binom(n - t - 1, k - i) : BigCount(0);
        counts.outside += BigCount(profile.n_counts[static_cast<std::size_t>(i)]) * ways_out;
        for (int x = 1; x <= t; ++x) {
            counts.inside[static_cast<std::size_t>(x - 1)] +=
                BigCount(profile.n_counts_missing[static_cast<std::size_t>(i)]
                                                 [static_cast<std::size_t>(x - 1)]) *
                ways_in;
        }
    }
    return counts;
}

Theorem3Certificate theorem3_certificate(int n, int k) {
    if (n < 7 || k < 2 || k > n) {
        throw std::domain_error("theorem3_certificate needs n >= 7 and 2 <= k <= n");
    }
    const LiftProfile profile = make_lift_profile(upward_closure(g_base(), 6));
    const LiftedMissing counts = lifted_missing_counts(profile, n, k);
    BigCount lb = counts.outside;
    for (const auto& c : counts.inside) {
        if (c < lb) {
            lb = c;
        }
    }
    Theorem3Certificate cert;
    cert.diversity_lb = lb;
    cert.target = binom(n - 3, k - 2);
    cert.beats = lb > cert.target;
    return cert;
}

BigCount q_diversity_formula(int k) {
    if (k < 1) {
        throw std::domain_error("q_diversity_formula needs k >= 1");
    }
    BigCount total = 0;
    for (int i = k + 1; i <= 2 * k; ++i) {
        total += binom(2 * k, i);
    }
    return total;
}

BigCount even_diversity_formula(int k) {
    if (k < 1) {
        throw std::domain_error("even_diversity_formula needs k >= 1");
    }
    BigCount half = binom(2 * k - 1, k - 1);
    if (is_power_of_two(k)) {
        half -= 1;
    }
    half /= 2;
    BigCount total = half;
    for (int i = k + 1; i <= 2 * k - 1; ++i) {
        total += binom(2 * k - 1, i);
    }
    return total;
}

}  // namespace setfam
