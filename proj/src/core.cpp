#include "setfam/core.hpp"

#include <algorithm>
#include <bit>

namespace setfam {

namespace {

void check_ground(int n) {
    if (n < 0 || n > 64) {
        throw std::domain_error("ground set size must be between 0 and 64, got " +
                                std::to_string(n));
    }
}

}  // namespace

std::uint64_t full_mask(int n) {
    check_ground(n);
    return n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

SubsetMask::SubsetMask(std::uint64_t bits_, int ground_n_) : bits(bits_), ground_n(ground_n_) {
    if (ground_n_ < 1) {
        throw std::domain_error("subset mask needs a ground set of size >= 1");
    }
    check_ground(ground_n_);
    if ((bits_ & ~full_mask(ground_n_)) != 0) {
        throw std::domain_error("subset mask has bits outside the ground set");
    }
}

int SubsetMask::cardinality() const {
    return std::popcount(bits);
}

bool SubsetMask::contains(int element) const {
    detail::require_element(element, ground_n);
    return (bits >> (element - 1)) & 1u;
}

std::vector<int> SubsetMask::elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(cardinality()));
    for (std::uint64_t rest = bits; rest != 0; rest &= rest - 1) {
        out.push_back(std::countr_zero(rest) + 1);
    }
    return out;
}

std::uint64_t mask_from_elements(const std::vector<int>& elements, int ground_n) {
    std::uint64_t bits = 0;
    for (int e : elements) {
        detail::require_element(e, ground_n);
        bits |= std::uint64_t{1} << (e - 1);
    }
    return bits;
}

Family::Family(int ground_n, std::vector<std::uint64_t> members)
    : ground_n_(ground_n), members_(std::move(members)) {
    check_ground(ground_n);
    const std::uint64_t full = full_mask(ground_n);
    for (std::uint64_t m : members_) {
        if ((m & ~full) != 0) {
            throw std::domain_error("family member has bits outside the ground set");
        }
    }
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

SubsetMask Family::member(std::size_t index) const {
    return SubsetMask(members_.at(index), ground_n_);
}

bool Family::contains(std::uint64_t mask) const {
    return std::binary_search(members_.begin(), members_.end(), mask);
}

BigCount binom(long long n, long long k) {
    if (n < 0) {
        throw std::domain_error("binom: n must be nonnegative, got " + std::to_string(n));
    }
    if (k < 0 || k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    BigCount result = 1;
    for (long long i = 1; i <= k; ++i) {
        result *= (n - k + i);
        result /= i;  // exact: result is always an integer binomial prefix
    }
    return result;
}

Family enumerate_k_subsets(int n, int k) {
    if (n < 0 || k < 0 || k > n) {
        throw std::domain_error("enumerate_k_subsets: need 0 <= k <= n");
    }
    check_ground(n);
    if (k == 0) {
        return Family(n, {0});
    }
    std::vector<std::uint64_t> out;
    const std::uint64_t first = (k == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << k) - 1);
    const std::uint64_t last = first << (n - k);
    // Gosper's hack walks the k-subsets in increasing mask order.
    for (std::uint64_t m = first;;) {
        out.push_back(m);
        if (m == last) {
            break;
        }
        const std::uint64_t low = m & (~m + 1);
        const std::uint64_t ripple = m + low;
        m = ripple | (((m ^ ripple) >> 2) / low);
    }
    return Family(n, std::move(out));
}

bool is_intersecting(const Family& family) {
    const auto& ms = family.masks();
    for (std::size_t i = 0; i < ms.size(); ++i) {
        if (ms[i] == 0) {
            return false;  // the empty set meets nothing, itself included
        }
        for (std::size_t j = i + 1; j < ms.size(); ++j) {
            if ((ms[i] & ms[j]) == 0) {
                return false;
            }
        }
    }
    return true;
}

bool are_cross_intersecting(const Family& a, const Family& b) {
    detail::require_same_ground(a, b);
    for (std::uint64_t ma : a.masks()) {
        for (std::uint64_t mb : b.masks()) {
            if ((ma & mb) == 0) {
                return false;
            }
        }
    }
    return true;
}

bool are_disjoint_families(const Family& a, const Family& b) {
    detail::require_same_ground(a, b);
    const auto& xs = a.masks();
    const auto& ys = b.masks();
    std::size_t i = 0, j = 0;
    while (i < xs.size() && j < ys.size()) {
        if (xs[i] == ys[j]) {
            return false;
        }
        if (xs[i] < ys[j]) {
            ++i;
        } else {
            ++j;
        }
    }
    return true;
}

std::vector<BigCount> degree_profile(const Family& family) {
    std::vector<BigCount> degrees(static_cast<std::size_t>(family.ground_n()), BigCount(0));
    for (std::uint64_t m : family.masks()) {
        for (std::uint64_t rest = m; rest != 0; rest &= rest - 1) {
            degrees[static_cast<std::size_t>(std::countr_zero(rest))] += 1;
        }
    }
    return degrees;
}

BigCount diversity(const Family& family) {
    if (family.empty()) {
        return 0;
    }
    const auto degrees = degree_profile(family);
    BigCount max_degree = 0;
    for (const auto& d : degrees) {
        if (d > max_degree) {
            max_degree = d;
        }
    }
    return BigCount(family.size()) - max_degree;
}

int most_popular_element(const Family& family) {
    if (family.ground_n() == 0) {
        return 0;
    }
    const auto degrees = degree_profile(family);
    std::size_t best = 0;
    for (std::size_t x = 1; x < degrees.size(); ++x) {
        if (degrees[x] > degrees[best]) {
            best = x;
        }
    }
    return static_cast<int>(best) + 1;
}

namespace detail {

void require_same_ground(const Family& a, const Family& b) {
    if (a.ground_n() != b.ground_n()) {
        throw std::domain_error("families have different ground sets: " +
                                std::to_string(a.ground_n()) + " vs " +
                                std::to_string(b.ground_n()));
    }
}

void require_element(int element, int ground_n) {
    if (element < 1 || element > ground_n) {
        throw std::domain_error("element " + std::to_string(element) +
                                " outside ground set [" + std::to_string(ground_n) + "]");
    }
}

}  // namespace detail

}  // namespace setfam
