#ifndef SETFAM_CORE_HPP
#define SETFAM_CORE_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace setfam {

// Exact arithmetic used everywhere: counts are arbitrary-precision integers,
// ratios are reduced rationals. Floating point appears only in the
// asymptotics module.
using BigCount = boost::multiprecision::cpp_int;
using ExactRatio = boost::multiprecision::cpp_rational;

// Thrown when a request is valid but exceeds a declared size envelope
// (explicit matrices, exhaustive scans).
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A subset of the ground set [n] = {1,...,n}, n <= 64.
// Element e is present iff bit (e-1) of `bits` is set.
struct SubsetMask {
    std::uint64_t bits = 0;
    int ground_n = 0;

    SubsetMask() = default;
    SubsetMask(std::uint64_t bits_, int ground_n_);

    int cardinality() const;
    bool contains(int element) const;
    std::vector<int> elements() const;
};

std::uint64_t full_mask(int n);
std::uint64_t mask_from_elements(const std::vector<int>& elements, int ground_n);

// A canonical family of subsets of a common ground set: members are stored
// strictly increasing by numeric mask value, so there are no duplicates.
class Family {
public:
    Family() = default;
    // Canonicalizes (sorts, removes duplicates) and validates that every
    // mask stays within the ground set.
    Family(int ground_n, std::vector<std::uint64_t> members);

    int ground_n() const { return ground_n_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    const std::vector<std::uint64_t>& masks() const { return members_; }
    SubsetMask member(std::size_t index) const;
    bool contains(std::uint64_t mask) const;

    bool operator==(const Family& other) const = default;

private:
    int ground_n_ = 0;
    std::vector<std::uint64_t> members_;  // strictly increasing
};

// C(n,k) exactly; 0 when k < 0 or k > n. n < 0 is a domain error.
BigCount binom(long long n, long long k);

// All k-subsets of [n] in increasing mask order. Size equals binom(n,k).
Family enumerate_k_subsets(int n, int k);

// True iff every pair of members meets. A family containing the empty set
// is non-intersecting; empty and singleton (nonempty-member) families pass.
bool is_intersecting(const Family& family);

// True iff every (a,b) in A x B meets; vacuously true when either is empty.
bool are_cross_intersecting(const Family& a, const Family& b);

// True iff no member set appears in both families.
bool are_disjoint_families(const Family& a, const Family& b);

// Per-element member counts: entry x-1 holds |{F in family : x in F}|.
std::vector<BigCount> degree_profile(const Family& family);

// |F| minus the largest degree; 0 for the empty family.
BigCount diversity(const Family& family);

// Smallest element attaining the maximum degree; 0 for an empty ground set.
int most_popular_element(const Family& family);

namespace detail {
void require_same_ground(const Family& a, const Family& b);
void require_element(int element, int ground_n);
}  // namespace detail

}  // namespace setfam

#endif
