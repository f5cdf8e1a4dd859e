#ifndef SETFAM_SPECTRAL_HPP
#define SETFAM_SPECTRAL_HPP

#include <cstdint>
#include <vector>

#include "setfam/core.hpp"

namespace setfam {

// One eigenspace of the disjointness graph on C([n],k):
// eigenvalue (-1)^i * binom(n-k-i,k-i), multiplicity binom(n,i)-binom(n,i-1).
struct SpectrumEntry {
    int index_i = 0;
    BigCount eigenvalue;
    BigCount multiplicity;
};

struct KneserConstants {
    ExactRatio big_k;  // (binom(n-k-1,k-1) - binom(n-k-2,k-2)) / 2
    ExactRatio big_l;  // (binom(n-k-1,k-1) + binom(n-k-2,k-2)) / 2
    BigCount lambda1;  // binom(n-k,k)
};

struct Theorem2Bound {
    ExactRatio spectral_form;  // binom(n,k) * L / (K + L + lambda1)
    ExactRatio closed_form;    // binom(n-1,k-1)/2 * (n-2)/(n-k-1)
};

// Dense symmetric 0/1 matrix over the canonical k-subset order.
struct Matrix01 {
    std::size_t dim = 0;
    std::vector<std::uint8_t> cells;  // row-major dim*dim

    std::uint8_t at(std::size_t row, std::size_t col) const { return cells[row * dim + col]; }
};

// Full spectrum for n >= 2k >= 2; multiplicities sum to binom(n,k).
std::vector<SpectrumEntry> kneser_spectrum(int n, int k);

// Explicit adjacency matrix (vertices adjacent iff the sets are disjoint).
// Guarded by the explicit-matrix envelope binom(n,k) <= 5000.
Matrix01 kneser_adjacency(int n, int k);

// Exact trace of the p-th power of the adjacency matrix.
BigCount trace_moment(int n, int k, int p);

KneserConstants kneser_constants(int n, int k);

// The two algebraically equal forms of the disjoint cross-pair size bound.
Theorem2Bound theorem2_bound(int n, int k);

}  // namespace setfam

#endif
