#include "setfam/spectral.hpp"

namespace setfam {

namespace {

constexpr long long kAdjacencyEnvelope = 5000;

void check_kneser_params(int n, int k) {
    if (k < 1 || n < 2 * k) {
        throw std::domain_error("Kneser parameters need n >= 2k >= 2");
    }
}

// Only the explicit matrix needs representable vertex masks; the spectrum
// and the bound forms are binomial arithmetic and work for any n.
void check_representable(int n) {
    if (n > 64) {
        throw std::domain_error("ground set size must be at most 64");
    }
}

std::size_t checked_dimension(int n, int k) {
    const BigCount count = binom(n, k);
    if (count > kAdjacencyEnvelope) {
        throw resource_error("explicit adjacency limited to binom(n,k) <= " +
                             std::to_string(kAdjacencyEnvelope));
    }
    return count.convert_to<std::size_t>();
}

}  // namespace

std::vector<SpectrumEntry> kneser_spectrum(int n, int k) {
    check_kneser_params(n, k);
    std::vector<SpectrumEntry> entries;
    entries.reserve(static_cast<std::size_t>(k) + 1);
    for (int i = 0; i <= k; ++i) {
        SpectrumEntry entry;
        entry.index_i = i;
        entry.eigenvalue = binom(n - k - i, k - i);
        if (i % 2 == 1) {
            entry.eigenvalue = -entry.eigenvalue;
        }
        entry.multiplicity = binom(n, i) - (i == 0 ? BigCount(0) : binom(n, i - 1));
        entries.push_back(std::move(entry));
    }
    return entries;
}

Matrix01 kneser_adjacency(int n, int k) {
    check_kneser_params(n, k);
    check_representable(n);
    const std::size_t dim = checked_dimension(n, k);
    const Family vertices = enumerate_k_subsets(n, k);
    Matrix01 matrix;
    matrix.dim = dim;
    matrix.cells.assign(dim * dim, 0);
    for (std::size_t row = 0; row < dim; ++row) {
        for (std::size_t col = row + 1; col < dim; ++col) {
            if ((vertices.masks()[row] & vertices.masks()[col]) == 0) {
                matrix.cells[row * dim + col] = 1;
                matrix.cells[col * dim + row] = 1;
            }
        }
    }
    return matrix;
}

BigCount trace_moment(int n, int k, int p) {
    if (p < 0) {
        throw std::domain_error("trace_moment needs p >= 0");
    }
    check_kneser_params(n, k);
    const std::size_t dim = checked_dimension(n, k);
    if (p == 0) {
        return BigCount(dim);
    }
    if (p == 1) {
        return 0;  // zero diagonal
    }
    const Matrix01 m = kneser_adjacency(n, k);
    // M^2 entries are bounded by the degree binom(n-k,k) <= dim, so 64-bit
    // intermediates are exact within the envelope.
    std::vector<std::int64_t> square(dim * dim, 0);
    for (std::size_t row = 0; row < dim; ++row) {
        for (std::size_t mid = 0; mid < dim; ++mid) {
            if (m.at(row, mid) == 0) {
                continue;
            }
            const std::uint8_t* src = &m.cells[mid * dim];
            std::int64_t* dst = &square[row * dim];
            for (std::size_t col = 0; col < dim; ++col) {
                dst[col] += src[col];
            }
        }
    }
    if (p == 2) {
        BigCount trace = 0;
        for (std::size_t row = 0; row < dim; ++row) {
            trace += square[row * dim + row];
        }
        return trace;
    }
    if (p == 3) {
        BigCount trace = 0;
        for (std::size_t row = 0; row < dim; ++row) {
            for (std::size_t col = 0; col < dim; ++col) {
                if (m.at(col, row) != 0) {
                    trace += square[row * dim + col];
                }
            }
        }
        return trace;
    }
    if (p == 4) {
        BigCount trace = 0;
        for (const std::int64_t v : square) {
            trace += BigCount(v) * v;
        }
        return trace;
    }
    // Higher powers: exact big-integer repeated multiplication.
    std::vector<BigCount> power(dim * dim);
    for (std::size_t i = 0; i < dim * dim; ++i) {
        power[i] = square[i];
    }
    std::vector<BigCount> next(dim * dim);
    for (int done = 2; done < p; ++done) {
        for (auto& cell : next) {
            cell = 0;
        }
        for (std::size_t row = 0; row < dim; ++row) {
            for (std::size_t mid = 0; mid < dim; ++mid) {
                const BigCount& scale = power[row * dim + mid];
                if (scale == 0) {
                    continue;
                }
                for (std::size_t col = 0; col < dim; ++col) {
                    if (m.at(mid, col) != 0) {
                        next[row * dim + col] += scale;
                    }
                }
            }
        }
        std::swap(power, next);
    }
    BigCount trace = 0;
    for (std::size_t row = 0; row < dim; ++row) {
        trace += power[row * dim + row];
    }
    return trace;
}

KneserConstants kneser_constants(int n, int k) {
    check_kneser_params(n, k);
    const BigCount first = binom(n - k - 1, k - 1);
    // At (n,k) = (2,1) the second top index is -1; the term is zero there anyway.
    const BigCount second = k >= 2 ? binom(n - k - 2, k - 2) : BigCount(0);
    KneserConstants constants;
    constants.big_k = ExactRatio(first - second, 2);
    constants.big_l = ExactRatio(first + second, 2);
    constants.lambda1 = binom(n - k, k);
    return constants;
}

Theorem2Bound theorem2_bound(int n, int k) {
    check_kneser_params(n, k);
    if (k < 2) {
        throw std::domain_error("theorem2_bound needs k >= 2");
    }
    const KneserConstants c = kneser_constants(n, k);
    Theorem2Bound bound;
    bound.spectral_form =
        ExactRatio(binom(n, k)) * c.big_l / (c.big_k + c.big_l + ExactRatio(c.lambda1));
    bound.closed_form =
        ExactRatio(binom(n - 1, k - 1), 2) * ExactRatio(n - 2, n - k - 1);
    return bound;
}

}  // namespace setfam
