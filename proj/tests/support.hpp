#pragma once

// Shared generators and independent oracles for the test binaries.

#include <cstdint>
#include <random>
#include <vector>

#include "straightlaw/bideterminant.hpp"
#include "straightlaw/index_set.hpp"
#include "straightlaw/polynomial.hpp"
#include "straightlaw/standard_monomials.hpp"

namespace straightlaw::testkit {

inline constexpr std::uint64_t kSeed = 0x5eed'2026'1014ULL;

class Gen {
public:
    explicit Gen(std::uint64_t seed = kSeed) : rng_(seed) {}

    unsigned uniform(unsigned lo, unsigned hi) { return std::uniform_int_distribution<unsigned>(lo, hi)(rng_); }
    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
    bool coin() { return uniform(0, 1) == 1; }

    /// Uniform subset of {1..n}.
    IndexSet subset(unsigned n) { return IndexSet::from_mask(rng_() & IndexSet::range(n).mask()); }

    /// Uniform subset of {1..n} of the given size.
    IndexSet subset_of_size(unsigned n, unsigned size) {
        std::vector<unsigned> pool(n);
        for (unsigned i = 0; i < n; ++i) pool[i] = i + 1;
        std::shuffle(pool.begin(), pool.end(), rng_);
        std::uint64_t mask = 0;
        for (unsigned i = 0; i < size; ++i) mask |= std::uint64_t{1} << (pool[i] - 1);
        return IndexSet::from_mask(mask);
    }

    /// Nonzero, non-unit minor of an m x n matrix.
    Minor minor(unsigned m, unsigned n) {
        const unsigned p = uniform(1, std::min(m, n));
        return {subset_of_size(m, p), subset_of_size(n, p)};
    }

    MinorWord word(unsigned m, unsigned n, unsigned factors) {
        MinorWord w;
        for (unsigned i = 0; i < factors; ++i) w.factors.push_back(minor(m, n));
        return w;
    }

    Monomial monomial(unsigned vars, unsigned max_exponent) {
        Monomial out;
        for (unsigned v = 0; v < vars; ++v) {
            const unsigned e = uniform(0, max_exponent);
            if (e != 0) out = out * Monomial(random_variable(), e);
        }
        return out;
    }

    Polynomial polynomial(unsigned terms) {
        Polynomial p;
        for (unsigned t = 0; t < terms; ++t) p.add_term(monomial(3, 2), integer(-5, 5));
        return p;
    }

    Variable random_variable() {
        const unsigned a = uniform(1, 3);
        const unsigned b = uniform(1, 3);
        switch (uniform(0, 2)) {
            case 0: return Variable::x(a, b);
            case 1: return Variable::y(a, b);
            default: return Variable::z(a, b);
        }
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

using Matrix = std::vector<std::vector<Integer>>;

/// Determinant by cofactor expansion along the first row.
inline Integer cofactor_det(const Matrix& a) {
    const std::size_t k = a.size();
    if (k == 0) return 1;
    Integer total = 0;
    for (std::size_t j = 0; j < k; ++j) {
        if (a[0][j] == 0) continue;
        Matrix sub;
        for (std::size_t i = 1; i < k; ++i) {
            std::vector<Integer> row;
            for (std::size_t c = 0; c < k; ++c) {
                if (c != j) row.push_back(a[i][c]);
            }
            sub.push_back(std::move(row));
        }
        const Integer term = a[0][j] * cofactor_det(sub);
        total += (j % 2 == 0) ? term : Integer(-term);
    }
    return total;
}

/// Random integer m x n matrix with entries in [-4, 4].
inline Matrix random_matrix(Gen& g, unsigned m, unsigned n) {
    Matrix a(m, std::vector<Integer>(n));
    for (auto& row : a) {
        for (auto& e : row) e = g.integer(-4, 4);
    }
    return a;
}

/// Value of x[i,j] taken from the matrix; y/z variables are not expected.
inline auto matrix_values(const Matrix& a) {
    return [&a](const Variable& v) -> Integer { return a.at(v.first - 1).at(v.second - 1); };
}

/// Determinant of the submatrix on the given rows and columns.
inline Integer submatrix_det(const Matrix& a, const IndexSet& rows, const IndexSet& cols) {
    if (rows.size() != cols.size()) return 0;
    Matrix sub;
    for (unsigned r : rows) {
        std::vector<Integer> row;
        for (unsigned c : cols) row.push_back(a[r - 1][c - 1]);
        sub.push_back(std::move(row));
    }
    return cofactor_det(sub);
}

/// Parity of the number of inversions in the sequence.
inline int inversion_sign(const std::vector<unsigned>& seq) {
    std::size_t inv = 0;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        for (std::size_t j = i + 1; j < seq.size(); ++j) inv += seq[i] > seq[j] ? 1 : 0;
    }
    return inv % 2 == 0 ? 1 : -1;
}

using PolyMatrix = std::vector<std::vector<Polynomial>>;

// Cofactor expansion along the first row, with polynomial entries.
inline Polynomial poly_det(const PolyMatrix& a) {
    if (a.empty()) return Polynomial(1);
    Polynomial total;
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (a[0][j].is_zero()) continue;
        PolyMatrix sub;
        for (std::size_t i = 1; i < a.size(); ++i) {
            std::vector<Polynomial> row;
            for (std::size_t c = 0; c < a.size(); ++c) {
                if (c != j) row.push_back(a[i][c]);
            }
            sub.push_back(std::move(row));
        }
        const Polynomial term = a[0][j] * poly_det(sub);
        total += j % 2 == 0 ? term : -term;
    }
    return total;
}

// The matrix keeping x[i,j] on A x B and on the complement block, 0 elsewhere.
inline PolyMatrix masked_matrix(const IndexSet& a, const IndexSet& b, unsigned n) {
    const IndexSet ac = complement(a, n);
    const IndexSet bc = complement(b, n);
    PolyMatrix out(n, std::vector<Polynomial>(n));
    for (unsigned i = 1; i <= n; ++i) {
        for (unsigned j = 1; j <= n; ++j) {
            if ((a.contains(i) && b.contains(j)) || (ac.contains(i) && bc.contains(j))) out[i - 1][j - 1] = Polynomial(Variable::x(i, j));
        }
    }
    return out;
}

}  // namespace straightlaw::testkit
