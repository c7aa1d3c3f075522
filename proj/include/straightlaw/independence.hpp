#pragma once

/// @file independence.hpp
/// @brief Linear independence of standard monomials, checked two ways.
///
/// Witness route: specialize X = YZ with Y generic m x N and Z generic
/// N x n, so x[i,j] = Σ_v y[i,v] z[j,v]. Under the y/z variable order the
/// leading monomial of (A|B) is y(A) z(B) = Π_s y[a_s,s] · Π_s z[b_s,s];
/// standard words have pairwise distinct leading witnesses, and the chain
/// A_1 ≤ ... ≤ A_r can be read back from y(A_1)...y(A_r).
///
/// Rank route: expand every standard monomial over the generic X and
/// compute the exact rank of the coefficient matrix.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "straightlaw/index_set.hpp"
#include "straightlaw/polynomial.hpp"
#include "straightlaw/standard_monomials.hpp"

namespace straightlaw {

class DecodeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Specialization {
    unsigned m = 0;
    unsigned n = 0;
    unsigned inner = 1;  // N, the shared dimension of Y·Z

    /// Throws InvalidInput for N = 0 or dimensions above the variable range.
    Specialization(unsigned rows, unsigned cols, unsigned inner);
};

/// Replaces every x[i,j] by Σ_v y[i,v] z[j,v]; y/z variables are kept.
Polynomial specialize(const Polynomial& p, const Specialization& spec);

/// Leibniz expansion of Y(A|S) in the variables y[a,s].
Polynomial expand_y_minor(const IndexSet& rows, const IndexSet& sups);
/// Leibniz expansion of Z(S|B) in the variables z[b,s].
Polynomial expand_z_minor(const IndexSet& sups, const IndexSet& cols);

/// Specialized (A|B) against Σ_S Y(A|S)·Z(S|B) over |S| = |A|, S ⊆ {1..N}.
bool binet_cauchy_check(const IndexSet& a, const IndexSet& b, const Specialization& spec);

/// y(A) z(B); throws InvalidInput unless |A| = |B| ≤ N and the minor fits.
Monomial minor_leading_monomial(const IndexSet& a, const IndexSet& b, const Specialization& spec);

struct LeadingWitness {
    MinorWord word;
    Monomial monomial;
};

/// Product of the factors' leading monomials.
LeadingWitness leading_witness(const MinorWord& word, const Specialization& spec);

enum class WitnessSide { Rows, Cols };

/// Reads back [A_1, ..., A_r] from y(A_1)...y(A_r) (or the z part for
/// WitnessSide::Cols). Variables of the other y/z kind are ignored.
/// Throws DecodeError when the monomial has x-variables, a missing
/// superscript, or does not peel into strictly increasing sets.
std::vector<IndexSet> decode_leading(const Monomial& m, WitnessSide side);

/// All standard words with 1..max_factors factors, none of them (∅|∅).
std::vector<MinorWord> standard_monomials(unsigned m, unsigned n, unsigned max_factors);

struct IndependenceBounds {
    unsigned max_dim = 3;
    unsigned max_factors = 3;
};

struct IndependenceReport {
    unsigned m = 0;
    unsigned n = 0;
    unsigned inner = 0;
    unsigned max_factors = 0;
    std::size_t standard_count = 0;
    std::size_t distinct_witnesses = 0;
    bool witnesses_distinct = false;
    bool decode_inverts = false;
    std::size_t rank = 0;

    [[nodiscard]] bool rank_equals_count() const { return rank == standard_count; }
    [[nodiscard]] bool independent() const { return witnesses_distinct && decode_inverts && rank_equals_count(); }
};

/// Both routes with N = min(m, n). Throws BoundExceeded outside the bounds.
IndependenceReport verify_independence(unsigned m, unsigned n, unsigned max_factors,
                                       const IndependenceBounds& bounds = {});

inline constexpr unsigned kCompletenessBound = 4;

struct CompletenessReport {
    unsigned n = 0;
    std::size_t laplace_products = 0;   // pairs (A,B) with |A| = |B|
    std::size_t good_pairs = 0;         // both A and B good
    bool all_straightened = false;      // good, dominated, oracle-equal
    bool within_relation_span = false;  // {A|B} minus its straightening lies in the span of relation_theorem1 instances
    std::size_t span_rank = 0;          // rank of all Laplace products as polynomials
    std::size_t good_rank = 0;          // rank of the good ones
    std::size_t relation_rank = 0;      // rank of all relation_theorem1 instances

    [[nodiscard]] bool complete() const {
        return all_straightened && within_relation_span && span_rank == good_pairs && good_rank == good_pairs &&
               relation_rank + good_pairs == laplace_products;
    }
};

/// Throws BoundExceeded for n > kCompletenessBound.
CompletenessReport verify_relation_completeness(unsigned n);

}  // namespace straightlaw
