#pragma once

/// @file straightening.hpp
/// @brief Straightening of Laplace products into good ones, and of a
/// product of two minors of a rectangular matrix into products whose first
/// factor is dominated by the second.
///
/// straighten_laplace rewrites {A|B} with two kinds of steps, each an
/// instance of a vanishing relation with the target term isolated:
///
///   * |A| < n/2: the complement relation relation_cor2(A, B), whose terms
///     other than {A|B} all have U ⊋ A and W ⊋ B;
///   * |A| ≥ n/2 and B bad: the exchange relation relation_cor1(A, D, C)
///     built from the first position v where B falls behind its
///     complement, whose other terms have U ⊇ A and D−W < B;
///   * only A bad: the transposed problem.
///
/// Every recursion edge is checked to move strictly down in the product
/// order; a violation throws std::logic_error.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "straightlaw/bideterminant.hpp"
#include "straightlaw/index_set.hpp"

namespace straightlaw {

class LaplaceStraightener {
public:
    /// Σ c_i {A_i|B_i} with every A_i, B_i good, A_i ≤ A, B_i ≤ B, equal to
    /// {A|B} as a polynomial. Empty when |A| != |B|. Thread-safe.
    LaplaceCombination straighten(const IndexSet& a, const IndexSet& b, unsigned n);

    [[nodiscard]] std::size_t cache_size() const;
    void clear();

private:
    struct Key {
        std::uint64_t rows;
        std::uint64_t cols;
        unsigned ground;
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const noexcept;
    };

    LaplaceCombination straighten_impl(const IndexSet& a, const IndexSet& b, unsigned n, std::uint64_t depth);

    mutable std::shared_mutex mutex_;
    std::unordered_map<Key, LaplaceCombination, KeyHash> cache_;
};

/// Process-wide memoizing straightener.
LaplaceStraightener& default_straightener();

/// default_straightener().straighten(a, b, n)
LaplaceCombination straighten_laplace(const IndexSet& a, const IndexSet& b, unsigned n);

/// One rewriting step: {A|B} = rest, where rest was obtained by isolating
/// {A|B} in the vanishing relation `relation`. Only defined for pairs that
/// are not both good.
struct ReductionStep {
    enum class Kind { Complement, Exchange, Transposed };
    Kind kind;
    LaplaceCombination relation;
    LaplaceCombination rest;
};

/// Throws InvalidInput if |A| != |B| or both sets are good.
ReductionStep reduction_step(const IndexSet& a, const IndexSet& b, unsigned n);

/// Order-preserving map f: {1..k} → U' ∪ U'' with K' ↦ U' and K'' ↦ U''
/// isomorphically; equal values put the K' position first.
struct MergeMap {
    unsigned k = 0;
    std::vector<unsigned> f;  // f[i-1] = f(i)
    IndexSet kprime;
    IndexSet kdoubleprime;

    [[nodiscard]] unsigned operator()(unsigned i) const { return f.at(i - 1); }
    [[nodiscard]] bool injective_on(const IndexSet& p) const;
    /// f(P); only meaningful where f is injective on P.
    [[nodiscard]] IndexSet image(const IndexSet& p) const;
};

MergeMap merge_map(const IndexSet& u1, const IndexSet& u2);

struct MinorPair {
    Minor first;
    Minor second;

    bool operator==(const MinorPair&) const = default;
    friend auto operator<=>(const MinorPair&, const MinorPair&) = default;
};

using PairCombination = std::map<MinorPair, Integer>;

/// Rewrites (S'|T')(S''|T'') on an m x n matrix. If (S',T') ≤ (S'',T'')
/// the product is returned unchanged; if a factor is size-mismatched the
/// result is empty. Otherwise every output term has (S'_i,T'_i) < (S',T')
/// and (S'_i,T'_i) ≤ (S''_i,T''_i). (∅|∅) factors are kept.
PairCombination straighten_pair(const MinorPair& p, unsigned m, unsigned n);

Polynomial expand(const PairCombination& c, unsigned m, unsigned n);

std::string to_string(const PairCombination& c);

}  // namespace straightlaw
