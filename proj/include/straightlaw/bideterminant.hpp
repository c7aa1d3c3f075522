#pragma once

/// @file bideterminant.hpp
/// @brief Minors (A|B), Laplace products {A|B} = (-1)^{ΣA+ΣB}(A|B)(Ã|B̃)
/// of a square matrix, integer combinations of Laplace products, and the
/// two independent ways of certifying that such a combination vanishes:
/// Leibniz expansion into x-polynomials, and the permutation criterion.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "straightlaw/index_set.hpp"
#include "straightlaw/polynomial.hpp"

namespace straightlaw {

/// The minor with row indices rows and column indices cols. A minor with
/// |rows| != |cols| denotes zero; (∅|∅) denotes 1.
struct Minor {
    IndexSet rows;
    IndexSet cols;

    [[nodiscard]] bool is_zero() const { return rows.size() != cols.size(); }
    [[nodiscard]] bool is_unit() const { return rows.empty() && cols.empty(); }
    [[nodiscard]] unsigned order() const { return rows.size(); }

    bool operator==(const Minor&) const = default;
    /// Storage order: larger minors first, then rows, then columns.
    friend std::strong_ordering operator<=>(const Minor& a, const Minor& b);

    [[nodiscard]] std::string to_string() const;
};

std::ostream& operator<<(std::ostream& os, const Minor& m);

/// Product order on (rows, cols) pairs: both components dominate.
bool leq(const Minor& a, const Minor& b);
bool less(const Minor& a, const Minor& b);

struct LaplaceProduct {
    IndexSet rows;
    IndexSet cols;
    unsigned ground = 0;
};

/// A formal integer combination of Laplace products on a ground-by-ground
/// matrix. Terms with |A| != |B| are zero and never stored.
class LaplaceCombination {
public:
    using Key = std::pair<IndexSet, IndexSet>;
    using TermMap = std::map<Key, Integer>;

    explicit LaplaceCombination(unsigned ground = 0);

    /// The combination 1·{A|B} (empty when |A| != |B|).
    static LaplaceCombination single(const IndexSet& a, const IndexSet& b, unsigned ground);

    [[nodiscard]] unsigned ground() const { return ground_; }
    [[nodiscard]] bool empty() const { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }
    [[nodiscard]] const TermMap& terms() const { return terms_; }
    [[nodiscard]] Integer coefficient(const IndexSet& a, const IndexSet& b) const;

    /// Adds c·{A|B}; throws InvalidInput if A or B leaves {1..ground}.
    void add(const IndexSet& a, const IndexSet& b, const Integer& c);
    /// Adds scale·other; grounds must agree.
    void add_scaled(const LaplaceCombination& other, const Integer& scale);

    LaplaceCombination& operator+=(const LaplaceCombination& other);
    LaplaceCombination& operator-=(const LaplaceCombination& other);
    friend LaplaceCombination operator+(LaplaceCombination a, const LaplaceCombination& b) { return a += b; }
    friend LaplaceCombination operator-(LaplaceCombination a, const LaplaceCombination& b) { return a -= b; }
    friend LaplaceCombination operator*(const Integer& s, const LaplaceCombination& c);

    /// Swaps the row and column set of every term.
    [[nodiscard]] LaplaceCombination transposed() const;

    bool operator==(const LaplaceCombination&) const = default;

    [[nodiscard]] std::string to_string() const;

private:
    unsigned ground_;
    TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const LaplaceCombination& c);

/// A permutation of {1..n}, stored as its 1-based images.
class Permutation {
public:
    /// images[i-1] = σ(i); throws InvalidInput unless a bijection of {1..n}.
    explicit Permutation(std::vector<unsigned> images);
    static Permutation identity(unsigned n);

    [[nodiscard]] unsigned size() const { return static_cast<unsigned>(images_.size()); }
    [[nodiscard]] unsigned operator()(unsigned i) const { return images_.at(i - 1); }
    [[nodiscard]] const std::vector<unsigned>& images() const { return images_; }
    [[nodiscard]] Sign sign() const;
    [[nodiscard]] IndexSet image(const IndexSet& s) const;

private:
    std::vector<unsigned> images_;
};

/// Leibniz expansion of the minor in the x-variables of an m x n matrix.
/// Throws InvalidInput when an index exceeds m (rows) or n (columns).
Polynomial expand_minor(const Minor& minor, unsigned m, unsigned n);

/// laplace_sign(A,B) · (A|B) · (Ã|B̃), expanded.
Polynomial expand_laplace(const LaplaceProduct& lp);

/// Expands every term and sums.
Polynomial expand(const LaplaceCombination& c);

/// {A|B} at the permutation matrix (δ_{σi,j}): sgn σ if σA = B, else 0.
int eval_on_permutation(const LaplaceProduct& lp, const Permutation& sigma);

inline constexpr unsigned kDefaultPermutationBound = 8;

/// Permutation criterion: for every σ in S_n, the coefficients of the terms
/// with σS = T sum to zero. Refuses (BoundExceeded) when n > bound.
bool check_relation(const LaplaceCombination& rel, unsigned bound = kDefaultPermutationBound);

/// Σ_{V⊆B}{A|V} − Σ_{U⊇A}{U|B}
LaplaceCombination relation_theorem1(const IndexSet& a, const IndexSet& b, unsigned n);

/// Σ_{C⊆V⊆B}{A|V} − Σ_{U⊇A, W⊆C}(−1)^{|W|}{U|B−W}; requires C ⊆ B.
LaplaceCombination relation_cor1(const IndexSet& a, const IndexSet& b, const IndexSet& c, unsigned n);

/// Σ_{U⊇A, W⊇B}(−1)^{|W̃|}{U|W} − Σ_{V⊆B}{A|Ṽ}
LaplaceCombination relation_cor2(const IndexSet& a, const IndexSet& b, unsigned n);

enum class ExpansionSide {
    Column,  // det X − Σ_{|S|=|B|} {S|B}, B fixed
    Row,     // det X − Σ_{|T|=|A|} {A|T}, A fixed
};

/// The Laplace expansion along a fixed row or column set. det X is written
/// as the Laplace product {∅|∅}.
LaplaceCombination laplace_expansion(const IndexSet& fixed, unsigned n, ExpansionSide side);

}  // namespace straightlaw
