#pragma once

/// @file standard_monomials.hpp
/// @brief Products of minors, the standardness predicate, and the normal
/// form that rewrites any integer combination of products of minors into
/// standard monomials.

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "straightlaw/bideterminant.hpp"
#include "straightlaw/polynomial.hpp"

namespace straightlaw {

/// An ordered product of minors.
struct MinorWord {
    std::vector<Minor> factors;

    [[nodiscard]] std::size_t size() const { return factors.size(); }
    [[nodiscard]] bool empty() const { return factors.empty(); }

    bool operator==(const MinorWord&) const = default;
    friend auto operator<=>(const MinorWord&, const MinorWord&) = default;

    [[nodiscard]] std::string to_string() const;
};

std::ostream& operator<<(std::ostream& os, const MinorWord& w);

/// Map from canonical word to nonzero coefficient.
using WordCombination = std::map<MinorWord, Integer>;

/// A_1 ≤ ... ≤ A_r and B_1 ≤ ... ≤ B_r.
bool is_standard(const MinorWord& w);

/// Drops (∅|∅) factors; nullopt if some factor has |rows| != |cols|.
std::optional<MinorWord> canonicalize(const MinorWord& w);

/// Row multiset and column multiset of the word.
std::pair<Multiset, Multiset> content(const MinorWord& w);

/// Adds c·w to the combination after canonicalization.
void add_word(WordCombination& combo, const MinorWord& w, const Integer& c);

/// Every key of the result is standard and the expansion is unchanged.
/// Throws InvalidInput if an index lies outside {1..m} x {1..n}.
WordCombination normal_form(const WordCombination& c, unsigned m, unsigned n);
WordCombination normal_form(const MinorWord& w, unsigned m, unsigned n);

Polynomial expand(const MinorWord& w, unsigned m, unsigned n);
Polynomial expand(const WordCombination& c, unsigned m, unsigned n);

std::string to_string(const WordCombination& c);

}  // namespace straightlaw
