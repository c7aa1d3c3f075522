#pragma once

/// @file expression.hpp
/// @brief Text form of integer combinations of products of minors.
///
/// Grammar (whitespace-insensitive):
///
///     expression := '0' | sign? term (('+' | '-') term)*
///     term       := integer? factor+
///     factor     := '[' indices '|' indices ']'
///
/// Indices are positive, strictly increasing within a side, and 1-based.
/// "[|]" is the unit minor (∅|∅).

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "straightlaw/standard_monomials.hpp"

namespace straightlaw {

class ParseError : public InvalidInput {
public:
    ParseError(const std::string& message, std::size_t position);
    [[nodiscard]] std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

struct ExpressionTerm {
    Integer coeff;
    MinorWord word;
    bool operator==(const ExpressionTerm&) const = default;
};

/// Terms as written: order, repeated words and zero minors are kept.
struct Expression {
    std::vector<ExpressionTerm> terms;

    bool operator==(const Expression&) const = default;

    [[nodiscard]] WordCombination to_combination() const;
    /// Largest row and column index used (0 if none).
    [[nodiscard]] unsigned max_row() const;
    [[nodiscard]] unsigned max_col() const;
};

Expression parse_expression(std::string_view text);
std::string print_expression(const Expression& e);
Expression expression_from(const WordCombination& c);

}  // namespace straightlaw
