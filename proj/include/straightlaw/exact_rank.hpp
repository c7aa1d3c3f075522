#pragma once

/// @file exact_rank.hpp
/// @brief Rank of integer matrices by fraction-free (Bareiss) elimination.

#include <cstddef>
#include <vector>

#include "straightlaw/polynomial.hpp"

namespace straightlaw {

using IntegerMatrix = std::vector<std::vector<Integer>>;

/// Rank over Q of a rectangular integer matrix (rows may not be ragged).
std::size_t exact_rank(IntegerMatrix rows);

/// Rank of the coefficient matrix of the given polynomials (one row each,
/// one column per monomial occurring in any of them).
std::size_t polynomial_rank(const std::vector<Polynomial>& polys);

}  // namespace straightlaw
