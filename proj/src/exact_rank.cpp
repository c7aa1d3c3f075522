#include "straightlaw/exact_rank.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace straightlaw {

std::size_t exact_rank(IntegerMatrix rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().size();
    for (const auto& r : rows) {
        if (r.size() != cols) throw std::invalid_argument("exact_rank: ragged matrix");
    }

    std::size_t rank = 0;
    Integer previous = 1;
    Integer scratch;
    for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[pivot], rows[rank]);

        const auto& top = rows[rank];
        for (std::size_t i = rank + 1; i < rows.size(); ++i) {
            auto& row = rows[i];
            for (std::size_t j = col + 1; j < cols; ++j) {
                // row[j] = (top[col]*row[j] - row[col]*top[j]) / previous, exactly.
                row[j] *= top[col];
                scratch = row[col] * top[j];
                row[j] -= scratch;
                mpz_divexact(row[j].get_mpz_t(), row[j].get_mpz_t(), previous.get_mpz_t());
            }
            row[col] = 0;
        }
        previous = top[col];
        ++rank;
    }
    return rank;
}

std::size_t polynomial_rank(const std::vector<Polynomial>& polys) {
    std::map<Monomial, std::size_t, MonomialDescending> column;
    for (const auto& p : polys) {
        for (const auto& [m, c] : p.terms()) column.try_emplace(m, column.size());
    }
    IntegerMatrix matrix(polys.size(), std::vector<Integer>(column.size()));
    for (std::size_t i = 0; i < polys.size(); ++i) {
        for (const auto& [m, c] : polys[i].terms()) matrix[i][column.at(m)] = c;
    }
    return exact_rank(std::move(matrix));
}

}  // namespace straightlaw
