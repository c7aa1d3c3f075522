#pragma once

/// @file relation_sweep.hpp
/// @brief Exhaustive certification of the generated relation families:
/// every admissible parameter tuple on a given n is generated and checked
/// by Leibniz expansion and/or the permutation criterion.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "straightlaw/bideterminant.hpp"

namespace straightlaw {

enum class RelationFamily { Theorem1, Cor1, Cor2, Laplace };

inline constexpr RelationFamily kAllFamilies[] = {RelationFamily::Theorem1, RelationFamily::Cor1,
                                                  RelationFamily::Cor2, RelationFamily::Laplace};

/// "theorem1", "cor1", "cor2", "laplace"
std::string_view family_name(RelationFamily family);
std::optional<RelationFamily> parse_family(std::string_view name);

/// Largest n for which the polynomial-expansion route is run.
inline constexpr unsigned kOracleBound = 4;

/// Calls visit(label, relation) for every instance of the family on n.
void for_each_relation(RelationFamily family, unsigned n,
                       const std::function<void(const std::string&, const LaplaceCombination&)>& visit);

struct SweepOptions {
    bool oracle = true;
    bool sigma = true;
};

struct SweepReport {
    RelationFamily family = RelationFamily::Theorem1;
    unsigned n = 0;
    std::size_t instances = 0;
    std::size_t oracle_passed = 0;
    std::size_t sigma_passed = 0;
    bool oracle_run = false;
    bool sigma_run = false;
    std::size_t disagreements = 0;       // oracle and criterion gave different verdicts
    std::vector<std::string> failures;   // first few failing instances

    [[nodiscard]] bool ok() const {
        return (!oracle_run || oracle_passed == instances) && (!sigma_run || sigma_passed == instances) &&
               disagreements == 0;
    }
};

/// Throws BoundExceeded when the oracle is requested above kOracleBound or
/// the criterion above kDefaultPermutationBound.
SweepReport sweep_relations(RelationFamily family, unsigned n, SweepOptions options = {});

}  // namespace straightlaw
