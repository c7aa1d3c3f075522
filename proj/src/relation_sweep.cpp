#include "straightlaw/relation_sweep.hpp"

#include <map>

namespace straightlaw {

namespace {

constexpr std::size_t kMaxReportedFailures = 10;

std::string label(std::string_view family, std::initializer_list<IndexSet> sets) {
    std::string out(family);
    out += '(';
    bool first = true;
    for (const auto& s : sets) {
        if (!first) out += ", ";
        out += s.to_string();
        first = false;
    }
    return out + ')';
}

}  // namespace

std::string_view family_name(RelationFamily family) {
    switch (family) {
        case RelationFamily::Theorem1: return "theorem1";
        case RelationFamily::Cor1: return "cor1";
        case RelationFamily::Cor2: return "cor2";
        case RelationFamily::Laplace: return "laplace";
    }
    return "unknown";
}

std::optional<RelationFamily> parse_family(std::string_view name) {
    for (auto f : kAllFamilies) {
        if (family_name(f) == name) return f;
    }
    return std::nullopt;
}

void for_each_relation(RelationFamily family, unsigned n,
                       const std::function<void(const std::string&, const LaplaceCombination&)>& visit) {
    const IndexSet full = IndexSet::range(n);
    const auto name = family_name(family);
    switch (family) {
        case RelationFamily::Theorem1:
            for_each_subset(full, [&](const IndexSet& a) {
                for_each_subset(full, [&](const IndexSet& b) { visit(label(name, {a, b}), relation_theorem1(a, b, n)); });
            });
            break;
        case RelationFamily::Cor1:
            for_each_subset(full, [&](const IndexSet& a) {
                for_each_subset(full, [&](const IndexSet& b) {
                    for_each_subset(b, [&](const IndexSet& c) { visit(label(name, {a, b, c}), relation_cor1(a, b, c, n)); });
                });
            });
            break;
        case RelationFamily::Cor2:
            for_each_subset(full, [&](const IndexSet& a) {
                for_each_subset(full, [&](const IndexSet& b) { visit(label(name, {a, b}), relation_cor2(a, b, n)); });
            });
            break;
        case RelationFamily::Laplace:
            for_each_subset(full, [&](const IndexSet& s) {
                visit(label("laplace-column", {s}), laplace_expansion(s, n, ExpansionSide::Column));
                visit(label("laplace-row", {s}), laplace_expansion(s, n, ExpansionSide::Row));
            });
            break;
    }
}

SweepReport sweep_relations(RelationFamily family, unsigned n, SweepOptions options) {
    if (options.oracle && n > kOracleBound) {
        throw BoundExceeded("expansion oracle refused: n = " + std::to_string(n) + " exceeds " +
                            std::to_string(kOracleBound));
    }
    if (options.sigma && n > kDefaultPermutationBound) {
        throw BoundExceeded("permutation criterion refused: n = " + std::to_string(n) + " exceeds " +
                            std::to_string(kDefaultPermutationBound));
    }
    SweepReport report;
    report.family = family;
    report.n = n;
    report.oracle_run = options.oracle;
    report.sigma_run = options.sigma;

    std::map<LaplaceCombination::Key, Polynomial> expansions;
    auto oracle_zero = [&](const LaplaceCombination& rel) {
        Polynomial total;
        for (const auto& [key, c] : rel.terms()) {
            auto it = expansions.find(key);
            if (it == expansions.end()) it = expansions.emplace(key, expand_laplace({key.first, key.second, n})).first;
            total += it->second * c;
        }
        return total.is_zero();
    };

    for_each_relation(family, n, [&](const std::string& name, const LaplaceCombination& rel) {
        ++report.instances;
        bool failed = false;
        std::optional<bool> by_oracle;
        std::optional<bool> by_sigma;
        if (options.oracle) {
            by_oracle = oracle_zero(rel);
            report.oracle_passed += *by_oracle ? 1 : 0;
            failed = failed || !*by_oracle;
        }
        if (options.sigma) {
            by_sigma = check_relation(rel);
            report.sigma_passed += *by_sigma ? 1 : 0;
            failed = failed || !*by_sigma;
        }
        if (by_oracle && by_sigma && *by_oracle != *by_sigma) ++report.disagreements;
        if (failed && report.failures.size() < kMaxReportedFailures) report.failures.push_back(name);
    });
    return report;
}

}  // namespace straightlaw
