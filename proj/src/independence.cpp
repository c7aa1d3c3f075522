#include "straightlaw/independence.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <utility>

#include "straightlaw/bideterminant.hpp"
#include "straightlaw/exact_rank.hpp"
#include "straightlaw/straightening.hpp"

namespace straightlaw {

namespace {

template <typename Entry>
Polynomial leibniz(const IndexSet& rows, const IndexSet& cols, Entry entry) {
    if (rows.size() != cols.size()) return {};
    const auto r = rows.elements();
    const auto c = cols.elements();
    std::vector<std::size_t> perm(r.size());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::vector<Variable> vars(r.size());
    Polynomial out;
    do {
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            vars[i] = entry(r[i], c[perm[i]]);
            for (std::size_t j = i + 1; j < r.size(); ++j) inversions += perm[i] > perm[j] ? 1 : 0;
        }
        out.add_term(Monomial::product_of(vars), inversions % 2 == 0 ? 1 : -1);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

}  // namespace

Specialization::Specialization(unsigned rows, unsigned cols, unsigned shared) : m(rows), n(cols), inner(shared) {
    if (inner == 0) throw InvalidInput("specialization needs N >= 1");
    if (m > VariableOrder::kMaxIndex || n > VariableOrder::kMaxIndex || inner > VariableOrder::kMaxIndex) {
        throw InvalidInput("specialization dimensions above the variable index range");
    }
}

Polynomial specialize(const Polynomial& p, const Specialization& spec) {
    return p.substitute([&](const Variable& v) {
        if (v.kind != VariableKind::X) return Polynomial(v);
        if (v.first > spec.m || v.second > spec.n) throw InvalidInput("x-variable outside the specialization");
        Polynomial image;
        for (unsigned nu = 1; nu <= spec.inner; ++nu) {
            image.add_term(Monomial(Variable::y(v.first, nu)) * Monomial(Variable::z(v.second, nu)), 1);
        }
        return image;
    });
}

Polynomial expand_y_minor(const IndexSet& rows, const IndexSet& sups) {
    return leibniz(rows, sups, [](unsigned i, unsigned s) { return Variable::y(i, s); });
}

Polynomial expand_z_minor(const IndexSet& sups, const IndexSet& cols) {
    // Z has rows indexed by the superscript and columns by j.
    return leibniz(sups, cols, [](unsigned s, unsigned j) { return Variable::z(j, s); });
}

bool binet_cauchy_check(const IndexSet& a, const IndexSet& b, const Specialization& spec) {
    if (a.size() != b.size()) throw InvalidInput("binet_cauchy_check needs |A| = |B|");
    if (a.size() > std::min({spec.m, spec.n, spec.inner})) throw InvalidInput("binet_cauchy_check: minor larger than min(m,n,N)");
    const Polynomial lhs = specialize(expand_minor({a, b}, spec.m, spec.n), spec);
    Polynomial rhs;
    for (const auto& s : subsets_of_size(spec.inner, a.size())) rhs += expand_y_minor(a, s) * expand_z_minor(s, b);
    return lhs == rhs;
}

Monomial minor_leading_monomial(const IndexSet& a, const IndexSet& b, const Specialization& spec) {
    if (a.size() != b.size()) throw InvalidInput("leading monomial of a size-mismatched minor");
    if (a.size() > spec.inner) {
        throw InvalidInput("leading monomial needs N >= |A|; got N = " + std::to_string(spec.inner) + ", |A| = " +
                           std::to_string(a.size()));
    }
    if (a.max() > spec.m || b.max() > spec.n) throw InvalidInput("minor outside the specialization");
    std::vector<Variable> vars;
    vars.reserve(2 * a.size());
    unsigned s = 1;
    for (unsigned e : a) vars.push_back(Variable::y(e, s++));
    s = 1;
    for (unsigned e : b) vars.push_back(Variable::z(e, s++));
    return Monomial::product_of(vars);
}

LeadingWitness leading_witness(const MinorWord& word, const Specialization& spec) {
    LeadingWitness out{word, Monomial()};
    for (const auto& f : word.factors) out.monomial = out.monomial * minor_leading_monomial(f.rows, f.cols, spec);
    return out;
}

std::vector<IndexSet> decode_leading(const Monomial& m, WitnessSide side) {
    const VariableKind wanted = side == WitnessSide::Rows ? VariableKind::Y : VariableKind::Z;
    // remaining[s][index] = exponent of y[index,s] (or z[index,s]).
    std::map<unsigned, std::map<unsigned, std::uint32_t>> remaining;
    for (const auto& e : m.entries()) {
        const Variable v = VariableOrder::variable(e.rank);
        if (v.kind == VariableKind::X) throw DecodeError("decode_leading: monomial contains " + v.to_string());
        if (v.kind == wanted) remaining[v.second][v.first] = e.exponent;
    }

    std::vector<IndexSet> out;
    while (!remaining.empty()) {
        if (remaining.begin()->first != 1) throw DecodeError("decode_leading: superscript 1 missing from the remainder");
        std::vector<unsigned> elements;
        for (unsigned s = 1;; ++s) {
            auto level = remaining.find(s);
            if (level == remaining.end()) break;
            auto least = level->second.begin();
            elements.push_back(least->first);
            if (--least->second == 0) level->second.erase(least);
            if (level->second.empty()) remaining.erase(level);
        }
        try {
            out.emplace_back(std::span<const unsigned>(elements));
        } catch (const InvalidInput&) {
            throw DecodeError("decode_leading: peeled indices are not strictly increasing");
        }
    }
    return out;
}

std::vector<MinorWord> standard_monomials(unsigned m, unsigned n, unsigned max_factors) {
    std::vector<Minor> minors;
    for (unsigned p = 1; p <= std::min(m, n); ++p) {
        for (const auto& rows : subsets_of_size(m, p)) {
            for (const auto& cols : subsets_of_size(n, p)) minors.push_back({rows, cols});
        }
    }
    std::sort(minors.begin(), minors.end());

    std::vector<MinorWord> out;
    MinorWord current;
    auto extend = [&](auto&& self) -> void {
        if (current.size() == max_factors) return;
        for (const auto& next : minors) {
            if (!current.empty() && !leq(current.factors.back(), next)) continue;
            current.factors.push_back(next);
            out.push_back(current);
            self(self);
            current.factors.pop_back();
        }
    };
    extend(extend);
    return out;
}

IndependenceReport verify_independence(unsigned m, unsigned n, unsigned max_factors, const IndependenceBounds& bounds) {
    if (m < 1 || n < 1 || max_factors < 1) throw InvalidInput("verify_independence needs m, n, r >= 1");
    if (m > bounds.max_dim || n > bounds.max_dim || max_factors > bounds.max_factors) {
        throw BoundExceeded("independence check refused: m, n <= " + std::to_string(bounds.max_dim) +
                            " and r <= " + std::to_string(bounds.max_factors) + " required");
    }
    IndependenceReport report;
    report.m = m;
    report.n = n;
    report.inner = std::min(m, n);
    report.max_factors = max_factors;
    const Specialization spec(m, n, report.inner);

    const auto words = standard_monomials(m, n, max_factors);
    report.standard_count = words.size();

    std::set<Monomial, MonomialDescending> witnesses;
    report.decode_inverts = true;
    for (const auto& w : words) {
        const auto witness = leading_witness(w, spec);
        witnesses.insert(witness.monomial);
        try {
            const auto rows = decode_leading(witness.monomial, WitnessSide::Rows);
            const auto cols = decode_leading(witness.monomial, WitnessSide::Cols);
            bool same = rows.size() == w.size() && cols.size() == w.size();
            for (std::size_t i = 0; same && i < w.size(); ++i) {
                same = rows[i] == w.factors[i].rows && cols[i] == w.factors[i].cols;
            }
            report.decode_inverts = report.decode_inverts && same;
        } catch (const DecodeError&) {
            report.decode_inverts = false;
        }
    }
    report.distinct_witnesses = witnesses.size();
    report.witnesses_distinct = witnesses.size() == words.size();

    // Monomials of different content never share an x-monomial, so the
    // coefficient matrix is block diagonal by content.
    std::map<std::pair<Multiset, Multiset>, std::vector<Polynomial>> blocks;
    for (const auto& w : words) blocks[content(w)].push_back(expand(w, m, n));
    for (const auto& [key, polys] : blocks) report.rank += polynomial_rank(polys);
    return report;
}

CompletenessReport verify_relation_completeness(unsigned n) {
    if (n < 1) throw InvalidInput("verify_relation_completeness needs n >= 1");
    if (n > kCompletenessBound) {
        throw BoundExceeded("relation completeness refused: n <= " + std::to_string(kCompletenessBound) + " required");
    }
    CompletenessReport report;
    report.n = n;

    std::vector<LaplaceCombination::Key> keys;
    for (unsigned p = 0; p <= n; ++p) {
        for (const auto& a : subsets_of_size(n, p)) {
            for (const auto& b : subsets_of_size(n, p)) keys.emplace_back(a, b);
        }
    }
    std::sort(keys.begin(), keys.end());
    std::map<LaplaceCombination::Key, std::size_t> position;
    for (const auto& k : keys) position.emplace(k, position.size());
    report.laplace_products = keys.size();

    auto as_row = [&](const LaplaceCombination& c) {
        std::vector<Integer> row(keys.size());
        for (const auto& [k, coeff] : c.terms()) row[position.at(k)] = coeff;
        return row;
    };

    IntegerMatrix relations;
    for_each_subset(IndexSet::range(n), [&](const IndexSet& a) {
        for_each_subset(IndexSet::range(n), [&](const IndexSet& b) { relations.push_back(as_row(relation_theorem1(a, b, n))); });
    });
    report.relation_rank = exact_rank(relations);

    std::map<LaplaceCombination::Key, Polynomial> expansions;
    for (const auto& k : keys) expansions.emplace(k, expand_laplace({k.first, k.second, n}));

    report.all_straightened = true;
    IntegerMatrix extended = relations;
    std::vector<Polynomial> all;
    std::vector<Polynomial> good;
    for (const auto& k : keys) {
        const auto& [a, b] = k;
        all.push_back(expansions.at(k));
        if (is_good(a, n) && is_good(b, n)) {
            ++report.good_pairs;
            good.push_back(expansions.at(k));
        }
        const auto straightened = straighten_laplace(a, b, n);
        Polynomial rewritten;
        for (const auto& [t, c] : straightened.terms()) {
            const bool ok = is_good(t.first, n) && is_good(t.second, n) && leq(t.first, a) && leq(t.second, b);
            report.all_straightened = report.all_straightened && ok;
            rewritten += expansions.at(t) * c;
        }
        report.all_straightened = report.all_straightened && rewritten == expansions.at(k);
        extended.push_back(as_row(LaplaceCombination::single(a, b, n) - straightened));
    }
    report.within_relation_span = exact_rank(std::move(extended)) == report.relation_rank;
    report.span_rank = polynomial_rank(all);
    report.good_rank = polynomial_rank(good);
    return report;
}

}  // namespace straightlaw
