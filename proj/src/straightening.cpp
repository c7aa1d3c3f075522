#include "straightlaw/straightening.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace straightlaw {

namespace {

std::uint64_t depth_limit(unsigned n) {
    // 4^n, saturated.
    return n >= 31 ? std::numeric_limits<std::uint64_t>::max() : std::uint64_t{1} << (2 * n);
}

bool strictly_below(const IndexSet& u, const IndexSet& w, const IndexSet& a, const IndexSet& b) {
    return leq(u, a) && leq(w, b) && !(u == a && w == b);
}

// Moves the term {A|B} of a vanishing relation to the other side:
// relation = ε{A|B} + R  ⇒  {A|B} = −ε·R.
LaplaceCombination isolate(const LaplaceCombination& relation, const IndexSet& a, const IndexSet& b) {
    const Integer eps = relation.coefficient(a, b);
    if (eps != 1 && eps != -1) {
        throw std::logic_error("target {" + a.to_string() + "|" + b.to_string() + "} has coefficient " +
                               eps.get_str() + " in its rewriting relation");
    }
    LaplaceCombination rest(relation.ground());
    for (const auto& [key, c] : relation.terms()) {
        if (key.first == a && key.second == b) continue;
        rest.add(key.first, key.second, -eps * c);
    }
    return rest;
}

void require_descent(const LaplaceCombination& rest, const IndexSet& a, const IndexSet& b) {
    for (const auto& [key, c] : rest.terms()) {
        if (!strictly_below(key.first, key.second, a, b)) {
            throw std::logic_error("straightening step from {" + a.to_string() + "|" + b.to_string() +
                                   "} does not descend: produced {" + key.first.to_string() + "|" +
                                   key.second.to_string() + "}");
        }
    }
}

ReductionStep exchange_step(const IndexSet& a, const IndexSet& b, unsigned n) {
    // b = {i_1 < ... < i_p}, complement = {j_1 < ... < j_q} with q ≤ p.
    const auto is = b.elements();
    const auto js = complement(b, n).elements();
    std::size_t nu = 0;
    while (nu < js.size() && is[nu] <= js[nu]) ++nu;
    if (nu == js.size()) throw std::logic_error("exchange step on a good column set");

    IndexSet head;  // {j_1, ..., j_v}
    for (std::size_t t = 0; t <= nu; ++t) head = head.united(IndexSet{js[t]});
    IndexSet tail;  // {i_v, ..., i_p}
    for (std::size_t t = nu; t < is.size(); ++t) tail = tail.united(IndexSet{is[t]});

    const IndexSet d = b.united(head);
    const IndexSet c = head.united(tail);
    auto relation = relation_cor1(a, d, c, n);
    auto rest = isolate(relation, a, b);
    return {ReductionStep::Kind::Exchange, std::move(relation), std::move(rest)};
}

}  // namespace

std::size_t LaplaceStraightener::KeyHash::operator()(const Key& k) const noexcept {
    std::uint64_t h = k.rows * 0x9E3779B97F4A7C15ULL;
    h ^= k.cols + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2);
    h ^= k.ground + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
}

ReductionStep reduction_step(const IndexSet& a, const IndexSet& b, unsigned n) {
    if (a.max() > n || b.max() > n) throw InvalidInput("reduction_step: sets outside {1..n}");
    if (a.size() != b.size()) throw InvalidInput("reduction_step: |A| != |B|");
    const bool a_good = is_good(a, n);
    const bool b_good = is_good(b, n);
    if (a_good && b_good) throw InvalidInput("reduction_step: both sets are already good");

    if (2 * a.size() < n) {
        auto relation = relation_cor2(a, b, n);
        auto rest = isolate(relation, a, b);
        require_descent(rest, a, b);
        return {ReductionStep::Kind::Complement, std::move(relation), std::move(rest)};
    }
    if (!b_good) {
        auto step = exchange_step(a, b, n);
        require_descent(step.rest, a, b);
        return step;
    }
    auto step = exchange_step(b, a, n);
    require_descent(step.rest, b, a);
    return {ReductionStep::Kind::Transposed, step.relation.transposed(), step.rest.transposed()};
}

LaplaceCombination LaplaceStraightener::straighten(const IndexSet& a, const IndexSet& b, unsigned n) {
    if (n > kMaxGround) throw InvalidInput("ground bound above " + std::to_string(kMaxGround));
    if (a.max() > n || b.max() > n) {
        throw InvalidInput("straighten_laplace: {" + a.to_string() + "|" + b.to_string() + "} outside {1.." +
                           std::to_string(n) + "}");
    }
    return straighten_impl(a, b, n, 0);
}

LaplaceCombination LaplaceStraightener::straighten_impl(const IndexSet& a, const IndexSet& b, unsigned n,
                                                        std::uint64_t depth) {
    if (a.size() != b.size()) return LaplaceCombination(n);
    if (depth > depth_limit(n)) throw std::logic_error("straightening recursion exceeded 4^n levels");

    const bool a_good = is_good(a, n);
    const bool b_good = is_good(b, n);
    if (a_good && b_good) return LaplaceCombination::single(a, b, n);

    const Key key{a.mask(), b.mask(), n};
    {
        std::shared_lock lock(mutex_);
        if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    }

    LaplaceCombination result(n);
    if (!a_good && b_good && 2 * a.size() >= n) {
        // Only the rows are bad: straighten the transpose, where they are columns.
        result = straighten_impl(b, a, n, depth + 1).transposed();
    } else {
        const auto step = reduction_step(a, b, n);
        for (const auto& [term, c] : step.rest.terms()) {
            result.add_scaled(straighten_impl(term.first, term.second, n, depth + 1), c);
        }
    }

    std::unique_lock lock(mutex_);
    return cache_.try_emplace(key, std::move(result)).first->second;
}

std::size_t LaplaceStraightener::cache_size() const {
    std::shared_lock lock(mutex_);
    return cache_.size();
}

void LaplaceStraightener::clear() {
    std::unique_lock lock(mutex_);
    cache_.clear();
}

LaplaceStraightener& default_straightener() {
    static LaplaceStraightener instance;
    return instance;
}

LaplaceCombination straighten_laplace(const IndexSet& a, const IndexSet& b, unsigned n) {
    return default_straightener().straighten(a, b, n);
}

// --- Merge maps ----------------------------------------------------------------

bool MergeMap::injective_on(const IndexSet& p) const {
    unsigned previous = 0;
    for (unsigned i : p) {
        const unsigned value = (*this)(i);
        if (value == previous) return false;  // f is monotone, so repeats are adjacent
        previous = value;
    }
    return true;
}

IndexSet MergeMap::image(const IndexSet& p) const {
    IndexSet out;
    for (unsigned i : p) out = out.united(IndexSet::from_mask(std::uint64_t{1} << ((*this)(i) - 1)));
    return out;
}

MergeMap merge_map(const IndexSet& u1, const IndexSet& u2) {
    const auto a = u1.elements();
    const auto b = u2.elements();
    MergeMap out;
    out.k = static_cast<unsigned>(a.size() + b.size());
    if (out.k > kMaxGround) throw InvalidInput("merge_map: |U'| + |U''| exceeds kMaxGround");
    out.f.reserve(out.k);
    std::uint64_t kp = 0;
    std::uint64_t kpp = 0;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() || j < b.size()) {
        const std::uint64_t bit = std::uint64_t{1} << out.f.size();
        if (j == b.size() || (i < a.size() && a[i] <= b[j])) {
            out.f.push_back(a[i++]);
            kp |= bit;
        } else {
            out.f.push_back(b[j++]);
            kpp |= bit;
        }
    }
    out.kprime = IndexSet::from_mask(kp);
    out.kdoubleprime = IndexSet::from_mask(kpp);
    return out;
}

// --- Products of two minors ---------------------------------------------------

PairCombination straighten_pair(const MinorPair& p, unsigned m, unsigned n) {
    for (const Minor* factor : {&p.first, &p.second}) {
        if (factor->rows.max() > m || factor->cols.max() > n) {
            throw InvalidInput("minor " + factor->to_string() + " outside a " + std::to_string(m) + "x" +
                               std::to_string(n) + " matrix");
        }
    }
    if (p.first.is_zero() || p.second.is_zero()) return {};
    if (leq(p.first, p.second)) return {{p, Integer(1)}};

    const MergeMap phi = merge_map(p.first.rows, p.second.rows);
    const MergeMap psi = merge_map(p.first.cols, p.second.cols);
    const unsigned k = phi.k;

    const auto laplace = straighten_laplace(phi.kprime, psi.kprime, k);
    const Sign outer = laplace_sign(phi.kprime, psi.kprime);

    PairCombination out;
    for (const auto& [key, c] : laplace.terms()) {
        const IndexSet& rows1 = key.first;
        const IndexSet& cols1 = key.second;
        const IndexSet rows2 = complement(rows1, k);
        const IndexSet cols2 = complement(cols1, k);
        // Products where phi or psi repeats an index have two equal rows or columns.
        if (!phi.injective_on(rows1) || !phi.injective_on(rows2) || !psi.injective_on(cols1) ||
            !psi.injective_on(cols2)) {
            continue;
        }
        const MinorPair term{{phi.image(rows1), psi.image(cols1)}, {phi.image(rows2), psi.image(cols2)}};
        if (!less(term.first, p.first) || !leq(term.first, term.second)) {
            throw std::logic_error("straighten_pair produced an out-of-order term " + term.first.to_string() +
                                   term.second.to_string());
        }
        const Integer coeff = (outer * laplace_sign(rows1, cols1)).is_negative() ? Integer(-c) : c;
        auto [it, inserted] = out.try_emplace(term, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) out.erase(it);
        }
    }
    return out;
}

Polynomial expand(const PairCombination& c, unsigned m, unsigned n) {
    Polynomial out;
    for (const auto& [pair, coeff] : c) {
        out += expand_minor(pair.first, m, n) * expand_minor(pair.second, m, n) * coeff;
    }
    return out;
}

std::string to_string(const PairCombination& c) {
    if (c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [pair, coeff] : c) {
        if (first) {
            if (coeff < 0) os << '-';
        } else {
            os << (coeff < 0 ? " - " : " + ");
        }
        Integer magnitude = abs(coeff);
        if (magnitude != 1) os << magnitude;
        os << pair.first << pair.second;
        first = false;
    }
    return os.str();
}

}  // namespace straightlaw
