#include "straightlaw/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace straightlaw {

namespace {

void check_index(unsigned value, const char* what) {
    if (value < 1 || value > VariableOrder::kMaxIndex) {
        throw std::invalid_argument(std::string("variable ") + what + " index " + std::to_string(value) +
                                    " outside [1, 255]");
    }
}

}  // namespace

std::string Variable::to_string() const {
    const char name = kind == VariableKind::X ? 'x' : kind == VariableKind::Y ? 'y' : 'z';
    return std::string(1, name) + '[' + std::to_string(first) + ',' + std::to_string(second) + ']';
}

std::uint32_t VariableOrder::rank(const Variable& v) {
    check_index(v.first, "first");
    check_index(v.second, "second");
    switch (v.kind) {
        case VariableKind::X:
            return (v.first << 8) | v.second;
        case VariableKind::Y:
            return (1U << 24) | (v.second << 16) | v.first;
        case VariableKind::Z:
            return (1U << 24) | (v.second << 16) | (1U << 8) | v.first;
    }
    throw std::logic_error("unknown variable kind");
}

Variable VariableOrder::variable(std::uint32_t rank) {
    if ((rank >> 24) == 0) return Variable::x(rank >> 8, rank & 0xFFU);
    const unsigned sup = (rank >> 16) & 0xFFU;
    const unsigned index = rank & 0xFFU;
    return ((rank >> 8) & 1U) != 0 ? Variable::z(index, sup) : Variable::y(index, sup);
}

Monomial::Monomial(const Variable& v, std::uint32_t exponent) {
    if (exponent > 0) entries_.push_back({VariableOrder::rank(v), exponent});
}

Monomial Monomial::product_of(const std::vector<Variable>& vars) {
    std::vector<std::uint32_t> ranks;
    ranks.reserve(vars.size());
    for (const auto& v : vars) ranks.push_back(VariableOrder::rank(v));
    std::sort(ranks.begin(), ranks.end());
    Monomial m;
    for (auto r : ranks) {
        if (!m.entries_.empty() && m.entries_.back().rank == r) {
            ++m.entries_.back().exponent;
        } else {
            m.entries_.push_back({r, 1});
        }
    }
    return m;
}

std::uint32_t Monomial::exponent(const Variable& v) const {
    const auto r = VariableOrder::rank(v);
    auto it = std::lower_bound(entries_.begin(), entries_.end(), r,
                               [](const Entry& e, std::uint32_t key) { return e.rank < key; });
    return it != entries_.end() && it->rank == r ? it->exponent : 0;
}

std::uint64_t Monomial::degree() const {
    std::uint64_t d = 0;
    for (const auto& e : entries_) d += e.exponent;
    return d;
}

bool Monomial::divides(const Monomial& other) const {
    auto it = other.entries_.begin();
    for (const auto& e : entries_) {
        while (it != other.entries_.end() && it->rank < e.rank) ++it;
        if (it == other.entries_.end() || it->rank != e.rank || it->exponent < e.exponent) return false;
    }
    return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial out;
    out.entries_.reserve(entries_.size() + other.entries_.size());
    auto a = entries_.begin();
    auto b = other.entries_.begin();
    while (a != entries_.end() && b != other.entries_.end()) {
        if (a->rank < b->rank) {
            out.entries_.push_back(*a++);
        } else if (b->rank < a->rank) {
            out.entries_.push_back(*b++);
        } else {
            out.entries_.push_back({a->rank, a->exponent + b->exponent});
            ++a;
            ++b;
        }
    }
    out.entries_.insert(out.entries_.end(), a, entries_.end());
    out.entries_.insert(out.entries_.end(), b, other.entries_.end());
    return out;
}

Monomial Monomial::operator/(const Monomial& other) const {
    if (!other.divides(*this)) throw std::invalid_argument("monomial division is not exact");
    Monomial out;
    auto b = other.entries_.begin();
    for (const auto& e : entries_) {
        if (b != other.entries_.end() && b->rank == e.rank) {
            if (e.exponent > b->exponent) out.entries_.push_back({e.rank, e.exponent - b->exponent});
            ++b;
        } else {
            out.entries_.push_back(e);
        }
    }
    return out;
}

std::string Monomial::to_string() const {
    if (entries_.empty()) return "1";
    std::string out;
    for (const auto& e : entries_) {
        if (!out.empty()) out += '*';
        out += VariableOrder::variable(e.rank).to_string();
        if (e.exponent > 1) out += '^' + std::to_string(e.exponent);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Monomial& m) { return os << m.to_string(); }

std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b) {
    const auto& ea = a.entries();
    const auto& eb = b.entries();
    const std::size_t common = std::min(ea.size(), eb.size());
    for (std::size_t i = 0; i < common; ++i) {
        if (ea[i].rank != eb[i].rank) {
            // The smaller rank is a larger variable, present in only one of the two.
            return ea[i].rank < eb[i].rank ? std::strong_ordering::greater : std::strong_ordering::less;
        }
        if (ea[i].exponent != eb[i].exponent) return ea[i].exponent <=> eb[i].exponent;
    }
    return ea.size() <=> eb.size();
}

Polynomial::Polynomial(const Integer& constant) {
    if (constant != 0) terms_.emplace(Monomial(), constant);
}

Polynomial::Polynomial(const Variable& v) { terms_.emplace(Monomial(v), Integer(1)); }

Polynomial::Polynomial(const Monomial& m, const Integer& coefficient) {
    if (coefficient != 0) terms_.emplace(m, coefficient);
}

Integer Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Integer(0) : it->second;
}

const Monomial& Polynomial::leading_monomial() const {
    if (terms_.empty()) throw std::domain_error("leading monomial of the zero polynomial");
    return terms_.begin()->first;
}

void Polynomial::add_term(const Monomial& m, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            auto [it, inserted] = out.terms_.try_emplace(ma * mb, ca * cb);
            if (!inserted) it->second += ca * cb;
        }
    }
    std::erase_if(out.terms_, [](const auto& term) { return term.second == 0; });
    return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial& Polynomial::operator*=(const Integer& scalar) {
    if (scalar == 0) {
        terms_.clear();
    } else {
        for (auto& [m, c] : terms_) c *= scalar;
    }
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

bool Polynomial::operator==(const Polynomial& other) const {
    if (terms_.size() != other.terms_.size()) return false;
    auto b = other.terms_.begin();
    for (const auto& [m, c] : terms_) {
        if (!(m == b->first) || c != b->second) return false;
        ++b;
    }
    return true;
}

Integer Polynomial::evaluate(const std::function<Integer(const Variable&)>& value) const {
    Integer total = 0;
    for (const auto& [m, c] : terms_) {
        Integer term = c;
        for (const auto& e : m.entries()) {
            Integer power;
            mpz_pow_ui(power.get_mpz_t(), value(VariableOrder::variable(e.rank)).get_mpz_t(), e.exponent);
            term *= power;
            if (term == 0) break;
        }
        total += term;
    }
    return total;
}

Polynomial Polynomial::substitute(const std::function<Polynomial(const Variable&)>& images) const {
    std::map<std::uint32_t, std::vector<Polynomial>> powers;  // powers[rank][k] = image^(k+1)
    auto power_of = [&](std::uint32_t rank, std::uint32_t exponent) -> const Polynomial& {
        auto& table = powers[rank];
        if (table.empty()) table.push_back(images(VariableOrder::variable(rank)));
        while (table.size() < exponent) table.push_back(table.back() * table.front());
        return table[exponent - 1];
    };
    Polynomial out;
    for (const auto& [m, c] : terms_) {
        Polynomial term(c);
        for (const auto& e : m.entries()) term *= power_of(e.rank, e.exponent);
        out += term;
    }
    return out;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Integer magnitude = abs(c);
        if (first) {
            if (c < 0) out += '-';
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (m.is_one()) {
            out += magnitude.get_str();
        } else {
            if (magnitude != 1) out += magnitude.get_str() + '*';
            out += m.to_string();
        }
        first = false;
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

const Monomial& leading_monomial(const Polynomial& p) { return p.leading_monomial(); }

}  // namespace straightlaw
