#include "straightlaw/standard_monomials.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

#include "straightlaw/straightening.hpp"

namespace straightlaw {

std::string MinorWord::to_string() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const MinorWord& w) {
    if (w.empty()) return os << "[|]";
    for (const auto& f : w.factors) os << f;
    return os;
}

bool is_standard(const MinorWord& w) {
    for (std::size_t i = 1; i < w.factors.size(); ++i) {
        if (!leq(w.factors[i - 1], w.factors[i])) return false;
    }
    return true;
}

std::optional<MinorWord> canonicalize(const MinorWord& w) {
    MinorWord out;
    out.factors.reserve(w.factors.size());
    for (const auto& f : w.factors) {
        if (f.is_zero()) return std::nullopt;
        if (!f.is_unit()) out.factors.push_back(f);
    }
    return out;
}

std::pair<Multiset, Multiset> content(const MinorWord& w) {
    std::pair<Multiset, Multiset> out;
    for (const auto& f : w.factors) {
        for (unsigned e : f.rows) ++out.first[e];
        for (unsigned e : f.cols) ++out.second[e];
    }
    return out;
}

void add_word(WordCombination& combo, const MinorWord& w, const Integer& c) {
    if (c == 0) return;
    auto canonical = canonicalize(w);
    if (!canonical) return;
    auto [it, inserted] = combo.try_emplace(std::move(*canonical), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) combo.erase(it);
    }
}

namespace {

void require_inside(const MinorWord& w, unsigned m, unsigned n) {
    for (const auto& f : w.factors) {
        if (f.rows.max() > m || f.cols.max() > n) {
            throw InvalidInput("minor " + f.to_string() + " outside a " + std::to_string(m) + "x" +
                               std::to_string(n) + " matrix");
        }
    }
}

class NormalForm {
public:
    NormalForm(unsigned m, unsigned n) : m_(m), n_(n) {}

    // w is canonical and nonzero.
    const WordCombination& of(const MinorWord& w) {
        if (auto it = memo_.find(w); it != memo_.end()) return it->second;

        WordCombination result;
        if (w.size() <= 1) {
            result.emplace(w, 1);
            return memo_.emplace(w, std::move(result)).first->second;
        }

        const Minor& head = w.factors.front();
        const MinorWord tail{{w.factors.begin() + 1, w.factors.end()}};
        // std::map references survive the insertions made by the recursion.
        const WordCombination& tail_form = of(tail);

        for (const auto& [t, c] : tail_form) {
            if (t.empty() || leq(head, t.factors.front())) {
                MinorWord joined;
                joined.factors.reserve(t.size() + 1);
                joined.factors.push_back(head);
                joined.factors.insert(joined.factors.end(), t.factors.begin(), t.factors.end());
                add_word(result, joined, c);
                continue;
            }
            const auto pairs = straighten_pair({head, t.factors.front()}, m_, n_);
            for (const auto& [pair, d] : pairs) {
                if (!less(pair.first, head)) {
                    throw std::logic_error("normal form: first factor " + pair.first.to_string() +
                                           " does not descend below " + head.to_string());
                }
                MinorWord next;
                next.factors.reserve(t.size() + 1);
                next.factors.push_back(pair.first);
                next.factors.push_back(pair.second);
                next.factors.insert(next.factors.end(), t.factors.begin() + 1, t.factors.end());
                auto canonical = canonicalize(next);
                if (!canonical) continue;
                const Integer scale = c * d;
                for (const auto& [u, e] : of(*canonical)) add_word(result, u, scale * e);
            }
        }
        return memo_.emplace(w, std::move(result)).first->second;
    }

private:
    unsigned m_;
    unsigned n_;
    std::map<MinorWord, WordCombination> memo_;
};

}  // namespace

WordCombination normal_form(const WordCombination& c, unsigned m, unsigned n) {
    NormalForm engine(m, n);
    WordCombination out;
    for (const auto& [w, coeff] : c) {
        require_inside(w, m, n);
        auto canonical = canonicalize(w);
        if (!canonical) continue;
        for (const auto& [u, e] : engine.of(*canonical)) add_word(out, u, coeff * e);
    }
    return out;
}

WordCombination normal_form(const MinorWord& w, unsigned m, unsigned n) {
    require_inside(w, m, n);
    WordCombination input;
    add_word(input, w, 1);
    return normal_form(input, m, n);
}

Polynomial expand(const MinorWord& w, unsigned m, unsigned n) {
    Polynomial out(1);
    for (const auto& f : w.factors) {
        out *= expand_minor(f, m, n);
        if (out.is_zero()) break;
    }
    return out;
}

Polynomial expand(const WordCombination& c, unsigned m, unsigned n) {
    Polynomial out;
    for (const auto& [w, coeff] : c) out += expand(w, m, n) * coeff;
    return out;
}

std::string to_string(const WordCombination& c) {
    if (c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, coeff] : c) {
        if (first) {
            if (coeff < 0) os << '-';
        } else {
            os << (coeff < 0 ? " - " : " + ");
        }
        Integer magnitude = abs(coeff);
        if (magnitude != 1) os << magnitude;
        os << w;
        first = false;
    }
    return os.str();
}

}  // namespace straightlaw
