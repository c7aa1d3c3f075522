#include "straightlaw/bideterminant.hpp"

#include <algorithm>
#include <limits>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

namespace straightlaw {

std::strong_ordering operator<=>(const Minor& a, const Minor& b) {
    if (a.rows.size() != b.rows.size()) return b.rows.size() <=> a.rows.size();
    if (auto c = a.rows <=> b.rows; c != 0) return c;
    return a.cols <=> b.cols;
}

std::string Minor::to_string() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Minor& m) {
    os << '[';
    bool first = true;
    for (unsigned e : m.rows) {
        os << (first ? "" : " ") << e;
        first = false;
    }
    os << '|';
    first = true;
    for (unsigned e : m.cols) {
        os << (first ? "" : " ") << e;
        first = false;
    }
    return os << ']';
}

bool leq(const Minor& a, const Minor& b) { return leq(a.rows, b.rows) && leq(a.cols, b.cols); }
bool less(const Minor& a, const Minor& b) { return a != b && leq(a, b); }

// --- LaplaceCombination ------------------------------------------------------

LaplaceCombination::LaplaceCombination(unsigned ground) : ground_(ground) {
    if (ground > kMaxGround) throw InvalidInput("ground bound above " + std::to_string(kMaxGround));
}

LaplaceCombination LaplaceCombination::single(const IndexSet& a, const IndexSet& b, unsigned ground) {
    LaplaceCombination c(ground);
    c.add(a, b, 1);
    return c;
}

Integer LaplaceCombination::coefficient(const IndexSet& a, const IndexSet& b) const {
    auto it = terms_.find({a, b});
    return it == terms_.end() ? Integer(0) : it->second;
}

void LaplaceCombination::add(const IndexSet& a, const IndexSet& b, const Integer& c) {
    if (a.max() > ground_ || b.max() > ground_) {
        throw InvalidInput("Laplace product {" + a.to_string() + "|" + b.to_string() + "} outside ground " +
                           std::to_string(ground_));
    }
    if (c == 0 || a.size() != b.size()) return;
    auto [it, inserted] = terms_.try_emplace({a, b}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void LaplaceCombination::add_scaled(const LaplaceCombination& other, const Integer& scale) {
    if (other.ground_ != ground_) throw InvalidInput("combining Laplace products of different grounds");
    if (scale == 0) return;
    for (const auto& [key, c] : other.terms_) add(key.first, key.second, scale * c);
}

LaplaceCombination& LaplaceCombination::operator+=(const LaplaceCombination& other) {
    add_scaled(other, 1);
    return *this;
}

LaplaceCombination& LaplaceCombination::operator-=(const LaplaceCombination& other) {
    add_scaled(other, -1);
    return *this;
}

LaplaceCombination operator*(const Integer& s, const LaplaceCombination& c) {
    LaplaceCombination out(c.ground());
    out.add_scaled(c, s);
    return out;
}

LaplaceCombination LaplaceCombination::transposed() const {
    LaplaceCombination out(ground_);
    for (const auto& [key, c] : terms_) out.add(key.second, key.first, c);
    return out;
}

namespace {

std::string spaced(const IndexSet& s) {
    std::string out;
    for (unsigned e : s) {
        if (!out.empty()) out += ' ';
        out += std::to_string(e);
    }
    return out;
}

}  // namespace

std::string LaplaceCombination::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Integer magnitude = abs(c);
        if (magnitude != 1) os << magnitude;
        os << '{' << spaced(key.first) << '|' << spaced(key.second) << '}';
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaplaceCombination& c) { return os << c.to_string(); }

// --- Permutation -------------------------------------------------------------

Permutation::Permutation(std::vector<unsigned> images) : images_(std::move(images)) {
    if (images_.size() > kMaxGround) throw InvalidInput("permutation larger than kMaxGround");
    std::vector<bool> seen(images_.size() + 1, false);
    for (unsigned v : images_) {
        if (v < 1 || v > images_.size() || seen[v]) throw InvalidInput("not a permutation of {1..n}");
        seen[v] = true;
    }
}

Permutation Permutation::identity(unsigned n) {
    std::vector<unsigned> images(n);
    std::iota(images.begin(), images.end(), 1U);
    return Permutation(std::move(images));
}

Sign Permutation::sign() const {
    std::uint64_t inversions = 0;
    for (std::size_t i = 0; i < images_.size(); ++i) {
        for (std::size_t j = i + 1; j < images_.size(); ++j) {
            if (images_[i] > images_[j]) ++inversions;
        }
    }
    return Sign::parity(inversions);
}

IndexSet Permutation::image(const IndexSet& s) const {
    std::uint64_t mask = 0;
    for (unsigned e : s) {
        if (e > images_.size()) throw InvalidInput("set element outside permutation domain");
        mask |= std::uint64_t{1} << (images_[e - 1] - 1);
    }
    return IndexSet::from_mask(mask);
}

// --- Expansion ---------------------------------------------------------------

Polynomial expand_minor(const Minor& minor, unsigned m, unsigned n) {
    if (minor.rows.max() > m || minor.cols.max() > n) {
        throw InvalidInput("minor " + minor.to_string() + " outside a " + std::to_string(m) + "x" +
                           std::to_string(n) + " matrix");
    }
    if (minor.is_zero()) return {};
    const auto rows = minor.rows.elements();
    const auto cols = minor.cols.elements();
    const std::size_t p = rows.size();

    std::vector<std::size_t> perm(p);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    Polynomial out;
    std::vector<Variable> vars(p);
    do {
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < p; ++i) {
            vars[i] = Variable::x(rows[i], cols[perm[i]]);
            for (std::size_t j = i + 1; j < p; ++j) {
                if (perm[i] > perm[j]) ++inversions;
            }
        }
        out.add_term(Monomial::product_of(vars), (inversions % 2 == 0) ? 1 : -1);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

Polynomial expand_laplace(const LaplaceProduct& lp) {
    const unsigned n = lp.ground;
    if (lp.rows.max() > n || lp.cols.max() > n) throw InvalidInput("Laplace product outside its ground");
    if (lp.rows.size() != lp.cols.size()) return {};
    Polynomial out = expand_minor({lp.rows, lp.cols}, n, n) *
                     expand_minor({complement(lp.rows, n), complement(lp.cols, n)}, n, n);
    if (laplace_sign(lp.rows, lp.cols).is_negative()) out = -out;
    return out;
}

Polynomial expand(const LaplaceCombination& c) {
    Polynomial out;
    for (const auto& [key, coeff] : c.terms()) {
        out += expand_laplace({key.first, key.second, c.ground()}) * coeff;
    }
    return out;
}

int eval_on_permutation(const LaplaceProduct& lp, const Permutation& sigma) {
    if (sigma.size() != lp.ground) throw InvalidInput("permutation size differs from the ground");
    if (lp.rows.size() != lp.cols.size()) return 0;
    return sigma.image(lp.rows) == lp.cols ? sigma.sign().value() : 0;
}

// --- Permutation criterion ----------------------------------------------------

namespace {

// Every permutation of {1..n} together with the image of every subset mask.
struct PermutationTable {
    unsigned n = 0;
    std::vector<std::uint8_t> images;  // (2^n entries per permutation)
    std::size_t count = 0;

    [[nodiscard]] const std::uint8_t* row(std::size_t k) const { return images.data() + (k << n); }
};

constexpr unsigned kTabulatedLimit = 8;

std::unique_ptr<PermutationTable> build_table(unsigned n) {
    auto table = std::make_unique<PermutationTable>();
    table->n = n;
    std::vector<unsigned> perm(n);
    std::iota(perm.begin(), perm.end(), 0U);
    const std::size_t width = std::size_t{1} << n;
    do {
        const std::size_t base = table->images.size();
        table->images.resize(base + width);
        auto* img = table->images.data() + base;
        img[0] = 0;
        for (std::size_t mask = 1; mask < width; ++mask) {
            const unsigned low = static_cast<unsigned>(std::countr_zero(mask));
            img[mask] = static_cast<std::uint8_t>(img[mask & (mask - 1)] | (1U << perm[low]));
        }
        ++table->count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return table;
}

const PermutationTable& permutation_table(unsigned n) {
    static std::mutex guard;
    static std::unique_ptr<PermutationTable> tables[kTabulatedLimit + 1];
    std::lock_guard lock(guard);
    if (!tables[n]) tables[n] = build_table(n);
    return *tables[n];
}

struct SmallTerm {
    std::uint64_t rows;
    std::uint64_t cols;
    std::int64_t coeff;
};

bool fits_small(const LaplaceCombination& rel, std::vector<SmallTerm>& out) {
    // Keep every partial sum inside int64.
    Integer budget = 0;
    for (const auto& [key, c] : rel.terms()) {
        budget += abs(c);
        if (!c.fits_slong_p() || budget > Integer(std::numeric_limits<std::int64_t>::max() / 2)) return false;
        out.push_back({key.first.mask(), key.second.mask(), c.get_si()});
    }
    return true;
}

bool check_relation_generic(const LaplaceCombination& rel) {
    const unsigned n = rel.ground();
    std::vector<unsigned> images(n);
    std::iota(images.begin(), images.end(), 1U);
    do {
        const Permutation sigma(images);
        Integer total = 0;
        for (const auto& [key, c] : rel.terms()) {
            if (sigma.image(key.first) == key.second) total += c;
        }
        if (total != 0) return false;
    } while (std::next_permutation(images.begin(), images.end()));
    return true;
}

}  // namespace

bool check_relation(const LaplaceCombination& rel, unsigned bound) {
    const unsigned n = rel.ground();
    if (n > bound) {
        throw BoundExceeded("permutation criterion refused: n = " + std::to_string(n) + " exceeds the bound " +
                            std::to_string(bound));
    }
    if (rel.empty()) return true;
    std::vector<SmallTerm> small;
    if (n > kTabulatedLimit || !fits_small(rel, small)) return check_relation_generic(rel);

    const auto& table = permutation_table(n);
    for (std::size_t k = 0; k < table.count; ++k) {
        const auto* img = table.row(k);
        std::int64_t total = 0;
        for (const auto& t : small) {
            if (img[t.rows] == t.cols) total += t.coeff;
        }
        if (total != 0) return false;
    }
    return true;
}

// --- Relation families ---------------------------------------------------------

namespace {

void require_ground(const IndexSet& s, unsigned n, const char* what) {
    if (n > kMaxGround) throw InvalidInput("ground bound above " + std::to_string(kMaxGround));
    if (s.max() > n) throw InvalidInput(std::string(what) + " " + s.to_string() + " not inside {1.." + std::to_string(n) + "}");
}

/// Calls f on every U with A ⊆ U ⊆ {1..n}.
template <typename F>
void for_each_superset(const IndexSet& a, unsigned n, F&& f) {
    for_each_subset(complement(a, n), [&](const IndexSet& extra) { f(a.united(extra)); });
}

}  // namespace

LaplaceCombination relation_theorem1(const IndexSet& a, const IndexSet& b, unsigned n) {
    require_ground(a, n, "A");
    require_ground(b, n, "B");
    LaplaceCombination rel(n);
    for_each_subset(b, [&](const IndexSet& v) { rel.add(a, v, 1); });
    for_each_superset(a, n, [&](const IndexSet& u) { rel.add(u, b, -1); });
    return rel;
}

LaplaceCombination relation_cor1(const IndexSet& a, const IndexSet& b, const IndexSet& c, unsigned n) {
    require_ground(a, n, "A");
    require_ground(b, n, "B");
    if (!c.is_subset_of(b)) throw InvalidInput("relation_cor1 needs C ⊆ B, got C = " + c.to_string() + ", B = " + b.to_string());
    LaplaceCombination rel(n);
    for_each_subset(b.without(c), [&](const IndexSet& extra) { rel.add(a, c.united(extra), 1); });
    for_each_superset(a, n, [&](const IndexSet& u) {
        for_each_subset(c, [&](const IndexSet& w) {
            if (u.size() + w.size() != b.size()) return;
            rel.add(u, b.without(w), Sign::parity(w.size()).is_negative() ? 1 : -1);
        });
    });
    return rel;
}

LaplaceCombination relation_cor2(const IndexSet& a, const IndexSet& b, unsigned n) {
    require_ground(a, n, "A");
    require_ground(b, n, "B");
    LaplaceCombination rel(n);
    for_each_superset(a, n, [&](const IndexSet& u) {
        for_each_superset(b, n, [&](const IndexSet& w) {
            if (u.size() != w.size()) return;
            rel.add(u, w, Sign::parity(n - w.size()).is_negative() ? -1 : 1);
        });
    });
    for_each_subset(b, [&](const IndexSet& v) { rel.add(a, complement(v, n), -1); });
    return rel;
}

LaplaceCombination laplace_expansion(const IndexSet& fixed, unsigned n, ExpansionSide side) {
    require_ground(fixed, n, "fixed set");
    LaplaceCombination rel(n);
    rel.add(IndexSet(), IndexSet(), 1);
    for (const auto& s : subsets_of_size(n, fixed.size())) {
        if (side == ExpansionSide::Column) {
            rel.add(s, fixed, -1);
        } else {
            rel.add(fixed, s, -1);
        }
    }
    return rel;
}

}  // namespace straightlaw
