#include "straightlaw/index_set.hpp"

#include <ostream>
#include <sstream>

namespace straightlaw {

namespace {

std::uint64_t mask_from_increasing(std::span<const unsigned> elements) {
    std::uint64_t mask = 0;
    unsigned previous = 0;
    for (unsigned e : elements) {
        if (e < 1 || e > kMaxGround) {
            throw InvalidInput("index " + std::to_string(e) + " outside [1, " + std::to_string(kMaxGround) + "]");
        }
        if (e <= previous) {
            throw InvalidInput("index set elements must be strictly increasing");
        }
        mask |= std::uint64_t{1} << (e - 1);
        previous = e;
    }
    return mask;
}

constexpr std::uint64_t low_bits(unsigned r) {
    return r >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << r) - 1;
}

void require_within(const IndexSet& s, unsigned n, const char* what) {
    if (s.max() > n) {
        throw InvalidInput(std::string(what) + ": element " + std::to_string(s.max()) + " exceeds ground bound " +
                           std::to_string(n));
    }
}

}  // namespace

IndexSet::IndexSet(std::initializer_list<unsigned> elements)
    : mask_(mask_from_increasing(std::span<const unsigned>(elements.begin(), elements.size()))) {}

IndexSet::IndexSet(std::span<const unsigned> elements) : mask_(mask_from_increasing(elements)) {}

IndexSet IndexSet::range(unsigned n) {
    if (n > kMaxGround) throw InvalidInput("ground bound above " + std::to_string(kMaxGround));
    return from_mask(low_bits(n));
}

unsigned IndexSet::sum() const {
    unsigned total = 0;
    for (unsigned e : *this) total += e;
    return total;
}

std::vector<unsigned> IndexSet::elements() const {
    std::vector<unsigned> out;
    out.reserve(size());
    for (unsigned e : *this) out.push_back(e);
    return out;
}

unsigned IndexSet::at(unsigned pos) const {
    if (pos >= size()) throw std::out_of_range("IndexSet::at");
    auto it = begin();
    for (unsigned i = 0; i < pos; ++i) ++it;
    return *it;
}

std::strong_ordering operator<=>(const IndexSet& a, const IndexSet& b) {
    const std::uint64_t diff = a.mask_ ^ b.mask_;
    if (diff == 0) return std::strong_ordering::equal;
    // The first position where the sequences differ holds the lowest
    // differing element in one of them; the other either continues with
    // something larger or has ended.
    const std::uint64_t low = diff & (~diff + 1);
    const std::uint64_t above = ~((low << 1) - 1);
    if ((a.mask_ & low) != 0) {
        return (b.mask_ & above) != 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return (a.mask_ & above) != 0 ? std::strong_ordering::greater : std::strong_ordering::less;
}

std::string IndexSet::to_string() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const IndexSet& s) {
    os << '{';
    bool first = true;
    for (unsigned e : s) {
        if (!first) os << ',';
        os << e;
        first = false;
    }
    return os << '}';
}

IndexSet complement(const IndexSet& s, unsigned n) {
    require_within(s, n, "complement");
    return IndexSet::range(n).without(s);
}

bool leq(const IndexSet& s, const IndexSet& t) {
    if (s.size() < t.size()) return false;
    auto si = s.begin();
    for (unsigned te : t) {
        if (*si > te) return false;
        ++si;
    }
    return true;
}

bool less(const IndexSet& s, const IndexSet& t) { return s != t && leq(s, t); }

bool leq_prefix(const IndexSet& s, const IndexSet& t, unsigned n) {
    require_within(s, n, "leq_prefix");
    require_within(t, n, "leq_prefix");
    for (unsigned r = 1; r <= n; ++r) {
        const std::uint64_t window = low_bits(r);
        if (std::popcount(s.mask() & window) < std::popcount(t.mask() & window)) return false;
    }
    return true;
}

bool is_good(const IndexSet& s, unsigned n) { return leq(s, complement(s, n)); }

Sign perm_sign_front(const IndexSet& a, unsigned n) {
    require_within(a, n, "perm_sign_front");
    std::uint64_t moves = 0;
    unsigned position = 1;
    for (unsigned e : a) moves += e - position++;
    return Sign::parity(moves);
}

Sign laplace_sign(const IndexSet& a, const IndexSet& b) { return Sign::parity(a.sum() + b.sum()); }

Multiset multiset_content(std::span<const IndexSet> sets) {
    Multiset out;
    for (const auto& s : sets) {
        for (unsigned e : s) ++out[e];
    }
    return out;
}

std::vector<IndexSet> subsets_of_size(unsigned n, unsigned size) {
    if (n > kMaxGround) throw InvalidInput("ground bound above " + std::to_string(kMaxGround));
    std::vector<IndexSet> out;
    if (size > n) return out;
    if (size == 0) return {IndexSet()};
    // Gosper's hack walks the size-bit masks in increasing order.
    const std::uint64_t limit = low_bits(n);
    std::uint64_t mask = low_bits(size);
    while (true) {
        out.push_back(IndexSet::from_mask(mask));
        if (mask == (limit & ~low_bits(n - size))) break;
        const std::uint64_t low = mask & (~mask + 1);
        const std::uint64_t ripple = mask + low;
        mask = ripple | (((mask ^ ripple) >> 2) / low);
    }
    return out;
}

}  // namespace straightlaw
