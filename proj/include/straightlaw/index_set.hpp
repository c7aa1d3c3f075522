#pragma once

/// @file index_set.hpp
/// @brief Finite sets of row/column indices, the dominance order on them,
/// good/bad classification and the sign helpers used by Laplace products.
///
/// Indices are 1-based and bounded by kMaxGround. A set is stored as a
/// 64-bit mask (bit e-1 set iff e is an element); every operation below is
/// defined on the strictly increasing element sequence and the mask is only
/// a representation.

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <iterator>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace straightlaw {

inline constexpr unsigned kMaxGround = 64;

/// Thrown for malformed arguments: out-of-range indices, non-increasing
/// element lists, C not contained in B, and similar.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown when a caller asks for a computation above a configured
/// desk-scale bound (factorial sweeps, exhaustive enumerations).
class BoundExceeded : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class Sign {
public:
    constexpr Sign() = default;

    static constexpr Sign plus() { return Sign(false); }
    static constexpr Sign minus() { return Sign(true); }
    /// (-1)^k
    static constexpr Sign parity(std::uint64_t k) { return Sign((k & 1U) != 0); }

    [[nodiscard]] constexpr int value() const { return negative_ ? -1 : 1; }
    [[nodiscard]] constexpr bool is_negative() const { return negative_; }

    constexpr Sign operator*(Sign other) const { return Sign(negative_ != other.negative_); }
    constexpr Sign& operator*=(Sign other) { return *this = *this * other; }
    constexpr Sign operator-() const { return Sign(!negative_); }
    constexpr bool operator==(const Sign&) const = default;

private:
    constexpr explicit Sign(bool negative) : negative_(negative) {}
    bool negative_ = false;
};

class IndexSet {
public:
    class const_iterator {
    public:
        using value_type = unsigned;
        using difference_type = std::ptrdiff_t;
        using iterator_category = std::forward_iterator_tag;

        constexpr const_iterator() = default;
        constexpr explicit const_iterator(std::uint64_t rest) : rest_(rest) {}

        constexpr unsigned operator*() const { return static_cast<unsigned>(std::countr_zero(rest_)) + 1; }
        constexpr const_iterator& operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        constexpr const_iterator operator++(int) {
            auto copy = *this;
            ++*this;
            return copy;
        }
        constexpr bool operator==(const const_iterator&) const = default;

    private:
        std::uint64_t rest_ = 0;
    };

    constexpr IndexSet() = default;

    /// Elements must be strictly increasing and lie in [1, kMaxGround].
    IndexSet(std::initializer_list<unsigned> elements);
    explicit IndexSet(std::span<const unsigned> elements);

    static constexpr IndexSet from_mask(std::uint64_t mask) {
        IndexSet s;
        s.mask_ = mask;
        return s;
    }
    /// {1, ..., n}
    static IndexSet range(unsigned n);

    [[nodiscard]] constexpr std::uint64_t mask() const { return mask_; }
    [[nodiscard]] constexpr unsigned size() const { return static_cast<unsigned>(std::popcount(mask_)); }
    [[nodiscard]] constexpr bool empty() const { return mask_ == 0; }
    [[nodiscard]] constexpr bool contains(unsigned e) const {
        return e >= 1 && e <= kMaxGround && ((mask_ >> (e - 1)) & 1U) != 0;
    }
    /// Largest element, 0 for the empty set.
    [[nodiscard]] constexpr unsigned max() const {
        return mask_ == 0 ? 0U : static_cast<unsigned>(64 - std::countl_zero(mask_));
    }
    /// Sum of the elements.
    [[nodiscard]] unsigned sum() const;
    /// The elements in increasing order.
    [[nodiscard]] std::vector<unsigned> elements() const;
    /// The element at 0-based position pos in increasing order.
    [[nodiscard]] unsigned at(unsigned pos) const;

    [[nodiscard]] constexpr const_iterator begin() const { return const_iterator(mask_); }
    [[nodiscard]] constexpr const_iterator end() const { return const_iterator(0); }

    [[nodiscard]] constexpr bool is_subset_of(const IndexSet& other) const { return (mask_ & ~other.mask_) == 0; }
    [[nodiscard]] constexpr IndexSet united(const IndexSet& other) const { return from_mask(mask_ | other.mask_); }
    [[nodiscard]] constexpr IndexSet intersected(const IndexSet& other) const { return from_mask(mask_ & other.mask_); }
    [[nodiscard]] constexpr IndexSet without(const IndexSet& other) const { return from_mask(mask_ & ~other.mask_); }

    constexpr bool operator==(const IndexSet&) const = default;

    /// Storage order: lexicographic on the increasing element sequence (a
    /// proper prefix sorts first). This is the order used for map keys and
    /// serialization; it is unrelated to the dominance order leq().
    friend std::strong_ordering operator<=>(const IndexSet& a, const IndexSet& b);

    [[nodiscard]] std::string to_string() const;

private:
    std::uint64_t mask_ = 0;
};

std::ostream& operator<<(std::ostream& os, const IndexSet& s);

using Multiset = std::map<unsigned, unsigned>;

/// {1..n} - s. Throws InvalidInput if s has an element above n.
IndexSet complement(const IndexSet& s, unsigned n);

/// Dominance order: |s| >= |t| and s_v <= t_v for every v <= |t|.
bool leq(const IndexSet& s, const IndexSet& t);
/// leq and not equal.
bool less(const IndexSet& s, const IndexSet& t);

/// Prefix-count formulation: |s ∩ {1..r}| >= |t ∩ {1..r}| for 1 <= r <= n.
/// Agrees with leq() whenever both sets lie in {1..n}.
bool leq_prefix(const IndexSet& s, const IndexSet& t, unsigned n);

/// s is good iff s <= complement(s, n).
bool is_good(const IndexSet& s, unsigned n);

/// Sign of the rearrangement 1..n -> a_1..a_p c_1..c_q where c is the
/// complement of a; equals (-1)^{sum(a_i - i)}.
Sign perm_sign_front(const IndexSet& a, unsigned n);

/// (-1)^{sum a + sum b}
Sign laplace_sign(const IndexSet& a, const IndexSet& b);

Multiset multiset_content(std::span<const IndexSet> sets);

/// Calls f on every subset of s, the empty set and s itself included.
template <typename F>
void for_each_subset(const IndexSet& s, F&& f) {
    const std::uint64_t full = s.mask();
    std::uint64_t sub = 0;
    while (true) {
        f(IndexSet::from_mask(sub));
        if (sub == full) break;
        sub = (sub - full) & full;
    }
}

/// All subsets of {1..n} of the given size, in increasing mask order.
std::vector<IndexSet> subsets_of_size(unsigned n, unsigned size);

}  // namespace straightlaw
