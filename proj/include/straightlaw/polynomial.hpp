#pragma once

/// @file polynomial.hpp
/// @brief Sparse multivariate polynomials with arbitrary-precision integer
/// coefficients in the variables x[i,j], y[i,v] and z[j,v].
///
/// All variables live in one global total order (VariableOrder):
///
///     x[1,1] > x[1,2] > ... > x[2,1] > ...            (row-major)
///       > y[1,1] > ... > y[m,1] > z[1,1] > ... > z[n,1]
///       > y[1,2] > ... > y[m,2] > z[1,2] > ...
///
/// The y/z block is the order under which the leading monomial of a minor
/// of X = YZ is the diagonal witness. Monomials are compared by scanning
/// exponents from the largest variable downwards.

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace straightlaw {

using Integer = mpz_class;

enum class VariableKind : std::uint8_t { X = 0, Y = 1, Z = 2 };

/// x[i,j]: first = row i, second = column j.
/// y[i,v]: first = row i, second = superscript v.
/// z[j,v]: first = column j, second = superscript v.
struct Variable {
    VariableKind kind = VariableKind::X;
    unsigned first = 1;
    unsigned second = 1;

    static Variable x(unsigned row, unsigned col) { return {VariableKind::X, row, col}; }
    static Variable y(unsigned row, unsigned sup) { return {VariableKind::Y, row, sup}; }
    static Variable z(unsigned col, unsigned sup) { return {VariableKind::Z, col, sup}; }

    bool operator==(const Variable&) const = default;
    [[nodiscard]] std::string to_string() const;
};

/// The global variable order. rank() is a dense key where a smaller rank
/// means a larger variable.
struct VariableOrder {
    static constexpr unsigned kMaxIndex = 255;

    static std::uint32_t rank(const Variable& v);
    static Variable variable(std::uint32_t rank);
    static bool greater(const Variable& a, const Variable& b) { return rank(a) < rank(b); }
};

class Monomial {
public:
    struct Entry {
        std::uint32_t rank;
        std::uint32_t exponent;
        bool operator==(const Entry&) const = default;
    };

    Monomial() = default;  // the monomial 1
    explicit Monomial(const Variable& v, std::uint32_t exponent = 1);

    /// Product of the given variables (repetition allowed).
    static Monomial product_of(const std::vector<Variable>& vars);

    [[nodiscard]] bool is_one() const { return entries_.empty(); }
    [[nodiscard]] std::uint32_t exponent(const Variable& v) const;
    [[nodiscard]] std::uint64_t degree() const;
    /// Entries sorted from the largest variable down; exponents are positive.
    [[nodiscard]] const std::vector<Entry>& entries() const { return entries_; }
    [[nodiscard]] bool divides(const Monomial& other) const;

    Monomial operator*(const Monomial& other) const;
    /// Exact quotient; throws std::invalid_argument if other does not divide.
    Monomial operator/(const Monomial& other) const;

    bool operator==(const Monomial&) const = default;
    [[nodiscard]] std::string to_string() const;

private:
    std::vector<Entry> entries_;
};

std::ostream& operator<<(std::ostream& os, const Monomial& m);

/// Total order on monomials induced by VariableOrder: a > b iff at the
/// largest variable where the exponents differ, a has the larger exponent.
std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b);

/// Map comparator placing the largest monomial first.
struct MonomialDescending {
    bool operator()(const Monomial& a, const Monomial& b) const { return compare_monomials(a, b) > 0; }
};

class Polynomial {
public:
    using TermMap = std::map<Monomial, Integer, MonomialDescending>;

    Polynomial() = default;  // zero
    Polynomial(const Integer& constant);  // NOLINT: implicit from integers is natural here
    Polynomial(long constant) : Polynomial(Integer(constant)) {}  // NOLINT
    explicit Polynomial(const Variable& v);
    Polynomial(const Monomial& m, const Integer& coefficient);

    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] std::size_t term_count() const { return terms_.size(); }
    /// Terms from the leading monomial down.
    [[nodiscard]] const TermMap& terms() const { return terms_; }
    [[nodiscard]] Integer coefficient(const Monomial& m) const;

    /// Throws std::domain_error on the zero polynomial.
    [[nodiscard]] const Monomial& leading_monomial() const;

    /// Adds c * m in place.
    void add_term(const Monomial& m, const Integer& c);

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Polynomial& other);
    Polynomial& operator*=(const Integer& scalar);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Integer& s) { return a *= s; }
    friend Polynomial operator*(const Integer& s, Polynomial a) { return a *= s; }
    Polynomial operator-() const;

    bool operator==(const Polynomial& other) const;

    /// Evaluates at integer values of the variables.
    [[nodiscard]] Integer evaluate(const std::function<Integer(const Variable&)>& value) const;

    /// Replaces every variable v by images(v) and expands.
    [[nodiscard]] Polynomial substitute(const std::function<Polynomial(const Variable&)>& images) const;

    [[nodiscard]] std::string to_string() const;

private:
    TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

/// Leading monomial of p; throws std::domain_error if p is zero.
const Monomial& leading_monomial(const Polynomial& p);

}  // namespace straightlaw
