#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <utility>
#include <vector>

#include "dentedhex/rational.hpp"

namespace dentedhex {

/// q^q * X^x * Y^y. The q-exponent is unrestricted; x and y are nonnegative
/// for every monomial stored in a LaurentPoly.
struct Monomial {
    std::int32_t q = 0;
    std::int32_t x = 0;
    std::int32_t y = 0;

    constexpr std::int32_t xy_degree() const { return x + y; }

    friend constexpr bool operator==(const Monomial&, const Monomial&) = default;

    /// Canonical order: lexicographic on (y, x, q), ascending.
    friend constexpr std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
        if (auto c = a.y <=> b.y; c != 0) return c;
        if (auto c = a.x <=> b.x; c != 0) return c;
        return a.q <=> b.q;
    }

    friend constexpr Monomial operator*(const Monomial& a, const Monomial& b) {
        return {a.q + b.q, a.x + b.x, a.y + b.y};
    }
    /// Exponent difference; may leave x or y negative, callers check.
    friend constexpr Monomial operator/(const Monomial& a, const Monomial& b) {
        return {a.q - b.q, a.x - b.x, a.y - b.y};
    }
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept {
        std::uint64_t h = static_cast<std::uint32_t>(m.q);
        h = h * 0x9E3779B97F4A7C15ULL ^ static_cast<std::uint32_t>(m.x);
        h = h * 0x9E3779B97F4A7C15ULL ^ static_cast<std::uint32_t>(m.y);
        return static_cast<std::size_t>(h ^ (h >> 29));
    }
};

/// Sparse polynomial in X, Y that is Laurent in q, with rational
/// coefficients. Terms are kept sorted in the canonical monomial order with
/// no zero coefficients, so structural equality is polynomial equality.
class LaurentPoly {
public:
    using Term = std::pair<Monomial, Rational>;

    LaurentPoly() = default;
    LaurentPoly(std::int64_t constant);  // NOLINT(google-explicit-constructor)
    explicit LaurentPoly(const Rational& constant);
    LaurentPoly(const Monomial& m, const Rational& coefficient);

    /// Sums duplicate monomials, drops zeros and sorts.
    static LaurentPoly from_terms(std::vector<Term> terms);

    static LaurentPoly q(std::int32_t exponent = 1) { return {Monomial{exponent, 0, 0}, 1}; }
    static LaurentPoly X(std::int32_t exponent = 1) { return {Monomial{0, exponent, 0}, 1}; }
    static LaurentPoly Y(std::int32_t exponent = 1) { return {Monomial{0, 0, exponent}, 1}; }

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;

    /// Largest / smallest term in the canonical order. Precondition: nonzero.
    const Term& leading_term() const { return terms_.back(); }
    const Term& trailing_term() const { return terms_.front(); }

    Rational coefficient(const Monomial& m) const;

    /// True when every monomial has x + y == degree.
    bool is_xy_homogeneous(std::int32_t degree) const;
    /// True when no monomial involves X or Y.
    bool is_q_only() const;

    LaurentPoly scaled(const Rational& factor) const;
    LaurentPoly shifted(const Monomial& m) const;
    LaurentPoly pow(unsigned exponent) const;

    /// Substitutes X <-> Y and q -> 1/q.
    LaurentPoly swap_xy_invert_q() const;

    Rational evaluate(const Rational& q0, const Rational& x0, const Rational& y0) const;

    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const LaurentPoly& rhs);

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly operator-() const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

private:
    std::vector<Term> terms_;
};

/// Returns h with h * divisor == dividend.
/// Throws DivisionByZero for a zero divisor and NotDivisible when the
/// leading-term elimination leaves a remainder.
LaurentPoly exact_div(const LaurentPoly& dividend, const LaurentPoly& divisor);

inline LaurentPoly exact_quotient(const LaurentPoly& a, const LaurentPoly& b) { return exact_div(a, b); }

LaurentPoly product(std::initializer_list<LaurentPoly> factors);

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

}  // namespace dentedhex
