#pragma once

#include <compare>
#include <map>
#include <optional>
#include <ostream>
#include <vector>

#include "pimenov/monomial.hpp"
#include "pimenov/scalar.hpp"

namespace pimenov {

/// Natural number or +infinity. Infinity absorbs addition.
class Degree {
  public:
    constexpr Degree() = default;  // infinity
    constexpr explicit Degree(int value) : value_(value) {}
    static constexpr Degree infinity() { return Degree(); }

    constexpr bool is_infinite() const { return !value_.has_value(); }
    /// Throws std::bad_optional_access for infinity.
    constexpr int value() const { return value_.value(); }

    friend constexpr Degree operator+(Degree a, Degree b) {
        if (a.is_infinite() || b.is_infinite()) return infinity();
        return Degree(*a.value_ + *b.value_);
    }
    friend constexpr bool operator==(Degree a, Degree b) = default;
    friend constexpr std::strong_ordering operator<=>(Degree a, Degree b) {
        if (a.is_infinite() && b.is_infinite()) return std::strong_ordering::equal;
        if (a.is_infinite()) return std::strong_ordering::greater;
        if (b.is_infinite()) return std::strong_ordering::less;
        return *a.value_ <=> *b.value_;
    }

  private:
    std::optional<int> value_;
};

std::ostream& operator<<(std::ostream& os, Degree d);

/// Element of the Pimenov algebra P_n: a finite sum of monomials with nonzero
/// scalar coefficients, kept in canonical monomial order.
///
/// Elements are immutable values. All nonzero coefficients that are irrational
/// share one radicand; constructing an element that mixes radicands throws
/// FieldMismatchError.
class Element {
  public:
    using Terms = std::map<Monomial, Scalar, CanonicalOrder>;

    /// The zero element of P_n.
    explicit Element(int n);
    /// Drops zero coefficients; throws RangeError if a monomial uses a generator
    /// beyond n.
    Element(int n, Terms terms);

    static Element constant(int n, Scalar value);
    static Element generator(int n, int k, Scalar coefficient = 1);
    static Element monomial(int n, Monomial m, Scalar coefficient = 1);

    int n() const { return n_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Zero when the monomial is absent.
    Scalar coefficient(Monomial m) const;
    /// Radicand shared by irrational coefficients, nullopt if all are rational.
    std::optional<std::int64_t> radicand() const;

    Element operator-() const;
    friend Element operator+(const Element& a, const Element& b);
    friend Element operator-(const Element& a, const Element& b);
    friend Element operator*(const Element& a, const Element& b);
    friend Element operator*(const Scalar& lambda, const Element& a);
    friend bool operator==(const Element& a, const Element& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

  private:
    int n_;
    Terms terms_;
};

/// Coefficient of the unit monomial.
Scalar real_part(const Element& p);
/// p with the unit-monomial term removed.
Element imag_part(const Element& p);
/// Minimum monomial length; 0 when the real part is nonzero, infinity for 0.
Degree degree(const Element& p);
std::size_t monomial_count(const Element& p);
/// Sum of the terms whose monomial has length exactly t. Throws RangeError if t > n.
Element homogeneous_component(const Element& p, int t);
bool is_invertible(const Element& p);
Element power(const Element& p, unsigned m);

/// Generator-count check shared by binary operations.
void require_same_dimension(const Element& a, const Element& b);

}  // namespace pimenov
