#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include <gmpxx.h>

namespace pimenov {

using Integer = mpz_class;
using Rational = mpq_class;

/// n = root^2 * square_free, with square_free >= 1 and square-free.
struct SquareFreeSplit {
    Integer root;
    Integer square_free;
};

/// Splits a positive integer into its square part and square-free part.
/// Trial division is bounded; throws ResourceError when the cofactor left over
/// cannot be certified square-free within that bound.
SquareFreeSplit square_free_split(const Integer& n);

/// Element of Q or of a quadratic extension Q(sqrt(d)), stored as p + q*sqrt(d).
///
/// The representation is canonical: whenever q == 0 the scalar is rational and
/// carries no radicand, so equality is plain member-wise equality. Operations
/// between two irrational scalars with different radicands throw
/// FieldMismatchError; a rational operand combines with any extension.
class Scalar {
  public:
    Scalar() = default;
    Scalar(long value) : p_(value) {}  // NOLINT(google-explicit-constructor)
    Scalar(Rational value) : p_(std::move(value)) { p_.canonicalize(); }  // NOLINT
    /// p + q*sqrt(d); d must be a square-free integer > 1 unless q == 0.
    Scalar(Rational p, Rational q, std::int64_t d);

    /// Exact square root of a nonnegative rational, in Q or Q(sqrt(d)).
    static Scalar sqrt(const Rational& value);

    bool is_zero() const { return sgn(p_) == 0 && sgn(q_) == 0; }
    bool is_rational() const { return radicand_ == 0; }
    const Rational& rational_part() const { return p_; }
    const Rational& radical_part() const { return q_; }
    /// nullopt for rational scalars.
    std::optional<std::int64_t> radicand() const {
        return radicand_ == 0 ? std::nullopt : std::optional<std::int64_t>(radicand_);
    }
    /// Throws ContractError unless the scalar is rational.
    const Rational& as_rational() const;

    /// Sign as a real number (-1, 0, 1).
    int sign() const;
    Scalar conjugate() const;
    /// p^2 - d*q^2, the field norm down to Q.
    Rational norm() const;
    Scalar inverse() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    Scalar& operator/=(const Scalar& rhs);

    friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
    friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
    friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
    friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }
    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.radicand_ == b.radicand_ && a.p_ == b.p_ && a.q_ == b.q_;
    }

    /// Text form used by the printer: "a/b" for rationals, "(p+q*sqrt(d))"
    /// style for extension elements (parenthesised).
    std::string to_string() const;

  private:
    void normalize();
    std::int64_t common_radicand(const Scalar& rhs) const;

    Rational p_;
    Rational q_;
    std::int64_t radicand_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Total order on scalars used only to make output deterministic; it is not the
/// real ordering for extension elements.
std::strong_ordering structural_compare(const Scalar& a, const Scalar& b);

}  // namespace pimenov
