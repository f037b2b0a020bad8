#include "pimenov/scalar.hpp"

#include <limits>
#include <sstream>

#include "pimenov/errors.hpp"

namespace pimenov {

namespace {

// Primes up to this bound are removed by trial division.
constexpr unsigned long kTrialBound = 1UL << 21;

bool is_perfect_square(const Integer& n) { return mpz_perfect_square_p(n.get_mpz_t()) != 0; }

std::int64_t to_int64(const Integer& n) {
    if (!n.fits_slong_p()) {
        throw ResourceError("radicand does not fit in a 64-bit integer");
    }
    return n.get_si();
}

}  // namespace

SquareFreeSplit square_free_split(const Integer& n) {
    if (sgn(n) <= 0) {
        throw ContractError("square_free_split requires a positive integer");
    }
    Integer rest = n;
    Integer root = 1;
    Integer square_free = 1;
    auto strip = [&](unsigned long p) {
        unsigned exponent = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
            ++exponent;
        }
        for (unsigned e = 0; e + 1 < exponent; e += 2) root *= p;
        if (exponent % 2 == 1) square_free *= p;
    };
    strip(2);
    unsigned long p = 3;
    for (; p <= kTrialBound && Integer(p) * p * p <= rest; p += 2) strip(p);

    // Every prime factor of rest now exceeds cbrt(rest), so rest is 1, a prime,
    // a product of two distinct primes, or a prime square.
    if (rest != 1) {
        if (Integer(p) * p * p <= rest) {
            throw ResourceError("cannot certify square-free part of " + n.get_str());
        }
        if (is_perfect_square(rest)) {
            root *= sqrt(rest);
        } else {
            square_free *= rest;
        }
    }
    return {root, square_free};
}

Scalar::Scalar(Rational p, Rational q, std::int64_t d) : p_(std::move(p)), q_(std::move(q)), radicand_(d) {
    p_.canonicalize();
    q_.canonicalize();
    if (sgn(q_) != 0) {
        if (d <= 1) {
            throw RangeError("radicand must be greater than 1");
        }
        auto split = square_free_split(Integer(static_cast<long>(d)));
        if (split.root != 1) {
            throw RangeError("radicand " + std::to_string(d) + " is not square-free");
        }
    }
    normalize();
}

Scalar Scalar::sqrt(const Rational& value) {
    if (sgn(value) < 0) {
        throw ContractError("square root of a negative rational");
    }
    if (sgn(value) == 0) return {};
    // sqrt(a/b) = sqrt(a*b)/b
    const Integer& den = value.get_den();
    auto split = square_free_split(value.get_num() * den);
    Rational coefficient(split.root, den);
    coefficient.canonicalize();
    if (split.square_free == 1) return Scalar(coefficient);
    return Scalar(Rational(0), coefficient, to_int64(split.square_free));
}

void Scalar::normalize() {
    if (sgn(q_) == 0) radicand_ = 0;
}

const Rational& Scalar::as_rational() const {
    if (!is_rational()) {
        throw ContractError("expected a rational scalar, got " + to_string());
    }
    return p_;
}

std::int64_t Scalar::common_radicand(const Scalar& rhs) const {
    if (radicand_ != 0 && rhs.radicand_ != 0 && radicand_ != rhs.radicand_) {
        throw FieldMismatchError("cannot combine sqrt(" + std::to_string(radicand_) + ") and sqrt(" +
                                 std::to_string(rhs.radicand_) + ") scalars");
    }
    return radicand_ != 0 ? radicand_ : rhs.radicand_;
}

int Scalar::sign() const {
    int sp = sgn(p_);
    int sq = sgn(q_);
    if (sq == 0) return sp;
    if (sp == 0 || sp == sq) return sq;
    // p and q*sqrt(d) have opposite signs: compare p^2 with d*q^2.
    Rational lhs = p_ * p_;
    Rational rhs = q_ * q_ * radicand_;
    int c = cmp(lhs, rhs);
    return c == 0 ? 0 : (c > 0 ? sp : sq);
}

Scalar Scalar::conjugate() const {
    Scalar out = *this;
    out.q_ = -out.q_;
    return out;
}

Rational Scalar::norm() const { return p_ * p_ - q_ * q_ * radicand_; }

Scalar Scalar::inverse() const {
    if (is_zero()) {
        throw ContractError("division by zero scalar");
    }
    Rational n = norm();
    Scalar out = conjugate();
    out.p_ /= n;
    out.q_ /= n;
    return out;
}

Scalar Scalar::operator-() const {
    Scalar out = *this;
    out.p_ = -out.p_;
    out.q_ = -out.q_;
    return out;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
    radicand_ = common_radicand(rhs);
    p_ += rhs.p_;
    q_ += rhs.q_;
    normalize();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
    radicand_ = common_radicand(rhs);
    p_ -= rhs.p_;
    q_ -= rhs.q_;
    normalize();
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
    std::int64_t d = common_radicand(rhs);
    if (rhs.is_rational()) {
        p_ *= rhs.p_;
        q_ *= rhs.p_;
    } else {
        Rational p = p_ * rhs.p_ + q_ * rhs.q_ * d;
        Rational q = p_ * rhs.q_ + q_ * rhs.p_;
        p_ = std::move(p);
        q_ = std::move(q);
    }
    radicand_ = d;
    normalize();
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
    if (rhs.is_rational()) {
        if (sgn(rhs.p_) == 0) {
            throw ContractError("division by zero scalar");
        }
        p_ /= rhs.p_;
        q_ /= rhs.p_;
        normalize();
        return *this;
    }
    return *this *= rhs.inverse();
}

std::string Scalar::to_string() const {
    if (is_rational()) return p_.get_str();
    std::string out = "(";
    if (sgn(p_) != 0) out += p_.get_str();
    Rational magnitude = abs(q_);
    if (sgn(q_) < 0) {
        out += "-";
    } else if (sgn(p_) != 0) {
        out += "+";
    }
    if (magnitude != 1) out += magnitude.get_str() + "*";
    out += "sqrt(" + std::to_string(radicand_) + "))";
    return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

std::strong_ordering structural_compare(const Scalar& a, const Scalar& b) {
    if (auto c = a.radicand().value_or(0) <=> b.radicand().value_or(0); c != 0) return c;
    if (int c = cmp(a.rational_part(), b.rational_part()); c != 0) return c <=> 0;
    return cmp(a.radical_part(), b.radical_part()) <=> 0;
}

}  // namespace pimenov
