#include "pimenov/element.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "pimenov/errors.hpp"

namespace pimenov {

std::ostream& operator<<(std::ostream& os, Degree d) {
    if (d.is_infinite()) return os << "inf";
    return os << d.value();
}

namespace {

void check_generator_count(int n) {
    if (n < 1 || n > kMaxGenerators) {
        throw RangeError("generator count " + std::to_string(n) + " outside 1.." + std::to_string(kMaxGenerators));
    }
}

}  // namespace

void require_same_dimension(const Element& a, const Element& b) {
    if (a.n() != b.n()) {
        throw DimensionError("elements of P_" + std::to_string(a.n()) + " and P_" + std::to_string(b.n()) +
                             " cannot be combined");
    }
}

Element::Element(int n) : n_(n) { check_generator_count(n); }

Element::Element(int n, Terms terms) : n_(n), terms_(std::move(terms)) {
    check_generator_count(n);
    std::int64_t radicand = 0;
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->first.max_index() > n) {
            throw RangeError("monomial " + to_string(it->first) + " is outside P_" + std::to_string(n));
        }
        if (it->second.is_zero()) {
            it = terms_.erase(it);
            continue;
        }
        if (auto d = it->second.radicand()) {
            if (radicand != 0 && radicand != *d) {
                throw FieldMismatchError("element mixes coefficients from different quadratic extensions");
            }
            radicand = *d;
        }
        ++it;
    }
}

Element Element::constant(int n, Scalar value) { return monomial(n, Monomial::unit(), std::move(value)); }

Element Element::generator(int n, int k, Scalar coefficient) {
    if (k < 1 || k > n) {
        throw RangeError("generator index " + std::to_string(k) + " outside 1.." + std::to_string(n));
    }
    return monomial(n, Monomial::generator(k), std::move(coefficient));
}

Element Element::monomial(int n, Monomial m, Scalar coefficient) {
    Terms terms;
    terms.emplace(m, std::move(coefficient));
    return Element(n, std::move(terms));
}

Scalar Element::coefficient(Monomial m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar() : it->second;
}

std::optional<std::int64_t> Element::radicand() const {
    for (const auto& [m, c] : terms_) {
        if (auto d = c.radicand()) return d;
    }
    return std::nullopt;
}

Element Element::operator-() const {
    Element out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

Element operator+(const Element& a, const Element& b) {
    require_same_dimension(a, b);
    Element::Terms terms = a.terms_;
    for (const auto& [m, c] : b.terms_) terms[m] += c;
    return Element(a.n_, std::move(terms));
}

Element operator-(const Element& a, const Element& b) {
    require_same_dimension(a, b);
    Element::Terms terms = a.terms_;
    for (const auto& [m, c] : b.terms_) terms[m] -= c;
    return Element(a.n_, std::move(terms));
}

Element operator*(const Element& a, const Element& b) {
    require_same_dimension(a, b);
    // Products of overlapping monomials vanish since iota_k^2 = 0.
    std::unordered_map<std::uint32_t, Scalar> acc;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            if (!ma.disjoint(mb)) continue;
            acc[ma.united(mb).bits] += ca * cb;
        }
    }
    Element::Terms terms;
    for (auto& [bits, c] : acc) terms.emplace(Monomial{bits}, std::move(c));
    return Element(a.n_, std::move(terms));
}

Element operator*(const Scalar& lambda, const Element& a) {
    Element::Terms terms;
    if (!lambda.is_zero()) {
        for (const auto& [m, c] : a.terms_) terms.emplace(m, lambda * c);
    }
    return Element(a.n_, std::move(terms));
}

Scalar real_part(const Element& p) { return p.coefficient(Monomial::unit()); }

Element imag_part(const Element& p) {
    Element::Terms terms = p.terms();
    terms.erase(Monomial::unit());
    return Element(p.n(), std::move(terms));
}

Degree degree(const Element& p) {
    // Canonical order starts with the shortest monomial.
    if (p.is_zero()) return Degree::infinity();
    return Degree(p.terms().begin()->first.length());
}

std::size_t monomial_count(const Element& p) { return p.terms().size(); }

Element homogeneous_component(const Element& p, int t) {
    if (t < 0 || t > p.n()) {
        throw RangeError("degree " + std::to_string(t) + " outside 0.." + std::to_string(p.n()));
    }
    Element::Terms terms;
    for (const auto& [m, c] : p.terms()) {
        if (m.length() == t) terms.emplace(m, c);
    }
    return Element(p.n(), std::move(terms));
}

bool is_invertible(const Element& p) { return !real_part(p).is_zero(); }

Element power(const Element& p, unsigned m) {
    Element result = Element::constant(p.n(), 1);
    for (unsigned i = 0; i < m; ++i) {
        result = result * p;
        if (result.is_zero()) break;
    }
    return result;
}

}  // namespace pimenov
