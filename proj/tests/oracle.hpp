#pragma once

// Reference implementations that share no code with the library: elements as
// maps from sorted index vectors to numbers a + b*sqrt(d), multiplication by
// direct expansion, and a plain Gaussian rank.

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <map>
#include <vector>

#include <gmpxx.h>

#include "pimenov/element.hpp"

namespace oracle {

struct Number {
    mpq_class a;
    mpq_class b;  // coefficient of sqrt(d)
};

struct Poly {
    long d = 0;  // 0: rational
    std::map<std::vector<int>, Number> terms;
};

inline Number times(const Number& x, const Number& y, long d) {
    return {x.a * y.a + mpq_class(d) * x.b * y.b, x.a * y.b + x.b * y.a};
}

inline bool is_zero(const Number& x) { return x.a == 0 && x.b == 0; }

inline Poly from_element(const pimenov::Element& e) {
    Poly out;
    out.d = e.radicand().value_or(0);
    for (const auto& [m, c] : e.terms()) out.terms[m.indices()] = {c.rational_part(), c.radical_part()};
    return out;
}

inline Poly multiply(const Poly& x, const Poly& y) {
    Poly out;
    out.d = x.d != 0 ? x.d : y.d;
    for (const auto& [mx, cx] : x.terms) {
        for (const auto& [my, cy] : y.terms) {
            std::vector<int> common;
            std::set_intersection(mx.begin(), mx.end(), my.begin(), my.end(), std::back_inserter(common));
            if (!common.empty()) continue;
            std::vector<int> merged;
            std::set_union(mx.begin(), mx.end(), my.begin(), my.end(), std::back_inserter(merged));
            Number prod = times(cx, cy, out.d);
            Number& slot = out.terms[merged];
            slot.a += prod.a;
            slot.b += prod.b;
        }
    }
    for (auto it = out.terms.begin(); it != out.terms.end();) {
        it = is_zero(it->second) ? out.terms.erase(it) : std::next(it);
    }
    return out;
}

inline bool equal(const Poly& x, const Poly& y) {
    if (x.terms.size() != y.terms.size()) return false;
    for (const auto& [m, c] : x.terms) {
        auto it = y.terms.find(m);
        if (it == y.terms.end() || it->second.a != c.a || it->second.b != c.b) return false;
    }
    return true;
}

inline pimenov::Element naive_mul(const pimenov::Element& x, const pimenov::Element& y) {
    Poly prod = multiply(from_element(x), from_element(y));
    pimenov::Element::Terms terms;
    for (const auto& [m, c] : prod.terms) {
        pimenov::Monomial mono;
        for (int k : m) mono = mono.united(pimenov::Monomial::generator(k));
        terms.emplace(mono, c.b == 0 ? pimenov::Scalar(c.a) : pimenov::Scalar(c.a, c.b, prod.d));
    }
    return pimenov::Element(x.n(), std::move(terms));
}

/// Rank of a rational matrix by textbook elimination.
inline std::size_t rank(std::vector<std::vector<mpq_class>> a) {
    std::size_t r = 0;
    const std::size_t cols = a.empty() ? 0 : a[0].size();
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t pivot = r;
        while (pivot < a.size() && a[pivot][c] == 0) ++pivot;
        if (pivot == a.size()) continue;
        std::swap(a[pivot], a[r]);
        for (std::size_t i = r + 1; i < a.size(); ++i) {
            if (a[i][c] == 0) continue;
            mpq_class f = a[i][c] / a[r][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return r;
}

/// Matrix of x -> a*x on all 2^n monomials, built from naive products.
inline std::vector<std::vector<mpq_class>> operator_matrix(const pimenov::Element& a) {
    const int n = a.n();
    const std::uint32_t size = 1U << n;
    std::vector<std::vector<mpq_class>> m(size, std::vector<mpq_class>(size));
    Poly pa = from_element(a);
    for (std::uint32_t col = 0; col < size; ++col) {
        Poly unit;
        std::vector<int> idx;
        for (int k = 0; k < n; ++k) {
            if (col & (1U << k)) idx.push_back(k + 1);
        }
        unit.terms[idx] = {1, 0};
        for (const auto& [mono, c] : multiply(pa, unit).terms) {
            std::uint32_t row = 0;
            for (int k : mono) row |= 1U << (k - 1);
            m[row][col] = c.a;
        }
    }
    return m;
}

}  // namespace oracle
