#include "pimenov/inversion.hpp"

#include <algorithm>
#include <string>

#include "pimenov/errors.hpp"

namespace pimenov {

namespace {

struct CanonicalIndex {
    std::vector<Monomial> order;
    std::vector<std::size_t> position;  // indexed by monomial bits

    explicit CanonicalIndex(int n) : order(canonical_monomials(n)), position(order.size()) {
        for (std::size_t i = 0; i < order.size(); ++i) position[order[i].bits] = i;
    }
};

void check_operator_size(int n) {
    if (n > kMaxOperatorGenerators) {
        throw ResourceError("dense operator matrices are limited to n <= " + std::to_string(kMaxOperatorGenerators) +
                            ", got n = " + std::to_string(n));
    }
}

}  // namespace

unsigned nilpotency_bound(const Element& p) {
    Element im = imag_part(p);
    if (im.is_zero()) {
        throw ContractError("nilpotency bound needs a nonzero imaginary part");
    }
    auto by_degree = static_cast<std::size_t>(p.n() / degree(im).value());
    return static_cast<unsigned>(std::min(by_degree, monomial_count(im)));
}

Element invert(const Element& p) {
    Scalar re = real_part(p);
    if (re.is_zero()) throw NotInvertibleError();
    Element im = imag_part(p);
    Element result = Element::constant(p.n(), 1);
    if (!im.is_zero()) {
        unsigned bound = nilpotency_bound(p);
        Element ratio = (-re.inverse()) * im;
        Element term = result;
        for (unsigned m = 1; m <= bound; ++m) {
            term = term * ratio;
            if (term.is_zero()) break;
            result = result + term;
        }
    }
    return re.inverse() * result;
}

Scalar inverse_coeff_closed_form(const Element& a, Monomial s) {
    const Scalar a0 = real_part(a);
    if (a0.is_zero()) throw NotInvertibleError();
    auto c = [&](std::initializer_list<int> indices) { return a.coefficient(Monomial::of(indices)); };
    std::vector<int> k = s.indices();
    switch (k.size()) {
        case 0:
            return a0.inverse();
        case 1:
            return -c({k[0]}) / (a0 * a0);
        case 2:
            return (Scalar(2) * c({k[0]}) * c({k[1]}) - a0 * c({k[0], k[1]})) / (a0 * a0 * a0);
        case 3: {
            Scalar mixed = c({k[0]}) * c({k[1], k[2]}) + c({k[1]}) * c({k[0], k[2]}) + c({k[2]}) * c({k[0], k[1]});
            Scalar numerator = Scalar(2) * a0 * mixed - Scalar(6) * c({k[0]}) * c({k[1]}) * c({k[2]}) -
                               a0 * a0 * c({k[0], k[1], k[2]});
            return numerator / (a0 * a0 * a0 * a0);
        }
        default:
            throw UnsupportedError("closed-form inverse coefficients are available for at most three indices");
    }
}

std::vector<Scalar> coefficient_vector(const Element& p) {
    check_operator_size(p.n());
    CanonicalIndex index(p.n());
    std::vector<Scalar> v(index.order.size());
    for (const auto& [m, c] : p.terms()) v[index.position[m.bits]] = c;
    return v;
}

Element from_coefficient_vector(int n, const std::vector<Scalar>& v) {
    check_operator_size(n);
    std::vector<Monomial> order = canonical_monomials(n);
    if (v.size() != order.size()) {
        throw DimensionError("coefficient vector length does not match 2^n");
    }
    Element::Terms terms;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_zero()) terms.emplace(order[i], v[i]);
    }
    return Element(n, std::move(terms));
}

Matrix mul_operator_matrix(const Element& a) {
    check_operator_size(a.n());
    CanonicalIndex index(a.n());
    const std::size_t size = index.order.size();
    Matrix m(size, size);
    for (std::size_t col = 0; col < size; ++col) {
        Monomial t = index.order[col];
        for (const auto& [s, c] : a.terms()) {
            if (s.disjoint(t)) m(index.position[s.united(t).bits], col) += c;
        }
    }
    return m;
}

const char* to_string(DivisionStatus status) {
    switch (status) {
        case DivisionStatus::unique:
            return "unique";
        case DivisionStatus::affine_family:
            return "affine-family";
        case DivisionStatus::none:
            return "none";
    }
    return "?";
}

DivisionSolution solve_division(const Element& a, const Element& b) {
    require_same_dimension(a, b);
    const int n = a.n();
    DivisionSolution out;
    auto solution = solve_linear(mul_operator_matrix(a), coefficient_vector(b));
    if (!solution) {
        out.rank = row_reduce(mul_operator_matrix(a)).rank();
        return out;
    }
    out.rank = solution->rank;
    out.particular = from_coefficient_vector(n, solution->particular);
    for (const auto& v : solution->kernel) out.kernel_basis.push_back(from_coefficient_vector(n, v));
    out.status = out.kernel_basis.empty() ? DivisionStatus::unique : DivisionStatus::affine_family;
    if (!a.is_zero()) {
        // a*x = b with a != 0: x is invertible exactly when deg a = deg b.
        out.solutions_invertible = degree(a) == degree(b);
    }
    return out;
}

}  // namespace pimenov
