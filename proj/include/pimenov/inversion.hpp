#pragma once

#include <optional>
#include <vector>

#include "pimenov/element.hpp"
#include "pimenov/linear.hpp"

namespace pimenov {

/// Largest generator count for which dense 2^n x 2^n operator matrices are
/// built. Each entry is an exact scalar, so memory grows as 4^n.
inline constexpr int kMaxOperatorGenerators = 10;

/// Upper bound M on the last nonzero power of Im p:
/// M = min(floor(n / deg(Im p)), number of monomials in Im p).
/// Throws ContractError when Im p is zero.
unsigned nilpotency_bound(const Element& p);

/// p^{-1} = (1/Re p) * sum_{m=0..M} (-Im p / Re p)^m. Throws
/// NotInvertibleError when Re p = 0.
Element invert(const Element& p);

/// Coefficient of the monomial s in a^{-1}, from the explicit formulas in the
/// coefficients of a for |s| <= 3:
///   b_0       = 1/a_0
///   b_k       = -a_k / a_0^2
///   b_{kl}    = (2 a_k a_l - a_0 a_{kl}) / a_0^3
///   b_{klm}   = (2 a_0 (a_k a_{lm} + a_l a_{km} + a_m a_{kl})
///                - 6 a_k a_l a_m - a_0^2 a_{klm}) / a_0^4
/// Throws UnsupportedError for |s| > 3 and NotInvertibleError if a_0 = 0.
Scalar inverse_coeff_closed_form(const Element& a, Monomial s);

/// Matrix of x -> a*x on the coefficient vectors of P_n, rows and columns in
/// canonical monomial order. Throws ResourceError above kMaxOperatorGenerators.
Matrix mul_operator_matrix(const Element& a);

/// Coefficient vector of p in canonical monomial order, and back.
std::vector<Scalar> coefficient_vector(const Element& p);
Element from_coefficient_vector(int n, const std::vector<Scalar>& v);

enum class DivisionStatus { unique, affine_family, none };

const char* to_string(DivisionStatus status);

/// Complete solution set of a*x = b: particular + span(kernel_basis).
struct DivisionSolution {
    DivisionStatus status = DivisionStatus::none;
    std::optional<Element> particular;
    /// Basis of the annihilator {x : a*x = 0}, reduced echelon form in canonical
    /// monomial order.
    std::vector<Element> kernel_basis;
    /// Whether every solution is invertible. nullopt when there is no solution,
    /// and for a = b = 0 where both kinds occur.
    std::optional<bool> solutions_invertible;
    /// Rank of the operator matrix of a.
    std::size_t rank = 0;
};

/// Solves a*x = b by exact elimination on the operator matrix of a.
DivisionSolution solve_division(const Element& a, const Element& b);

}  // namespace pimenov
