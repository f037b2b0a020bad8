#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pimenov/element.hpp"
#include "pimenov/linear.hpp"

namespace pimenov {

// ---------------------------------------------------------------------------
// Support reduction
// ---------------------------------------------------------------------------

/// Ascending generator indices used by some monomial of p.
std::vector<int> support_generators(const Element& p);

/// p relabelled onto P_m, m = |support|, preserving generator order.
/// generators[j] is the original index of reduced generator j + 1.
struct SupportReduction {
    Element reduced;
    std::vector<int> generators;
    int original_n;

    /// Maps an element of the reduced algebra back into P_original_n.
    Element lift(const Element& e) const;
};

/// For p = 0 or a scalar the reduced algebra is P_1 (P_0 is not representable).
SupportReduction reduce_support(const Element& p);

// ---------------------------------------------------------------------------
// Degree-2 patterns in P_4
// ---------------------------------------------------------------------------

/// Shape of the graph on generators whose edges are the monomials of a
/// homogeneous degree-2 element.
enum class PatternClass {
    zero,
    single_monomial,
    two_shared_generator,
    two_disjoint,
    triangle,
    star,
    path,
    four_cycle,
    generator_in_three_monomials,
};

const char* to_string(PatternClass kind);

/// Labels and coefficients realising a pattern.
///
///  - path: edges ab, ac, bd (a, b interior, a < b); coefficients (ab, ac, bd)
///  - four_cycle: cycle a-b-d-c-a with a the smallest vertex and b < c;
///    coefficients (ab, ac, bd, cd)
///  - single_monomial: edge ab
///  - two_shared_generator: edges ab, ac (a shared, b < c)
///  - two_disjoint: edges ab, cd (a < c)
///  - triangle: vertices a < b < c; coefficients (ab, ac, bc)
///  - star: centre a, leaves b < c < d
///  - generator_in_three_monomials: a is the smallest vertex in three monomials,
///    b < c < d the others; coefficients (ab, ac, ad, bc, bd, cd), zeros kept
///
/// Labels are 1-based generator indices; unused slots are 0. For the classes
/// not listed coefficients follow the edge order given above.
struct Degree2Pattern {
    PatternClass kind = PatternClass::zero;
    std::vector<Scalar> coefficients;
    std::array<int, 4> labels{};
};

/// Classifies a homogeneous degree-2 element of P_n, n <= 4. Throws
/// ContractError for other input.
Degree2Pattern classify_degree2(const Element& q);

// ---------------------------------------------------------------------------
// Primality and factorization
// ---------------------------------------------------------------------------

enum class Verdict { prime, decomposable, decomposable_over_extension, unsupported };

const char* to_string(Verdict verdict);

struct FactorizationResult {
    /// Descending degree, then canonical term order; scalar units are folded
    /// into the first factor.
    std::vector<Element> factors;
    /// Radicand d when some factor has coefficients in Q(sqrt(d)).
    std::optional<std::int64_t> radicand;
    bool verified = false;
    /// The input itself is prime; factors == {input}.
    bool input_prime = false;
};

struct PrimalityVerdict {
    Verdict verdict = Verdict::unsupported;
    /// Present for decomposable verdicts.
    std::optional<FactorizationResult> witness;
    std::optional<PatternClass> pattern;
    std::string reason;
};

/// Decides primality of a nonzero non-invertible element. Complete when the
/// support has at most four generators; otherwise only degree-1 elements are
/// decided. Throws ContractError for zero or invertible input.
PrimalityVerdict is_prime(const Element& p);

/// Splits p into prime factors. Throws ContractError for zero or invertible
/// input and UnsupportedError when p has degree >= 2 and its support exceeds
/// four generators.
FactorizationResult factor(const Element& p);

/// True iff the factors multiply to p exactly and none is invertible.
bool verify_factorization(const Element& p, const FactorizationResult& f);
bool verify_factorization(const Element& p, const std::vector<Element>& factors);

/// 4x6 matrix of v -> u*v from degree-2 to degree-3 elements of P_4, rows
/// and columns in canonical monomial order.
Matrix cubic_completion_matrix(const Element& u);

/// Finds a homogeneous degree-2 v with u*v = w, for u = sum a_i iota_i in P_4
/// with at least three nonzero a_i and w homogeneous of degree 3 (or zero).
/// Throws ContractError when the preconditions fail.
Element solve_cubic_completion(const Element& u, const Element& w);

}  // namespace pimenov
