#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pimenov/element.hpp"
#include "pimenov/factorization.hpp"

namespace pimenov::testkit {

/// Finite family of elements of P_n: every monomial whose length lies in
/// [min_length, max_length] takes each value of `coefficients`; all other
/// monomials are zero.
struct GridSpec {
    std::vector<Rational> coefficients;
    int n = 4;
    int min_length = 2;
    int max_length = 2;

    static GridSpec homogeneous(std::vector<Rational> coefficients, int n, int t);

    /// Monomials that carry grid coefficients, in canonical order.
    std::vector<Monomial> free_monomials() const;
    /// coefficients.size() ^ free_monomials().size(); saturates at UINT64_MAX.
    std::uint64_t instance_count() const;
    /// Calls visit on every instance, zero included, in odometer order.
    void for_each(const std::function<void(const Element&)>& visit) const;
};

/// {lo, ..., hi} as rationals.
std::vector<Rational> integer_range(long lo, long hi);

struct Profile {
    enum class Kind { invertible, non_invertible, homogeneous };
    Kind kind = Kind::invertible;
    int t = 0;

    static Profile invertible() { return {Kind::invertible, 0}; }
    static Profile non_invertible() { return {Kind::non_invertible, 0}; }
    static Profile homogeneous(int t) { return {Kind::homogeneous, t}; }
};

/// Parses "invertible", "non-invertible" or "homogeneous:T".
std::optional<Profile> parse_profile(const std::string& text);

/// Seeded random element with coefficients a/b, a in -3..3, b in 1..3. The
/// result is nonzero for every profile; invertible elements have a nonzero
/// real part, non-invertible ones a zero real part, homogeneous(t) ones only
/// monomials of length t. For 2^n > 256 a bounded number of monomials is
/// drawn instead of visiting all of them. Throws RangeError for t > n.
Element random_element(int n, std::uint64_t seed, Profile profile);

inline constexpr std::uint64_t kDefaultSearchBudget = 10'000'000;

/// Exhaustive search for degree-1 factors t, s with t*s = p, coefficients of
/// both drawn from grid.coefficients and the leading nonzero coefficient of t
/// fixed to 1. p must be a nonzero homogeneous degree-2 element with rational
/// coefficients (ContractError otherwise). Throws ResourceError when the
/// number of candidate pairs exceeds budget.
std::optional<std::pair<Element, Element>> brute_force_factor_search(const Element& p, const GridSpec& grid,
                                                                     std::uint64_t budget = kDefaultSearchBudget);

struct Discrepancy {
    Element element;
    Verdict verdict;
    std::string detail;
};

struct ClassifierReport {
    std::uint64_t instances = 0;
    std::uint64_t prime = 0;
    std::uint64_t decomposable = 0;
    std::uint64_t over_extension = 0;
    /// Decomposable instances for which the grid search also found factors.
    std::uint64_t oracle_witnesses = 0;
    std::vector<Discrepancy> discrepancies;

    std::string to_text() const;
    /// One JSON object per discrepancy, newline-terminated.
    std::string to_json_lines() const;
};

/// Compares is_prime against brute_force_factor_search on every nonzero
/// element of the instance grid (0 is always added to its coefficients).
/// The instance grid must be homogeneous of degree 2 in P_4. When
/// oracle_coefficients is empty the instance coefficients are used.
ClassifierReport exhaustive_classifier_check(const GridSpec& grid, std::vector<Rational> oracle_coefficients = {},
                                             std::uint64_t budget = kDefaultSearchBudget);

}  // namespace pimenov::testkit
