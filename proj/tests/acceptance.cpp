// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <functional>
#include <random>
#include <iostream>
#include <sstream>
#include <string>

#include "oracle.hpp"
#include "pimenov/errors.hpp"
#include "pimenov/expr_io.hpp"
#include "pimenov/factorization.hpp"
#include "pimenov/inversion.hpp"
#include "pimenov/testkit.hpp"

using namespace pimenov;
using testkit::Profile;
using testkit::random_element;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Records the first failure and keeps a short description.
class Check {
  public:
    void require(bool condition, const std::string& what) {
        if (!condition && pass_) {
            pass_ = false;
            first_failure_ = what;
        }
        if (!condition) ++failures_;
    }
    Outcome done(const std::string& summary) const {
        if (pass_) return {true, summary};
        return {false, summary + "; " + std::to_string(failures_) + " failure(s), first: " + first_failure_};
    }

  private:
    bool pass_ = true;
    int failures_ = 0;
    std::string first_failure_;
};

Element P(const std::string& text, int n) { return parse(text, n); }

Element one(int n) { return Element::constant(n, 1); }

Outcome inversion_round_trip() {
    Check c;
    int count = 0;
    for (int n = 1; n <= 8; ++n) {
        for (std::uint64_t i = 0; i < 1000; ++i) {
            Element p = random_element(n, 1'000'000 * static_cast<std::uint64_t>(n) + i, Profile::invertible());
            c.require(oracle::naive_mul(p, invert(p)) == one(n), "p * invert(p) != 1 for " + print(p));
            ++count;
        }
    }
    return c.done(std::to_string(count) + " invertible elements, n = 1..8");
}

Outcome reference_inverse() {
    Check c;
    Element p = P("2 + i1 - i2*i3", 3);
    Element inv = invert(p);
    c.require(inv.coefficient(Monomial::unit()) == Scalar(Rational(1, 2)), "coefficient of 1");
    c.require(inv.coefficient(Monomial::of({1})) == Scalar(Rational(-1, 4)), "coefficient of i1");
    c.require(inv.coefficient(Monomial::of({2, 3})) == Scalar(Rational(1, 4)), "coefficient of i2*i3");
    c.require(oracle::naive_mul(p, inv) == one(3), "round trip");
    Scalar last = inv.coefficient(Monomial::of({1, 2, 3}));
    c.require(last == Scalar(Rational(-1, 4)), "last coefficient is " + last.to_string());
    Element misprint = inv - Element::monomial(3, Monomial::of({1, 2, 3}), last) +
                      Element::monomial(3, Monomial::of({1, 2, 3}), Scalar(Rational(-1, 8)));
    bool misprint_fails = !(oracle::naive_mul(p, misprint) == one(3));
    c.require(misprint_fails, "reference value -1/8 unexpectedly passes the round trip");
    return c.done("inverse " + print(inv) + "; misprint detected: reference value -1/8 for the last coefficient gives p*x = " +
                  print(oracle::naive_mul(p, misprint)) + ", round trip forces -1/4");
}

Outcome closed_form() {
    Check c;
    std::size_t compared = 0;
    for (std::uint64_t i = 0; i < 500; ++i) {
        Element p = random_element(4, 3'000'000 + i, Profile::invertible());
        Element inv = invert(p);
        for (Monomial s : canonical_monomials(4)) {
            if (s.length() > 3) continue;
            c.require(inverse_coeff_closed_form(p, s) == inv.coefficient(s), "mismatch at " + to_string(s));
            ++compared;
        }
    }
    return c.done("500 elements of P_4, " + std::to_string(compared) + " coefficients compared");
}

Outcome nilpotency() {
    Check c;
    int checked = 0;
    for (std::uint64_t i = 0; checked < 500; ++i) {
        int n = 1 + static_cast<int>(i % 8);
        auto profile = i % 2 == 0 ? Profile::invertible() : Profile::non_invertible();
        Element p = random_element(n, 4'000'000 + i, profile);
        Element im = imag_part(p);
        if (im.is_zero()) continue;
        unsigned m = nilpotency_bound(p);
        c.require(power(im, m + 1).is_zero(), "Im p^(M+1) != 0 for " + print(p));
        ++checked;
    }
    unsigned example = nilpotency_bound(P("2 + i1 - i2*i3", 3));
    c.require(example == 2, "bound for 2 + i1 - i2*i3 is " + std::to_string(example));
    return c.done("500 random elements; bound for 2 + i1 - i2*i3 is " + std::to_string(example));
}

Outcome division() {
    Check c;
    auto s1 = solve_division(P("i2", 2), P("i2 + i1*i2", 2));
    c.require(s1.particular.has_value(), "(i2, i2 + i1*i2) unsolvable");
    if (s1.particular) {
        Element diff = P("1 + i1", 2) - *s1.particular;
        auto in_kernel = solve_division(P("i2", 2), Element(2));
        c.require((P("i2", 2) * diff).is_zero() && in_kernel.kernel_basis.size() == s1.kernel_basis.size(),
                  "1 + i1 is not among the solutions");
        c.require(P("i2", 2) * P("1 + i1", 2) == P("i2 + i1*i2", 2), "1 + i1 does not solve");
    }
    auto s2 = solve_division(P("i1*i2", 2), P("i1", 2));
    c.require(s2.status == DivisionStatus::none, "(i1*i2, i1) reported solvable");

    std::mt19937_64 rng(17);
    int solvable = 0;
    for (std::uint64_t i = 0; i < 200; ++i) {
        int n = 1 + static_cast<int>(i % 5);
        Element a = i % 4 == 3 ? random_element(n, 5'000'000 + i, Profile::invertible())
                               : random_element(n, 5'000'000 + i, Profile::non_invertible());
        Element b = i % 2 == 0 ? a * random_element(n, 5'500'000 + i, Profile::invertible())
                               : random_element(n, 5'700'000 + i, Profile::non_invertible());
        DivisionSolution sol = solve_division(a, b);
        std::size_t rank = oracle::rank(oracle::operator_matrix(a));
        c.require(sol.rank == rank, "rank mismatch");
        if (sol.status == DivisionStatus::none) {
            // Inconsistent: b is outside the column space of the operator matrix.
            auto augmented = oracle::operator_matrix(a);
            auto bv = coefficient_vector(b);
            auto order = canonical_monomials(n);
            for (std::size_t r = 0; r < order.size(); ++r) augmented[order[r].bits].push_back(bv[r].as_rational());
            c.require(oracle::rank(augmented) > rank, "solvable system reported unsolvable");
            continue;
        }
        ++solvable;
        c.require((std::size_t{1} << n) - rank == sol.kernel_basis.size(), "solution-set dimension != 2^n - rank");
        c.require(a * *sol.particular == b, "particular does not solve");
        for (int t = 0; t < 5; ++t) {
            Element x = *sol.particular;
            for (const auto& k : sol.kernel_basis) x = x + Scalar(static_cast<long>(rng() % 9) - 4) * k;
            c.require(a * x == b, "particular + kernel combination does not solve");
            if (sol.solutions_invertible) c.require(is_invertible(x) == *sol.solutions_invertible, "invertibility flag");
        }
    }
    return c.done("(i2, i2 + i1*i2) and (i1*i2, i1) ok; 200 random pairs (" + std::to_string(solvable) + " solvable)");
}

Outcome degree_inequality() {
    Check c;
    for (int n = 2; n <= 4; ++n) {
        for (std::uint64_t i = 0; i < 10'000; ++i) {
            std::uint64_t seed = 6'000'000 + 100'000 * static_cast<std::uint64_t>(n) + 2 * i;
            auto pick = [&](std::uint64_t s) {
                switch (s % 4) {
                    case 0:
                        return random_element(n, s, Profile::invertible());
                    case 1:
                        return random_element(n, s, Profile::homogeneous(1 + static_cast<int>(s / 4 % n)));
                    case 2:
                        return Element(n);
                    default:
                        return random_element(n, s, Profile::non_invertible());
                }
            };
            Element a = pick(seed);
            Element b = pick(seed + 1 + i % 3);
            c.require(degree(a * b) >= degree(a) + degree(b), "deg(ab) < deg a + deg b");
        }
    }
    return c.done("30000 pairs over n = 2, 3, 4");
}

Outcome p3_completeness() {
    Check c;
    testkit::GridSpec grid{testkit::integer_range(-2, 2), 3, 2, 3};
    std::uint64_t factored = 0;
    grid.for_each([&](const Element& p) {
        if (p.is_zero()) return;
        try {
            FactorizationResult f = factor(p);
            c.require(verify_factorization(p, f), "unverified factorization of " + print(p));
            for (const auto& x : f.factors) c.require(is_prime(x).verdict == Verdict::prime, "non-prime factor");
            ++factored;
        } catch (const std::exception& e) {
            c.require(false, print(p) + ": " + e.what());
        }
    });
    return c.done(std::to_string(grid.instance_count()) + " grid points, " + std::to_string(factored) +
                  " nonzero elements factored and verified");
}

Outcome p4_classifier() {
    Check c;
    auto grid = testkit::GridSpec::homogeneous(testkit::integer_range(-1, 1), 4, 2);
    std::vector<Rational> oracle_grid = {-2, -1, Rational(-1, 2), 0, Rational(1, 2), 1, 2};
    auto report = testkit::exhaustive_classifier_check(grid, oracle_grid);
    c.require(grid.instance_count() == 729, "grid size");
    c.require(report.discrepancies.empty(), report.to_json_lines());
    int negative = 0;
    int positive = 0;
    grid.for_each([&](const Element& p) {
        auto pat = classify_degree2(p);
        if (pat.kind != PatternClass::four_cycle) return;
        auto v = is_prime(p);
        const auto& k = pat.coefficients;
        int sign = (k[0] * k[1] * k[2] * k[3]).sign();
        if (sign < 0) {
            ++negative;
            c.require(v.verdict == Verdict::prime, "negative cycle not prime: " + print(p));
        } else {
            ++positive;
            c.require(v.verdict == Verdict::decomposable && v.witness && verify_factorization(p, *v.witness),
                      "positive cycle without verified witness: " + print(p));
        }
    });
    return c.done("729 instances: " + std::to_string(report.prime) + " prime, " + std::to_string(report.decomposable) +
                  " decomposable, " + std::to_string(report.discrepancies.size()) + " discrepancies; four-cycles " +
                  std::to_string(negative) + " negative, " + std::to_string(positive) + " positive");
}

Outcome assembly() {
    Check c;
    int accepted = 0;
    int q_zero = 0;
    int qr_zero = 0;
    for (std::uint64_t i = 0; accepted < 500; ++i) {
        Element p = random_element(4, 9'000'000 + i, Profile::non_invertible());
        p = p - homogeneous_component(p, 1);
        if (i % 7 == 0 || i % 7 == 1) p = p - homogeneous_component(p, 2);
        if (i % 7 == 1) p = p - homogeneous_component(p, 3);
        if (p.is_zero() && i % 7 == 1) p = Element::monomial(4, Monomial::top(4), Scalar(static_cast<long>(i % 5) + 1));
        if (p.is_zero()) continue;
        Element q = homogeneous_component(p, 2);
        if (!q.is_zero() && is_prime(q).verdict == Verdict::prime) continue;
        ++accepted;
        if (q.is_zero()) ++q_zero;
        if (q.is_zero() && homogeneous_component(p, 3).is_zero()) ++qr_zero;
        try {
            FactorizationResult f = factor(p);
            c.require(f.verified && verify_factorization(p, f), "unverified: " + print(p));
            Element prod = f.factors.front();
            for (std::size_t k = 1; k < f.factors.size(); ++k) prod = oracle::naive_mul(prod, f.factors[k]);
            c.require(prod == p, "oracle product differs: " + print(p));
            for (const auto& x : f.factors) c.require(is_prime(x).verdict == Verdict::prime, "non-prime factor");
        } catch (const std::exception& e) {
            c.require(false, print(p) + ": " + e.what());
        }
    }
    c.require(q_zero > 0 && qr_zero > 0, "degenerate cases not exercised");
    return c.done("500 elements (" + std::to_string(q_zero) + " with q = 0, " + std::to_string(qr_zero) +
                  " with q = r = 0)");
}

Outcome quadratic_extension() {
    Check c;
    Element p = P("i1*i2 + i1*i3 + 2*i2*i4 + i3*i4", 4);
    FactorizationResult f = factor(p);
    c.require(f.radicand == 2, "field is not Q(sqrt(2))");
    bool irrational = false;
    for (const auto& x : f.factors) irrational = irrational || x.radicand() == 2;
    c.require(irrational, "no factor has sqrt(2) coefficients");
    Element prod = f.factors.front();
    for (std::size_t k = 1; k < f.factors.size(); ++k) prod = oracle::naive_mul(prod, f.factors[k]);
    c.require(prod == p, "extension product differs from the input");
    c.require(is_prime(p).verdict == Verdict::decomposable_over_extension, "verdict");
    std::string text;
    for (const auto& x : f.factors) text += "(" + print(x) + ")";
    return c.done(text);
}

Outcome round_trips() {
    Check c;
    for (std::uint64_t i = 0; i < 5000; ++i) {
        int n = 1 + static_cast<int>(i % 10);
        auto profile = i % 3 == 0   ? Profile::invertible()
                       : i % 3 == 1 ? Profile::non_invertible()
                                    : Profile::homogeneous(1 + static_cast<int>(i / 3 % n));
        Element p = random_element(n, 10'000'000 + i, profile);
        if (i % 50 == 0) p = Element(n);
        if (i % 50 == 25) p = P("(1/2 - 1/4*sqrt(2))*i1 + (sqrt(2))", n);
        std::string text = print(p);
        c.require(parse(text, n) == p, "parse(print(p)) != p for " + text);
        c.require(print(parse(text, n)) == text, "print not deterministic for " + text);
        std::string json = to_json(p);
        c.require(from_json(json) == p, "from_json(to_json(p)) != p for " + json);
        c.require(to_json(from_json(json)) == json, "to_json not deterministic for " + json);
    }
    return c.done("5000 elements");
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<Outcome()> run;
    };
    const Criterion criteria[] = {
        {1, "inversion round trip", inversion_round_trip},
        {2, "inverse of 2 + i1 - i2*i3 with misprint check", reference_inverse},
        {3, "closed-form agreement", closed_form},
        {4, "nilpotency bound", nilpotency},
        {5, "division trichotomy and completeness", division},
        {6, "degree inequality fuzz", degree_inequality},
        {7, "P_3 completeness", p3_completeness},
        {8, "P_4 classifier vs oracle", p4_classifier},
        {9, "P_4 assembly", assembly},
        {10, "quadratic-extension factorization", quadratic_extension},
        {11, "parser/printer/JSON round trips", round_trips},
    };
    int failed = 0;
    for (const auto& criterion : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criterion.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!o.pass) ++failed;
        std::ostringstream time;
        time.precision(2);
        time << std::fixed << seconds;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << criterion.id << " (" << criterion.name
                  << "): " << o.detail << " [" << time.str() << "s]" << std::endl;
    }
    std::cout << (failed == 0 ? "all 11 criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
    return failed == 0 ? 0 : 1;
}
