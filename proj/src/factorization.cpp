#include "pimenov/factorization.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "pimenov/errors.hpp"
#include "pimenov/expr_io.hpp"

namespace pimenov {

namespace {

// Source generator j + 1 becomes target generator map[j].
Element relabel(const Element& e, int target_n, const std::vector<int>& map) {
    Element::Terms terms;
    for (const auto& [m, c] : e.terms()) {
        Monomial image;
        for (int k : m.indices()) image = image.united(Monomial::generator(map[k - 1]));
        terms.emplace(image, c);
    }
    return Element(target_n, std::move(terms));
}

Element gen(int n, int k, Scalar c = 1) { return Element::generator(n, k, std::move(c)); }

Scalar coef(const Element& q, int x, int y) { return q.coefficient(Monomial::of({x, y})); }

std::size_t nonzero_count(const Element& linear) { return linear.terms().size(); }

void require_factorizable(const Element& p) {
    if (p.is_zero()) throw ContractError("primality is undefined for the zero element");
    if (is_invertible(p)) throw ContractError("primality is undefined for invertible elements");
}

// Free parameters (a, b) of the constructive splittings, tried in this order.
const std::vector<std::pair<int, int>>& parameter_candidates() {
    static const std::vector<std::pair<int, int>> candidates = [] {
        std::vector<std::pair<int, int>> out = {{0, 0}, {1, 0}, {0, 1}, {1, 1}, {1, -1}, {2, 1}};
        for (int r = 1; r <= 8; ++r) {
            for (int a = -r; a <= r; ++a) {
                for (int b = -r; b <= r; ++b) {
                    if (std::max(std::abs(a), std::abs(b)) != r) continue;
                    if (std::find(out.begin(), out.end(), std::pair{a, b}) == out.end()) out.emplace_back(a, b);
                }
            }
        }
        return out;
    }();
    return candidates;
}

using Split = std::pair<Element, Element>;

// q supported on generators {x, y, z}:
//   q = alpha i_x i_y + beta i_x i_z + gamma i_y i_z
//     = (i_x + a2 i_y + a i_z)(b i_x + b2 i_y + b3 i_z)
// with a2 = (gamma - a alpha)/(beta - 2ab),
//      b2 = (alpha beta - b gamma - a b alpha)/(beta - 2ab), b3 = beta - ab.
// With full_first set, the first factor must have all three coefficients nonzero.
Split split_on_three(const Element& q, int x, int y, int z, bool full_first) {
    const int n = q.n();
    const Scalar alpha = coef(q, x, y);
    const Scalar beta = coef(q, x, z);
    const Scalar gamma = coef(q, y, z);
    for (auto [ai, bi] : parameter_candidates()) {
        const Scalar a(static_cast<long>(ai));
        const Scalar b(static_cast<long>(bi));
        const Scalar den = beta - Scalar(2) * a * b;
        if (den.is_zero()) continue;
        const Scalar a2 = (gamma - a * alpha) / den;
        if (full_first && (a.is_zero() || a2.is_zero())) continue;
        const Scalar b2 = (alpha * beta - b * gamma - a * b * alpha) / den;
        const Scalar b3 = beta - a * b;
        return {gen(n, x) + gen(n, y, a2) + gen(n, z, a), gen(n, x, b) + gen(n, y, b2) + gen(n, z, b3)};
    }
    throw std::logic_error("no admissible parameters for the three-generator splitting");
}

// alpha i_a i_b + sigma i_c i_d with parameters a, b != 0:
//   a2 = alpha/(2b), a4 = -sigma/(2ab), b2 = alpha/2, b3 = -ab, b4 = sigma/(2a).
Split split_two_disjoint(const Element& q, const Degree2Pattern& pat) {
    const int n = q.n();
    const auto [la, lb, lc, ld] = pat.labels;
    const Scalar& alpha = pat.coefficients[0];
    const Scalar& sigma = pat.coefficients[1];
    for (auto [ai, bi] : parameter_candidates()) {
        if (ai == 0 || bi == 0) continue;
        const Scalar a(static_cast<long>(ai));
        const Scalar b(static_cast<long>(bi));
        Element t = gen(n, la) + gen(n, lb, alpha / (Scalar(2) * b)) + gen(n, lc, a) +
                    gen(n, ld, -sigma / (Scalar(2) * a * b));
        Element s = gen(n, la, b) + gen(n, lb, alpha / Scalar(2)) + gen(n, lc, -(a * b)) +
                    gen(n, ld, sigma / (Scalar(2) * a));
        return {std::move(t), std::move(s)};
    }
    throw std::logic_error("no admissible parameters for the disjoint splitting");
}

// A generator i_a occurring in three monomials with coefficients alpha, beta,
// gamma (towards b, c, d), and delta, rho, sigma on bc, bd, cd:
//   q = (i_a + x_b i_b + x_c i_c + x_d i_d)(alpha i_b + beta i_c + gamma i_d)
// where x_b = (gamma delta + beta rho - alpha sigma)/(2 beta gamma)
//       x_c = (gamma delta - beta rho + alpha sigma)/(2 alpha gamma)
//       x_d = (-gamma delta + beta rho + alpha sigma)/(2 alpha beta)
Split split_generator_in_three(const Element& q, const Degree2Pattern& pat) {
    const int n = q.n();
    const auto [la, lb, lc, ld] = pat.labels;
    const auto& k = pat.coefficients;
    const Scalar &alpha = k[0], &beta = k[1], &gamma = k[2], &delta = k[3], &rho = k[4], &sigma = k[5];
    const Scalar two(2);
    const Scalar xb = (gamma * delta + beta * rho - alpha * sigma) / (two * beta * gamma);
    const Scalar xc = (gamma * delta - beta * rho + alpha * sigma) / (two * alpha * gamma);
    const Scalar xd = (-(gamma * delta) + beta * rho + alpha * sigma) / (two * alpha * beta);
    Element t = gen(n, la) + gen(n, lb, xb) + gen(n, lc, xc) + gen(n, ld, xd);
    Element s = gen(n, lb, alpha) + gen(n, lc, beta) + gen(n, ld, gamma);
    return {std::move(t), std::move(s)};
}

// Four-cycle alpha i_a i_b + beta i_a i_c + rho i_b i_d + sigma i_c i_d with
// alpha beta rho sigma > 0. With a1 = 1, a3 = a, b1 = b the system forces
// (beta - 2ab)^2 = alpha beta sigma / rho; we take a = 1 and the positive root
// k, so b = (beta - k)/2 and
//   a2 = -alpha/k, a4 = sigma/k, b2 = alpha (beta - b)/k, b3 = beta - b,
//   b4 = -b sigma/k.
// k lies in Q(sqrt(d)) when the ratio is not a rational square.
Split split_four_cycle(const Element& q, const Degree2Pattern& pat) {
    const int n = q.n();
    const auto [la, lb, lc, ld] = pat.labels;
    const Scalar &alpha = pat.coefficients[0], &beta = pat.coefficients[1];
    const Scalar &rho = pat.coefficients[2], &sigma = pat.coefficients[3];
    const Scalar k = Scalar::sqrt((alpha * beta * sigma / rho).as_rational());
    const Scalar b = (beta - k) / Scalar(2);
    Element t = gen(n, la) + gen(n, lb, -alpha / k) + gen(n, lc) + gen(n, ld, sigma / k);
    Element s = gen(n, la, b) + gen(n, lb, alpha * (beta - b) / k) + gen(n, lc, beta - b) + gen(n, ld, -(b * sigma) / k);
    return {std::move(t), std::move(s)};
}

int smallest_unused(std::initializer_list<int> used, int n) {
    for (int k = 1; k <= n; ++k) {
        if (std::find(used.begin(), used.end(), k) == used.end()) return k;
    }
    throw std::logic_error("no free generator");
}

// q = t*s for a decomposable homogeneous degree-2 q in P_4. With need_three the
// first factor has at least three nonzero coefficients.
Split split_degree2(const Element& q, const Degree2Pattern& pat, bool need_three) {
    const int n = q.n();
    const auto [la, lb, lc, ld] = pat.labels;
    switch (pat.kind) {
        case PatternClass::single_monomial:
            if (!need_three) return {gen(n, la, pat.coefficients[0]), gen(n, lb)};
            return split_on_three(q, la, lb, smallest_unused({la, lb}, n), true);
        case PatternClass::two_shared_generator: {
            // i_a s0 = (s0 + i_a) i_a since i_a^2 = 0.
            Element s0 = gen(n, lb, pat.coefficients[0]) + gen(n, lc, pat.coefficients[1]);
            if (!need_three) return {gen(n, la), std::move(s0)};
            return {s0 + gen(n, la), gen(n, la)};
        }
        case PatternClass::star: {
            Element s0 = gen(n, lb, pat.coefficients[0]) + gen(n, lc, pat.coefficients[1]) +
                         gen(n, ld, pat.coefficients[2]);
            if (!need_three) return {gen(n, la), std::move(s0)};
            return {std::move(s0), gen(n, la)};
        }
        case PatternClass::triangle:
            return split_on_three(q, la, lb, lc, need_three);
        case PatternClass::two_disjoint:
            return split_two_disjoint(q, pat);
        case PatternClass::generator_in_three_monomials: {
            Split split = split_generator_in_three(q, pat);
            if (need_three && nonzero_count(split.first) < 3) std::swap(split.first, split.second);
            return split;
        }
        case PatternClass::four_cycle:
            return split_four_cycle(q, pat);
        case PatternClass::zero:
        case PatternClass::path:
            break;
    }
    throw std::logic_error(std::string("no splitting for pattern ") + to_string(pat.kind));
}

struct Assessment {
    Verdict verdict;
    Degree2Pattern pattern;
    std::string reason;
};

// e lives in P_4 and has degree >= 2.
Assessment assess_support4(const Element& e) {
    Assessment out{Verdict::decomposable, classify_degree2(homogeneous_component(e, 2)), {}};
    const auto& k = out.pattern.coefficients;
    switch (out.pattern.kind) {
        case PatternClass::zero:
            out.reason = "no degree-2 part";
            return out;
        case PatternClass::path:
            out.verdict = Verdict::prime;
            out.reason = "path pattern";
            return out;
        case PatternClass::four_cycle: {
            Scalar product = k[0] * k[1] * k[2] * k[3];
            if (product.sign() < 0) {
                out.verdict = Verdict::prime;
                out.reason = "four-cycle pattern, coefficient product " + product.to_string() + " < 0";
                return out;
            }
            if (!product.is_rational()) {
                throw UnsupportedError("four-cycle with irrational coefficients");
            }
            Scalar root = Scalar::sqrt((k[0] * k[1] * k[3] / k[2]).as_rational());
            out.reason = "four-cycle pattern, coefficient product " + product.to_string() + " > 0";
            if (!root.is_rational()) {
                out.verdict = Verdict::decomposable_over_extension;
                out.reason += ", factors need sqrt(" + std::to_string(*root.radicand()) + ")";
            }
            return out;
        }
        default:
            out.reason = std::string(to_string(out.pattern.kind)) + " pattern";
            return out;
    }
}

struct Partial {
    std::vector<Element> factors;
    Scalar unit = 1;
};

Partial prime_factors(const Element& p);

// P_3, degree >= 2: p = q + delta i1 i2 i3 = t (s + delta i2 i3) with q = t s
// and the i1 coefficient of t equal to 1.
Partial factor_in_p3(const Element& e) {
    const int n = e.n();
    Element q = homogeneous_component(e, 2);
    Scalar delta = e.coefficient(Monomial::of({1, 2, 3}));
    if (q.is_zero()) return {{gen(n, 1), gen(n, 2), gen(n, 3)}, delta};
    auto [t, s] = split_on_three(q, 1, 2, 3, false);
    return {{std::move(t), s + Element::monomial(n, Monomial::of({2, 3}), delta)}, 1};
}

// P_4, degree >= 2: p = q + r + theta i1 i2 i3 i4. With q = t s, where t has at
// least three nonzero coefficients when r != 0, and t z = r,
//   p = t (s + z + (theta / t_g) * product of the generators other than g)
// for any g with t_g != 0.
Partial factor_in_p4(const Element& e) {
    const int n = e.n();
    const Element q = homogeneous_component(e, 2);
    const Element r = homogeneous_component(e, 3);
    const Scalar theta = e.coefficient(Monomial::top(4));

    if (q.is_zero()) {
        if (r.is_zero()) return {{gen(n, 1), gen(n, 2), gen(n, 3), gen(n, 4)}, theta};
        Element t = gen(n, 1) + gen(n, 2) + gen(n, 3);
        Element cofactor = solve_cubic_completion(t, r) + Element::monomial(n, Monomial::of({2, 3, 4}), theta);
        Partial rest = prime_factors(cofactor);
        rest.factors.insert(rest.factors.begin(), std::move(t));
        return rest;
    }

    Assessment assessment = assess_support4(e);
    if (assessment.verdict == Verdict::prime) return {{e}, 1};
    auto [t, s] = split_degree2(q, assessment.pattern, !r.is_zero());
    Element cofactor = s;
    if (!r.is_zero()) cofactor = cofactor + solve_cubic_completion(t, r);
    if (!theta.is_zero()) {
        const auto& [g, tg] = *t.terms().begin();
        Monomial rest{Monomial::top(4).bits & ~g.bits};
        cofactor = cofactor + Element::monomial(n, rest, theta / tg);
    }
    return {{std::move(t), std::move(cofactor)}, 1};
}

// p is nonzero, non-invertible, and has support of at most four generators.
Partial prime_factors(const Element& p) {
    if (degree(p) == Degree(1)) return {{p}, 1};
    SupportReduction red = reduce_support(p);
    const Element& e = red.reduced;
    Partial part;
    switch (e.n()) {
        case 2:
            part = {{gen(2, 1), gen(2, 2)}, e.coefficient(Monomial::of({1, 2}))};
            break;
        case 3:
            part = factor_in_p3(e);
            break;
        case 4:
            part = factor_in_p4(e);
            break;
        default:
            throw UnsupportedError("factorization needs support of at most four generators");
    }
    for (auto& f : part.factors) f = red.lift(f);
    return part;
}

bool factor_before(const Element& x, const Element& y) {
    Degree dx = degree(x);
    Degree dy = degree(y);
    if (dx != dy) return dx > dy;
    auto ix = x.terms().begin();
    auto iy = y.terms().begin();
    for (; ix != x.terms().end() && iy != y.terms().end(); ++ix, ++iy) {
        if (ix->first != iy->first) return CanonicalOrder{}(ix->first, iy->first);
    }
    if (ix != x.terms().end() || iy != y.terms().end()) return ix == x.terms().end();
    return print(x) < print(y);
}

}  // namespace

std::vector<int> support_generators(const Element& p) {
    Monomial all;
    for (const auto& [m, c] : p.terms()) all = all.united(m);
    return all.indices();
}

Element SupportReduction::lift(const Element& e) const { return relabel(e, original_n, generators); }

SupportReduction reduce_support(const Element& p) {
    std::vector<int> gens = support_generators(p);
    std::vector<int> to_reduced(static_cast<std::size_t>(p.n()), 0);
    for (std::size_t j = 0; j < gens.size(); ++j) to_reduced[gens[j] - 1] = static_cast<int>(j) + 1;
    int m = std::max<int>(1, static_cast<int>(gens.size()));
    Element::Terms terms;
    for (const auto& [mono, c] : p.terms()) {
        Monomial image;
        for (int k : mono.indices()) image = image.united(Monomial::generator(to_reduced[k - 1]));
        terms.emplace(image, c);
    }
    return {Element(m, std::move(terms)), std::move(gens), p.n()};
}

const char* to_string(PatternClass kind) {
    switch (kind) {
        case PatternClass::zero:
            return "zero";
        case PatternClass::single_monomial:
            return "single-monomial";
        case PatternClass::two_shared_generator:
            return "two-shared-generator";
        case PatternClass::two_disjoint:
            return "two-disjoint";
        case PatternClass::triangle:
            return "triangle";
        case PatternClass::star:
            return "star";
        case PatternClass::path:
            return "path";
        case PatternClass::four_cycle:
            return "four-cycle";
        case PatternClass::generator_in_three_monomials:
            return "generator-in-three-monomials";
    }
    return "?";
}

const char* to_string(Verdict verdict) {
    switch (verdict) {
        case Verdict::prime:
            return "prime";
        case Verdict::decomposable:
            return "decomposable";
        case Verdict::decomposable_over_extension:
            return "decomposable-over-extension";
        case Verdict::unsupported:
            return "unsupported";
    }
    return "?";
}

Degree2Pattern classify_degree2(const Element& q) {
    if (q.n() > 4) throw ContractError("degree-2 patterns are classified in P_n for n <= 4");
    struct Edge {
        int u, v;
        Scalar c;
    };
    std::vector<Edge> edges;
    std::array<int, 5> valence{};
    for (const auto& [m, c] : q.terms()) {
        if (m.length() != 2) throw ContractError("classify_degree2 needs a homogeneous degree-2 element");
        auto ix = m.indices();
        edges.push_back({ix[0], ix[1], c});
        ++valence[ix[0]];
        ++valence[ix[1]];
    }
    auto c = [&](int x, int y) { return coef(q, x, y); };
    auto vertices_with = [&](int v) {
        std::vector<int> out;
        for (int k = 1; k <= 4; ++k) {
            if (valence[k] == v) out.push_back(k);
        }
        return out;
    };
    auto neighbours = [&](int x) {
        std::vector<int> out;
        for (const auto& e : edges) {
            if (e.u == x) out.push_back(e.v);
            if (e.v == x) out.push_back(e.u);
        }
        std::sort(out.begin(), out.end());
        return out;
    };

    Degree2Pattern pat;
    const int max_valence = *std::max_element(valence.begin(), valence.end());
    switch (edges.size()) {
        case 0:
            return pat;
        case 1:
            pat.kind = PatternClass::single_monomial;
            pat.labels = {edges[0].u, edges[0].v, 0, 0};
            pat.coefficients = {edges[0].c};
            return pat;
        case 2:
            if (max_valence == 2) {
                int a = vertices_with(2)[0];
                auto nb = neighbours(a);
                pat.kind = PatternClass::two_shared_generator;
                pat.labels = {a, nb[0], nb[1], 0};
                pat.coefficients = {c(a, nb[0]), c(a, nb[1])};
            } else {
                pat.kind = PatternClass::two_disjoint;
                pat.labels = {edges[0].u, edges[0].v, edges[1].u, edges[1].v};
                pat.coefficients = {edges[0].c, edges[1].c};
            }
            return pat;
        case 3:
            if (max_valence == 3) {
                int a = vertices_with(3)[0];
                auto nb = neighbours(a);
                pat.kind = PatternClass::star;
                pat.labels = {a, nb[0], nb[1], nb[2]};
                pat.coefficients = {c(a, nb[0]), c(a, nb[1]), c(a, nb[2])};
            } else if (vertices_with(2).size() == 3) {
                auto v = vertices_with(2);
                pat.kind = PatternClass::triangle;
                pat.labels = {v[0], v[1], v[2], 0};
                pat.coefficients = {c(v[0], v[1]), c(v[0], v[2]), c(v[1], v[2])};
            } else {
                auto interior = vertices_with(2);
                int a = interior[0];
                int b = interior[1];
                auto other = [&](int x, int skip) {
                    for (int y : neighbours(x)) {
                        if (y != skip) return y;
                    }
                    throw std::logic_error("path vertex without outer neighbour");
                };
                int cc = other(a, b);
                int d = other(b, a);
                pat.kind = PatternClass::path;
                pat.labels = {a, b, cc, d};
                pat.coefficients = {c(a, b), c(a, cc), c(b, d)};
            }
            return pat;
        default:
            break;
    }
    if (edges.size() == 4 && max_valence == 2) {
        int a = 1;
        auto nb = neighbours(a);
        int d = smallest_unused({a, nb[0], nb[1]}, 4);
        pat.kind = PatternClass::four_cycle;
        pat.labels = {a, nb[0], nb[1], d};
        pat.coefficients = {c(a, nb[0]), c(a, nb[1]), c(nb[0], d), c(nb[1], d)};
        return pat;
    }
    int a = vertices_with(3).empty() ? 0 : vertices_with(3)[0];
    for (int k = 1; k <= 4 && a == 0; ++k) {
        if (valence[k] >= 3) a = k;
    }
    std::vector<int> rest;
    for (int k = 1; k <= 4; ++k) {
        if (k != a) rest.push_back(k);
    }
    pat.kind = PatternClass::generator_in_three_monomials;
    pat.labels = {a, rest[0], rest[1], rest[2]};
    pat.coefficients = {c(a, rest[0]), c(a, rest[1]), c(a, rest[2]),
                        c(rest[0], rest[1]), c(rest[0], rest[2]), c(rest[1], rest[2])};
    return pat;
}

PrimalityVerdict is_prime(const Element& p) {
    require_factorizable(p);
    PrimalityVerdict out;
    if (degree(p) == Degree(1)) {
        out.verdict = Verdict::prime;
        out.reason = "degree 1";
        return out;
    }
    SupportReduction red = reduce_support(p);
    const int m = red.reduced.n();
    if (m > 4) {
        out.verdict = Verdict::unsupported;
        out.reason = "support of " + std::to_string(m) + " generators exceeds 4";
        return out;
    }
    if (m < 4) {
        out.verdict = Verdict::decomposable;
        out.pattern = classify_degree2(homogeneous_component(red.reduced, 2)).kind;
        out.reason = "support of " + std::to_string(m) + " generators";
    } else {
        Assessment a = assess_support4(red.reduced);
        out.verdict = a.verdict;
        out.pattern = a.pattern.kind;
        out.reason = std::move(a.reason);
        if (out.verdict == Verdict::prime) return out;
    }
    out.witness = factor(p);
    return out;
}

FactorizationResult factor(const Element& p) {
    require_factorizable(p);
    FactorizationResult out;
    if (degree(p) == Degree(1)) {
        out.factors = {p};
        out.input_prime = true;
        out.radicand = p.radicand();
        out.verified = true;
        return out;
    }
    SupportReduction red = reduce_support(p);
    if (red.reduced.n() > 4) {
        throw UnsupportedError("factorization of degree >= 2 elements needs support of at most four generators, got " +
                               std::to_string(red.reduced.n()));
    }
    if (red.reduced.n() == 4 && assess_support4(red.reduced).verdict == Verdict::prime) {
        out.factors = {p};
        out.input_prime = true;
        out.radicand = p.radicand();
        out.verified = true;
        return out;
    }

    Partial part = prime_factors(p);
    std::stable_sort(part.factors.begin(), part.factors.end(), factor_before);
    part.factors.front() = part.unit * part.factors.front();
    out.factors = std::move(part.factors);
    for (const auto& f : out.factors) {
        if (auto d = f.radicand()) out.radicand = d;
    }
    out.verified = verify_factorization(p, out.factors);
    for (const auto& f : out.factors) {
        if (!out.verified) break;
        out.verified = is_prime(f).verdict == Verdict::prime;
    }
    if (!out.verified) {
        throw std::logic_error("internal error: constructed factorization failed verification");
    }
    return out;
}

bool verify_factorization(const Element& p, const std::vector<Element>& factors) {
    if (factors.empty()) return false;
    try {
        Element product = factors.front();
        for (std::size_t i = 1; i < factors.size(); ++i) product = product * factors[i];
        if (!(product == p)) return false;
    } catch (const Error&) {
        return false;
    }
    return std::none_of(factors.begin(), factors.end(), [](const Element& f) { return is_invertible(f); });
}

bool verify_factorization(const Element& p, const FactorizationResult& f) {
    return verify_factorization(p, f.factors);
}

Matrix cubic_completion_matrix(const Element& u) {
    if (u.n() != 4) throw ContractError("cubic_completion_matrix works in P_4");
    std::vector<Monomial> columns;
    std::vector<Monomial> rows;
    for (Monomial m : canonical_monomials(4)) {
        if (m.length() == 2) columns.push_back(m);
        if (m.length() == 3) rows.push_back(m);
    }
    Matrix a(rows.size(), columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        Element image = u * Element::monomial(4, columns[j]);
        for (std::size_t i = 0; i < rows.size(); ++i) a(i, j) = image.coefficient(rows[i]);
    }
    return a;
}

Element solve_cubic_completion(const Element& u, const Element& w) {
    if (u.n() != 4 || w.n() != 4) throw ContractError("solve_cubic_completion works in P_4");
    for (const auto& [m, c] : u.terms()) {
        if (m.length() != 1) throw ContractError("u must be homogeneous of degree 1");
    }
    if (nonzero_count(u) < 3) throw ContractError("u needs at least three nonzero coefficients");
    for (const auto& [m, c] : w.terms()) {
        if (m.length() != 3) throw ContractError("w must be homogeneous of degree 3");
    }
    std::vector<Monomial> columns;
    std::vector<Scalar> rhs;
    for (Monomial m : canonical_monomials(4)) {
        if (m.length() == 2) columns.push_back(m);
        if (m.length() == 3) rhs.push_back(w.coefficient(m));
    }
    auto solution = solve_linear(cubic_completion_matrix(u), rhs);
    if (!solution) throw std::logic_error("rank-4 system reported inconsistent");
    Element::Terms terms;
    for (std::size_t j = 0; j < columns.size(); ++j) terms.emplace(columns[j], solution->particular[j]);
    return Element(4, std::move(terms));
}

}  // namespace pimenov
