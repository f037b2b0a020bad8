#include "pimenov/testkit.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>

#include <json.hpp>

#include "pimenov/errors.hpp"
#include "pimenov/expr_io.hpp"

namespace pimenov::testkit {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > kSaturated / a) return kSaturated;
    return a * b;
}

std::uint64_t saturating_pow(std::uint64_t base, std::size_t exp) {
    std::uint64_t out = 1;
    for (std::size_t i = 0; i < exp; ++i) out = saturating_mul(out, base);
    return out;
}

std::vector<Rational> sorted_unique(std::vector<Rational> values) {
    for (auto& v : values) v.canonicalize();
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

// Random k-subset of {1..n} as a monomial.
Monomial random_subset(int n, int k, std::mt19937_64& rng) {
    std::vector<int> idx(static_cast<std::size_t>(n));
    std::iota(idx.begin(), idx.end(), 1);
    std::shuffle(idx.begin(), idx.end(), rng);
    Monomial m;
    for (int i = 0; i < k; ++i) m = m.united(Monomial::generator(idx[static_cast<std::size_t>(i)]));
    return m;
}

}  // namespace

GridSpec GridSpec::homogeneous(std::vector<Rational> coefficients, int n, int t) {
    return {std::move(coefficients), n, t, t};
}

std::vector<Monomial> GridSpec::free_monomials() const {
    std::vector<Monomial> out;
    for (Monomial m : canonical_monomials(n)) {
        if (m.length() >= min_length && m.length() <= max_length) out.push_back(m);
    }
    return out;
}

std::uint64_t GridSpec::instance_count() const {
    return saturating_pow(coefficients.size(), free_monomials().size());
}

void GridSpec::for_each(const std::function<void(const Element&)>& visit) const {
    if (coefficients.empty()) return;
    const std::vector<Monomial> monos = free_monomials();
    std::vector<std::size_t> digit(monos.size(), 0);
    while (true) {
        Element::Terms terms;
        for (std::size_t i = 0; i < monos.size(); ++i) {
            const Rational& c = coefficients[digit[i]];
            if (sgn(c) != 0) terms.emplace(monos[i], Scalar(c));
        }
        visit(Element(n, std::move(terms)));
        std::size_t i = 0;
        while (i < digit.size() && ++digit[i] == coefficients.size()) digit[i++] = 0;
        if (i == digit.size()) return;
    }
}

std::vector<Rational> integer_range(long lo, long hi) {
    std::vector<Rational> out;
    for (long v = lo; v <= hi; ++v) out.emplace_back(v);
    return out;
}

std::optional<Profile> parse_profile(const std::string& text) {
    if (text == "invertible") return Profile::invertible();
    if (text == "non-invertible") return Profile::non_invertible();
    const std::string prefix = "homogeneous:";
    if (text.starts_with(prefix) && text.size() > prefix.size() && text.size() <= prefix.size() + 2) {
        std::string digits = text.substr(prefix.size());
        if (std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
            return Profile::homogeneous(std::stoi(digits));
        }
    }
    return std::nullopt;
}

Element random_element(int n, std::uint64_t seed, Profile profile) {
    if (n < 1 || n > kMaxGenerators) throw RangeError("generator count out of range");
    if (profile.kind == Profile::Kind::homogeneous && (profile.t < 0 || profile.t > n)) {
        throw RangeError("homogeneous degree " + std::to_string(profile.t) + " exceeds n = " + std::to_string(n));
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> numerator(-3, 3);
    std::uniform_int_distribution<int> denominator(1, 3);
    std::bernoulli_distribution include(0.5);
    auto coefficient = [&](bool nonzero) {
        int a = numerator(rng);
        while (nonzero && a == 0) a = numerator(rng);
        Rational r(a, denominator(rng));
        r.canonicalize();
        return Scalar(r);
    };
    auto allowed = [&](Monomial m) {
        switch (profile.kind) {
            case Profile::Kind::invertible:
                return true;
            case Profile::Kind::non_invertible:
                return !m.empty();
            case Profile::Kind::homogeneous:
                return m.length() == profile.t;
        }
        return false;
    };

    Element::Terms terms;
    if (n <= 8) {
        for (Monomial m : canonical_monomials(n)) {
            if (allowed(m) && include(rng)) terms[m] = coefficient(false);
        }
    } else {
        std::uniform_int_distribution<int> length(1, std::min(n, 4));
        for (int i = 0; i < 16; ++i) {
            int k = profile.kind == Profile::Kind::homogeneous ? profile.t : length(rng);
            Monomial m = random_subset(n, k, rng);
            if (allowed(m)) terms[m] = coefficient(false);
        }
    }
    std::erase_if(terms, [](const auto& term) { return term.second.is_zero(); });

    switch (profile.kind) {
        case Profile::Kind::invertible:
            terms[Monomial::unit()] = coefficient(true);
            break;
        case Profile::Kind::non_invertible:
            if (terms.empty()) terms[random_subset(n, 1, rng)] = coefficient(true);
            break;
        case Profile::Kind::homogeneous:
            if (terms.empty()) terms[random_subset(n, profile.t, rng)] = coefficient(true);
            break;
    }
    return Element(n, std::move(terms));
}

std::optional<std::pair<Element, Element>> brute_force_factor_search(const Element& p, const GridSpec& grid,
                                                                     std::uint64_t budget) {
    if (p.is_zero()) throw ContractError("brute-force search needs a nonzero target");
    for (const auto& [m, c] : p.terms()) {
        if (m.length() != 2) throw ContractError("brute-force search handles homogeneous degree-2 targets only");
        if (!c.is_rational()) throw ContractError("brute-force search needs rational coefficients");
    }
    const int n = p.n();
    const std::vector<Rational> values = sorted_unique(grid.coefficients);
    const std::uint64_t g = values.size();

    // Leading coefficient of t at position i: g^(n-1-i) choices for t, g^n for s.
    std::uint64_t candidates = 0;
    for (int i = 0; i < n; ++i) {
        std::uint64_t term = saturating_mul(saturating_pow(g, static_cast<std::size_t>(n - 1 - i)),
                                            saturating_pow(g, static_cast<std::size_t>(n)));
        candidates = term > kSaturated - candidates ? kSaturated : candidates + term;
    }
    if (candidates > budget) {
        throw ResourceError("grid search needs " + std::to_string(candidates) + " candidate pairs, budget is " +
                            std::to_string(budget));
    }
    if (values.empty()) return std::nullopt;

    // Scale every value by the common denominator L so the search runs on
    // integers: t_i s_j + t_j s_i = L^2 q_ij.
    Integer common = 1;
    for (const auto& v : values) common = lcm(common, Integer(v.get_den()));
    constexpr long kLimit = 1L << 30;
    auto to_int = [&](const Rational& r) -> std::optional<long> {
        Rational scaled = r * Rational(common);
        if (scaled.get_den() != 1 || abs(scaled.get_num()) > kLimit) return std::nullopt;
        return scaled.get_num().get_si();
    };
    std::vector<long> scaled;
    for (const auto& v : values) {
        auto s = to_int(v);
        if (!s) throw ResourceError("grid values too large for the integer search");
        scaled.push_back(*s);
    }
    const long one = common.get_si();
    if (common > kLimit) throw ResourceError("grid denominators too large for the integer search");

    std::vector<std::vector<long>> target(static_cast<std::size_t>(n), std::vector<long>(static_cast<std::size_t>(n), 0));
    for (const auto& [m, c] : p.terms()) {
        Rational t = c.rational_part() * Rational(common * common);
        if (t.get_den() != 1 || !t.get_num().fits_slong_p()) return std::nullopt;
        auto ix = m.indices();
        target[ix[0] - 1][ix[1] - 1] = t.get_num().get_si();
    }

    std::vector<long> t(static_cast<std::size_t>(n), 0);
    std::vector<std::size_t> t_digit(static_cast<std::size_t>(n), 0);
    std::vector<long> s(static_cast<std::size_t>(n), 0);
    std::vector<std::size_t> s_digit(static_cast<std::size_t>(n), 0);

    // Depth-first over s, checking each pair constraint once both ends are set.
    std::function<bool(int)> search_s = [&](int j) -> bool {
        if (j == n) return true;
        for (std::size_t k = 0; k < scaled.size(); ++k) {
            s[j] = scaled[k];
            s_digit[j] = k;
            bool ok = true;
            for (int i = 0; i < j && ok; ++i) ok = t[i] * s[j] + t[j] * s[i] == target[i][j];
            if (ok && search_s(j + 1)) return true;
        }
        return false;
    };

    auto element_from = [&](const std::vector<long>& v) {
        Element::Terms terms;
        for (int k = 0; k < n; ++k) {
            if (v[k] != 0) terms.emplace(Monomial::generator(k + 1), Scalar(Rational(v[k]) / Rational(common)));
        }
        return Element(n, std::move(terms));
    };

    for (int lead = 0; lead < n; ++lead) {
        std::fill(t.begin(), t.end(), 0);
        t[lead] = one;
        const int free = n - 1 - lead;
        std::vector<std::size_t> digit(static_cast<std::size_t>(free), 0);
        while (true) {
            for (int k = 0; k < free; ++k) t[lead + 1 + k] = scaled[digit[k]];
            if (search_s(0)) {
                Element te = element_from(t);
                Element se = element_from(s);
                if (!(te * se == p)) throw std::logic_error("grid search produced an unverified pair");
                return std::pair{std::move(te), std::move(se)};
            }
            int k = 0;
            while (k < free && ++digit[k] == scaled.size()) digit[k++] = 0;
            if (k == free) break;
        }
    }
    return std::nullopt;
}

std::string ClassifierReport::to_text() const {
    std::ostringstream out;
    out << "instances: " << instances << '\n'
        << "prime: " << prime << '\n'
        << "decomposable: " << decomposable << " (grid witnesses: " << oracle_witnesses << ")\n"
        << "decomposable over extension: " << over_extension << '\n'
        << "discrepancies: " << discrepancies.size() << '\n';
    for (const auto& d : discrepancies) out << "  " << print(d.element) << ": " << to_string(d.verdict) << ", " << d.detail << '\n';
    return out.str();
}

std::string ClassifierReport::to_json_lines() const {
    std::string out;
    for (const auto& d : discrepancies) {
        nlohmann::ordered_json line;
        line["element"] = nlohmann::ordered_json::parse(to_json(d.element));
        line["verdict"] = to_string(d.verdict);
        line["detail"] = d.detail;
        out += line.dump() + "\n";
    }
    return out;
}

ClassifierReport exhaustive_classifier_check(const GridSpec& grid, std::vector<Rational> oracle_coefficients,
                                             std::uint64_t budget) {
    if (grid.n != 4 || grid.min_length != 2 || grid.max_length != 2) {
        throw ContractError("the classifier check runs on homogeneous degree-2 grids in P_4");
    }
    ClassifierReport report;
    if (grid.coefficients.empty()) return report;
    GridSpec instances = grid;
    instances.coefficients.emplace_back(0);
    instances.coefficients = sorted_unique(std::move(instances.coefficients));
    GridSpec oracle = grid;
    oracle.coefficients = sorted_unique(oracle_coefficients.empty() ? instances.coefficients : std::move(oracle_coefficients));

    instances.for_each([&](const Element& p) {
        if (p.is_zero()) return;
        ++report.instances;
        PrimalityVerdict verdict = is_prime(p);
        auto found = brute_force_factor_search(p, oracle, budget);
        auto flag = [&](std::string detail) { report.discrepancies.push_back({p, verdict.verdict, std::move(detail)}); };
        switch (verdict.verdict) {
            case Verdict::prime:
                ++report.prime;
                if (found) flag("grid factors " + print(found->first) + " * " + print(found->second));
                break;
            case Verdict::decomposable:
                ++report.decomposable;
                if (found) ++report.oracle_witnesses;
                if (!verdict.witness || !verify_factorization(p, *verdict.witness)) flag("witness does not verify");
                break;
            case Verdict::decomposable_over_extension:
                ++report.over_extension;
                if (found) flag("rational grid factors " + print(found->first) + " * " + print(found->second));
                if (!verdict.witness || !verify_factorization(p, *verdict.witness)) flag("witness does not verify");
                break;
            case Verdict::unsupported:
                flag("unsupported verdict");
                break;
        }
    });
    return report;
}

}  // namespace pimenov::testkit
