// Command-line front end for Pimenov algebra computations.
//
// Exit codes: 0 success, 1 mathematical negative, 2 usage or parse error,
// 3 unsupported.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pimenov/errors.hpp"
#include "pimenov/expr_io.hpp"
#include "pimenov/factorization.hpp"
#include "pimenov/inversion.hpp"
#include "pimenov/testkit.hpp"

namespace {

using namespace pimenov;
using ordered_json = nlohmann::ordered_json;

enum Exit { kOk = 0, kNegative = 1, kUsage = 2, kUnsupported = 3 };

struct Options {
    int n = 0;
    bool json = false;
    bool unicode = false;
    std::vector<std::string> expressions;
    std::string file;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string show(const Element& p, const Options& o) { return print(p, PrintOptions{o.unicode}); }

ordered_json element_json(const Element& p) { return ordered_json::parse(to_json(p)); }

Element read_element(const std::string& text, const Options& o) {
    std::size_t first = text.find_first_not_of(" \t");
    if (first != std::string::npos && text[first] == '{') {
        Element p = from_json(text);
        if (p.n() != o.n) {
            throw UsageError("JSON element has n = " + std::to_string(p.n()) + " but -n is " + std::to_string(o.n));
        }
        return p;
    }
    return parse(text, o.n);
}

std::vector<Element> inputs(const Options& o) {
    std::vector<std::string> texts = o.expressions;
    if (!o.file.empty()) {
        std::ifstream in(o.file);
        if (!in) throw UsageError("cannot read " + o.file);
        for (std::string line; std::getline(in, line);) {
            if (line.find_first_not_of(" \t\r") != std::string::npos) texts.push_back(line);
        }
    }
    if (texts.empty()) throw UsageError("no input expressions");
    std::vector<Element> out;
    for (const auto& t : texts) {
        try {
            out.push_back(read_element(t, o));
        } catch (const ParseError& e) {
            throw ParseError(std::string(e.what()) + " in \"" + t + "\"");
        }
    }
    return out;
}

std::string field_name(const std::optional<std::int64_t>& radicand) {
    return radicand ? "sqrt(" + std::to_string(*radicand) + ")" : "rational";
}

std::string product_text(const std::vector<Element>& factors, const Options& o) {
    std::string out;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i > 0) out += " * ";
        out += "(" + show(factors[i], o) + ")";
    }
    return out;
}

ordered_json factors_json(const FactorizationResult& f) {
    ordered_json doc;
    auto list = ordered_json::array();
    for (const auto& e : f.factors) list.push_back(element_json(e));
    doc["factors"] = std::move(list);
    doc["field"] = field_name(f.radicand);
    doc["verified"] = f.verified;
    doc["prime"] = f.input_prime;
    return doc;
}

int run_invert(const Options& o) {
    for (const auto& p : inputs(o)) {
        try {
            Element inv = invert(p);
            std::cout << (o.json ? element_json(inv).dump() : show(inv, o)) << '\n';
        } catch (const NotInvertibleError& e) {
            std::cerr << e.what() << '\n';
            return kNegative;
        }
    }
    return kOk;
}

int run_mul(const Options& o) {
    auto elements = inputs(o);
    Element product = elements.front();
    for (std::size_t i = 1; i < elements.size(); ++i) product = product * elements[i];
    std::cout << (o.json ? element_json(product).dump() : show(product, o)) << '\n';
    return kOk;
}

int run_normalize(const Options& o) {
    for (const auto& p : inputs(o)) std::cout << (o.json ? element_json(p).dump() : show(p, o)) << '\n';
    return kOk;
}

int run_divide(const Options& o) {
    auto elements = inputs(o);
    if (elements.size() != 2) throw UsageError("divide takes exactly two expressions: a b (solves a*x = b)");
    DivisionSolution sol = solve_division(elements[0], elements[1]);
    if (o.json) {
        ordered_json doc;
        doc["status"] = to_string(sol.status);
        doc["particular"] = sol.particular ? element_json(*sol.particular) : ordered_json(nullptr);
        auto kernel = ordered_json::array();
        for (const auto& k : sol.kernel_basis) kernel.push_back(element_json(k));
        doc["kernel"] = std::move(kernel);
        doc["rank"] = sol.rank;
        doc["solutions_invertible"] =
            sol.solutions_invertible ? ordered_json(*sol.solutions_invertible) : ordered_json(nullptr);
        std::cout << doc.dump() << '\n';
    } else if (sol.status == DivisionStatus::none) {
        std::cout << "no solution\n";
    } else {
        std::cout << "status: " << to_string(sol.status) << '\n';
        std::cout << "particular: " << show(*sol.particular, o) << '\n';
        for (const auto& k : sol.kernel_basis) std::cout << "kernel: " << show(k, o) << '\n';
        if (sol.solutions_invertible) {
            std::cout << "solutions invertible: " << (*sol.solutions_invertible ? "yes" : "no") << '\n';
        } else {
            std::cout << "solutions invertible: mixed\n";
        }
    }
    return sol.status == DivisionStatus::none ? kNegative : kOk;
}

// Zero and invertible inputs have no factorization; report them as negatives.
bool reject_trivial(const Element& p) {
    if (p.is_zero()) {
        std::cerr << "zero element: primality and factorization are undefined\n";
        return true;
    }
    if (is_invertible(p)) {
        std::cerr << "invertible element: primality and factorization are undefined\n";
        return true;
    }
    return false;
}

int run_factor(const Options& o) {
    for (const auto& p : inputs(o)) {
        if (reject_trivial(p)) return kNegative;
        FactorizationResult f = factor(p);
        if (o.json) {
            std::cout << factors_json(f).dump() << '\n';
            continue;
        }
        std::cout << product_text(f.factors, o) << '\n';
        std::cout << "field: " << field_name(f.radicand) << '\n';
        if (f.input_prime) std::cout << "input is prime\n";
    }
    return kOk;
}

int run_prime(const Options& o) {
    int code = kOk;
    for (const auto& p : inputs(o)) {
        if (reject_trivial(p)) return kNegative;
        PrimalityVerdict v = is_prime(p);
        if (o.json) {
            ordered_json doc;
            doc["verdict"] = to_string(v.verdict);
            doc["pattern"] = v.pattern ? ordered_json(to_string(*v.pattern)) : ordered_json(nullptr);
            doc["reason"] = v.reason;
            doc["witness"] = v.witness ? factors_json(*v.witness) : ordered_json(nullptr);
            std::cout << doc.dump() << '\n';
        } else {
            std::cout << to_string(v.verdict) << " (" << v.reason << ")\n";
            if (v.witness) {
                std::cout << "witness: " << product_text(v.witness->factors, o) << '\n';
                std::cout << "field: " << field_name(v.witness->radicand) << '\n';
            }
        }
        if (v.verdict == Verdict::unsupported) code = kUnsupported;
    }
    return code;
}

std::vector<Rational> parse_grid(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream in(text);
    for (std::string item; std::getline(in, item, ',');) {
        Element c = parse(item, 1);
        if (c.is_zero()) {
            out.emplace_back(0);
        } else if (c.terms().size() == 1 && c.terms().begin()->first.empty()) {
            out.push_back(c.terms().begin()->second.as_rational());
        } else {
            throw UsageError("grid entries must be rational numbers: \"" + item + "\"");
        }
    }
    return out;
}

int run_check(const Options& o, const std::string& grid, const std::string& oracle_grid, std::uint64_t budget) {
    if (o.n != 4) throw UsageError("check runs on P_4; pass -n 4");
    testkit::GridSpec spec = testkit::GridSpec::homogeneous(parse_grid(grid), 4, 2);
    auto report = testkit::exhaustive_classifier_check(spec, oracle_grid.empty() ? std::vector<Rational>{}
                                                                                 : parse_grid(oracle_grid),
                                                       budget);
    std::cout << (o.json ? report.to_json_lines() : report.to_text());
    return report.discrepancies.empty() ? kOk : kNegative;
}

int run_random(const Options& o, std::uint64_t seed, const std::string& profile_text, int count) {
    auto profile = testkit::parse_profile(profile_text);
    if (!profile) throw UsageError("unknown profile \"" + profile_text + "\"");
    for (int i = 0; i < count; ++i) {
        Element p = testkit::random_element(o.n, seed + static_cast<std::uint64_t>(i), *profile);
        std::cout << (o.json ? element_json(p).dump() : show(p, o)) << '\n';
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact arithmetic, inversion, division and factorization in Pimenov algebras P_n"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub, bool takes_expressions) {
        sub->add_option("-n", o.n, "number of generators")->required()->check(CLI::Range(1, kMaxGenerators));
        sub->add_flag("--json", o.json, "JSON output");
        sub->add_flag("--unicode", o.unicode, "print generators as ι1, ι2, ...");
        if (takes_expressions) {
            sub->add_option("expressions", o.expressions, "element expressions (text or JSON)");
            sub->add_option("-f,--file", o.file, "read one expression per line");
        }
    };

    auto* invert_cmd = app.add_subcommand("invert", "inverse of each element");
    auto* mul_cmd = app.add_subcommand("mul", "product of all elements");
    auto* divide_cmd = app.add_subcommand("divide", "solve a*x = b for x");
    auto* factor_cmd = app.add_subcommand("factor", "prime factorization");
    auto* prime_cmd = app.add_subcommand("prime", "primality verdict");
    auto* normalize_cmd = app.add_subcommand("normalize", "canonical form");
    for (auto* sub : {invert_cmd, mul_cmd, divide_cmd, factor_cmd, prime_cmd, normalize_cmd}) add_common(sub, true);

    std::string grid;
    std::string oracle_grid;
    std::uint64_t budget = testkit::kDefaultSearchBudget;
    auto* check_cmd = app.add_subcommand("check", "cross-check the classifier against a grid search in P_4");
    add_common(check_cmd, false);
    check_cmd->add_option("--grid", grid, "comma-separated instance coefficients, e.g. -1,0,1")->required();
    check_cmd->add_option("--oracle-grid", oracle_grid, "comma-separated search coefficients");
    check_cmd->add_option("--budget", budget, "maximum candidate pairs per instance");

    std::uint64_t seed = 1;
    std::string profile = "invertible";
    int count = 1;
    auto* random_cmd = app.add_subcommand("random", "seeded random elements");
    add_common(random_cmd, false);
    random_cmd->add_option("--seed", seed, "random seed");
    random_cmd->add_option("--profile", profile, "invertible | non-invertible | homogeneous:T");
    random_cmd->add_option("--count", count, "number of elements")->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n';
        return kUsage;
    }

    try {
        if (*invert_cmd) return run_invert(o);
        if (*mul_cmd) return run_mul(o);
        if (*divide_cmd) return run_divide(o);
        if (*factor_cmd) return run_factor(o);
        if (*prime_cmd) return run_prime(o);
        if (*normalize_cmd) return run_normalize(o);
        if (*check_cmd) return run_check(o, grid, oracle_grid, budget);
        if (*random_cmd) return run_random(o, seed, profile, count);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kUsage;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const DimensionError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const RangeError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const UnsupportedError& e) {
        std::cerr << "unsupported: " << e.what() << '\n';
        return kUnsupported;
    } catch (const ResourceError& e) {
        std::cerr << "unsupported: " << e.what() << '\n';
        return kUnsupported;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kNegative;
    }
    return kUsage;
}
