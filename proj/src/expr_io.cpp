#include "pimenov/expr_io.hpp"

#include <cctype>

#include <json.hpp>

#include "pimenov/errors.hpp"

namespace pimenov {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::string_view kIota = "\xCE\xB9";  // UTF-8 for ι

class Parser {
  public:
    Parser(std::string_view text, int n) : text_(text), n_(n) {}

    Element parse_element() {
        Element::Terms terms;
        skip_ws();
        if (at_end()) fail("expected a term");
        int sign = 1;
        if (peek() == '+' || peek() == '-') sign = take() == '-' ? -1 : 1;
        add_term(terms, sign);
        while (true) {
            skip_ws();
            if (at_end()) break;
            char c = peek();
            if (c != '+' && c != '-') fail("expected '+' or '-'");
            ++pos_;
            add_term(terms, c == '-' ? -1 : 1);
        }
        return Element(n_, std::move(terms));
    }

  private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }
    char take() { return text_[pos_++]; }
    bool starts_with(std::string_view token) const { return text_.substr(pos_).starts_with(token); }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    void expect(char c) {
        skip_ws();
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    bool at_generator() const { return peek() == 'i' || starts_with(kIota); }

    void add_term(Element::Terms& terms, int sign) {
        skip_ws();
        std::size_t start = pos_;
        Scalar coefficient = 1;
        std::optional<Monomial> mono = Monomial::unit();
        if (at_generator()) {
            mono = parse_monomial();
        } else {
            coefficient = parse_coefficient();
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                skip_ws();
                mono = parse_monomial();
            }
        }
        if (!mono) return;  // repeated generator: the term vanishes
        if (sign < 0) coefficient = -coefficient;
        try {
            terms[*mono] += coefficient;
        } catch (const FieldMismatchError& e) {
            throw ParseError(e.what(), start);
        }
    }

    Integer parse_integer() {
        skip_ws();
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected an integer");
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    Rational parse_rational() {
        Integer num = parse_integer();
        skip_ws();
        if (peek() != '/') return Rational(num);
        ++pos_;
        skip_ws();
        std::size_t den_pos = pos_;
        Integer den = parse_integer();
        if (sgn(den) == 0) throw ParseError("zero denominator", den_pos);
        Rational r(num, den);
        r.canonicalize();
        return r;
    }

    Scalar parse_coefficient() {
        skip_ws();
        if (peek() != '(') return Scalar(parse_rational());
        ++pos_;
        skip_ws();
        int sign = 1;
        if (peek() == '+' || peek() == '-') sign = take() == '-' ? -1 : 1;
        Scalar value = parse_quad_term(sign);
        while (true) {
            skip_ws();
            if (peek() != '+' && peek() != '-') break;
            sign = take() == '-' ? -1 : 1;
            value += parse_quad_term(sign);
        }
        expect(')');
        return value;
    }

    Scalar parse_quad_term(int sign) {
        skip_ws();
        std::size_t start = pos_;
        Scalar factor = 1;
        if (!starts_with("sqrt")) {
            factor = Scalar(parse_rational());
            skip_ws();
            if (peek() != '*') return sign < 0 ? -factor : factor;
            ++pos_;
            skip_ws();
        }
        if (!starts_with("sqrt")) fail("expected 'sqrt'");
        pos_ += 4;
        expect('(');
        Integer radicand = parse_integer();
        expect(')');
        try {
            Scalar value = factor * Scalar::sqrt(Rational(radicand));
            return sign < 0 ? -value : value;
        } catch (const Error& e) {
            throw ParseError(e.what(), start);
        }
    }

    // nullopt when a generator repeats (the monomial is zero).
    std::optional<Monomial> parse_monomial() {
        Monomial m;
        bool repeated = false;
        while (true) {
            skip_ws();
            std::size_t start = pos_;
            if (peek() == 'i') {
                ++pos_;
            } else if (starts_with(kIota)) {
                pos_ += kIota.size();
            } else {
                fail("expected a generator");
            }
            std::size_t digits = pos_;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
            if (digits == pos_) fail("expected a generator index");
            std::string_view index_text = text_.substr(digits, pos_ - digits);
            int k = index_text.size() > 3 ? kMaxGenerators + 1 : std::stoi(std::string(index_text));
            if (k < 1 || k > n_) {
                throw ParseError("generator index " + std::string(index_text) + " out of range 1.." + std::to_string(n_),
                                 start);
            }
            Monomial g = Monomial::generator(k);
            if (!m.disjoint(g)) repeated = true;
            m = m.united(g);
            skip_ws();
            if (peek() != '*') break;
            // Lookahead: '*' must be followed by another generator here.
            ++pos_;
        }
        if (repeated) return std::nullopt;
        return m;
    }

    std::string_view text_;
    int n_;
    std::size_t pos_ = 0;
};

void append_monomial(std::string& out, Monomial m, const PrintOptions& options) {
    out += to_string(m, options.unicode);
}

Rational parse_json_rational(const ordered_json& value, const char* what) {
    if (!value.is_string()) throw ParseError(std::string(what) + " must be a string \"a/b\"");
    const std::string& s = value.get_ref<const std::string&>();
    std::size_t i = 0;
    if (i < s.size() && s[i] == '-') ++i;
    std::size_t num_start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    bool ok = i > num_start;
    if (ok && i < s.size() && s[i] == '/') {
        std::size_t den_start = ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        ok = i > den_start && Integer(s.substr(den_start)) != 0;
    }
    if (!ok || i != s.size()) throw ParseError(std::string("malformed rational \"") + s + "\" in " + what);
    Rational r(s);
    r.canonicalize();
    return r;
}

Scalar parse_json_coefficient(const ordered_json& coef) {
    if (coef.is_string()) return Scalar(parse_json_rational(coef, "coef"));
    if (!coef.is_object() || coef.size() != 3 || !coef.contains("p") || !coef.contains("q") || !coef.contains("d")) {
        throw ParseError("coef must be \"a/b\" or {\"p\", \"q\", \"d\"}");
    }
    const auto& d = coef.at("d");
    if (!d.is_number_integer()) throw ParseError("radicand d must be an integer");
    Rational q = parse_json_rational(coef.at("q"), "q");
    if (sgn(q) == 0) throw ParseError("extension coefficient has zero radical part");
    try {
        return Scalar(parse_json_rational(coef.at("p"), "p"), q, d.get<std::int64_t>());
    } catch (const RangeError& e) {
        throw ParseError(e.what());
    }
}

}  // namespace

Element parse(std::string_view text, int n) {
    if (n < 1 || n > kMaxGenerators) {
        throw RangeError("generator count " + std::to_string(n) + " outside 1.." + std::to_string(kMaxGenerators));
    }
    return Parser(text, n).parse_element();
}

std::string print(const Element& p, PrintOptions options) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        if (c.is_rational()) {
            const Rational& value = c.rational_part();
            bool negative = sgn(value) < 0;
            if (first) {
                if (negative) out += "-";
            } else {
                out += negative ? " - " : " + ";
            }
            Rational magnitude = abs(value);
            if (m.empty()) {
                out += magnitude.get_str();
            } else {
                if (magnitude != 1) out += magnitude.get_str() + "*";
                append_monomial(out, m, options);
            }
        } else {
            if (!first) out += " + ";
            out += c.to_string();
            if (!m.empty()) {
                out += "*";
                append_monomial(out, m, options);
            }
        }
        first = false;
    }
    return out;
}

std::string to_json(const Element& p) {
    ordered_json doc;
    doc["n"] = p.n();
    auto terms = ordered_json::array();
    for (const auto& [m, c] : p.terms()) {
        ordered_json term;
        term["mono"] = m.indices();
        if (c.is_rational()) {
            term["coef"] = c.rational_part().get_str();
        } else {
            ordered_json coef;
            coef["p"] = c.rational_part().get_str();
            coef["q"] = c.radical_part().get_str();
            coef["d"] = *c.radicand();
            term["coef"] = std::move(coef);
        }
        terms.push_back(std::move(term));
    }
    doc["terms"] = std::move(terms);
    return doc.dump();
}

Element from_json(std::string_view text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte == 0 ? 0 : e.byte - 1);
    }
    if (!doc.is_object() || doc.size() != 2 || !doc.contains("n") || !doc.contains("terms")) {
        throw ParseError("element JSON must be an object with exactly \"n\" and \"terms\"");
    }
    const auto& n_value = doc.at("n");
    if (!n_value.is_number_integer()) throw ParseError("\"n\" must be an integer");
    auto n = n_value.get<std::int64_t>();
    if (n < 1 || n > kMaxGenerators) throw ParseError("\"n\" must lie in 1.." + std::to_string(kMaxGenerators));
    const auto& terms_value = doc.at("terms");
    if (!terms_value.is_array()) throw ParseError("\"terms\" must be an array");

    Element::Terms terms;
    for (const auto& term : terms_value) {
        if (!term.is_object() || term.size() != 2 || !term.contains("mono") || !term.contains("coef")) {
            throw ParseError("each term must be an object with exactly \"mono\" and \"coef\"");
        }
        const auto& mono = term.at("mono");
        if (!mono.is_array()) throw ParseError("\"mono\" must be an array of generator indices");
        Monomial m;
        std::int64_t previous = 0;
        for (const auto& index : mono) {
            if (!index.is_number_integer()) throw ParseError("generator indices must be integers");
            auto k = index.get<std::int64_t>();
            if (k < 1 || k > n) throw ParseError("generator index " + std::to_string(k) + " out of range");
            if (k <= previous) throw ParseError("generator indices must be strictly ascending");
            previous = k;
            m = m.united(Monomial::generator(static_cast<int>(k)));
        }
        Scalar c = parse_json_coefficient(term.at("coef"));
        if (c.is_zero()) throw ParseError("zero coefficient for monomial " + to_string(m));
        if (!terms.emplace(m, std::move(c)).second) throw ParseError("duplicate monomial " + to_string(m));
    }
    try {
        return Element(static_cast<int>(n), std::move(terms));
    } catch (const FieldMismatchError& e) {
        throw ParseError(e.what());
    }
}

}  // namespace pimenov
