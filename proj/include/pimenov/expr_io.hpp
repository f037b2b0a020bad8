#pragma once

#include <string>
#include <string_view>

#include "pimenov/element.hpp"

namespace pimenov {

struct PrintOptions {
    /// Spell generators as ι1, ι2, ... instead of i1, i2, ...
    bool unicode = false;
};

/// Parses the element text grammar:
///
///     element := [sign] term { sign term }
///     term    := coef [ '*' mono ] | mono
///     coef    := integer [ '/' integer ] | '(' quad ')'
///     quad    := [sign] qterm { sign qterm }
///     qterm   := rational | [ rational '*' ] 'sqrt' '(' integer ')'
///     mono    := gen { '*' gen }
///     gen     := ('i' | 'ι') integer
///
/// Whitespace between tokens is ignored. A monomial that repeats a generator is
/// zero. Throws ParseError (with a byte offset) on malformed text or a
/// generator index outside 1..n.
Element parse(std::string_view text, int n);

/// Canonical text: terms in canonical monomial order, separated by " + " or
/// " - ", unit coefficients omitted. The zero element prints as "0".
std::string print(const Element& p, PrintOptions options = {});

/// {"n": int, "terms": [{"mono": [int...], "coef": "a/b" | {"p","q","d"}}...]}
std::string to_json(const Element& p);

/// Inverse of to_json. Rejects malformed documents, out-of-range or
/// non-ascending generator lists, duplicate monomials and zero coefficients.
Element from_json(std::string_view text);

}  // namespace pimenov
