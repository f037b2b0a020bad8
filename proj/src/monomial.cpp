#include "pimenov/monomial.hpp"

#include <algorithm>

#include "pimenov/errors.hpp"

namespace pimenov {

std::vector<Monomial> canonical_monomials(int n) {
    if (n < 0 || n > kMaxGenerators) {
        throw RangeError("generator count " + std::to_string(n) + " outside 0.." + std::to_string(kMaxGenerators));
    }
    std::vector<Monomial> out(std::size_t{1} << n);
    for (std::uint32_t bits = 0; bits < out.size(); ++bits) out[bits] = Monomial{bits};
    std::sort(out.begin(), out.end(), CanonicalOrder{});
    return out;
}

std::string to_string(Monomial m, bool unicode) {
    if (m.empty()) return "1";
    std::string out;
    for (int k : m.indices()) {
        if (!out.empty()) out += '*';
        out += unicode ? "ι" : "i";
        out += std::to_string(k);
    }
    return out;
}

}  // namespace pimenov
