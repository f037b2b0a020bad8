#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace pimenov {

/// Largest supported generator count.
inline constexpr int kMaxGenerators = 24;

/// Square-free product of generators, stored as a bitset: bit k-1 set means
/// iota_k is a factor. The empty set is the unit monomial.
struct Monomial {
    std::uint32_t bits = 0;

    static Monomial unit() { return {}; }
    static Monomial generator(int k) { return {std::uint32_t{1} << (k - 1)}; }
    /// 1-based indices; repeats collapse (use disjoint() to detect them).
    static Monomial of(std::initializer_list<int> indices) {
        Monomial m;
        for (int k : indices) m.bits |= std::uint32_t{1} << (k - 1);
        return m;
    }
    /// iota_1 ... iota_n
    static Monomial top(int n) { return {n >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1}; }

    int length() const { return std::popcount(bits); }
    bool empty() const { return bits == 0; }
    bool contains(int k) const { return (bits >> (k - 1)) & 1U; }
    /// Highest generator index present, 0 for the unit monomial.
    int max_index() const { return 32 - std::countl_zero(bits); }
    bool disjoint(Monomial other) const { return (bits & other.bits) == 0; }
    Monomial united(Monomial other) const { return {bits | other.bits}; }

    /// Ascending 1-based generator indices.
    std::vector<int> indices() const {
        std::vector<int> out;
        for (std::uint32_t b = bits; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
        return out;
    }

    friend bool operator==(Monomial, Monomial) = default;
};

/// Canonical monomial order: ascending length, then ascending lexicographic
/// order of the index sequence.
struct CanonicalOrder {
    bool operator()(Monomial a, Monomial b) const {
        int la = a.length();
        int lb = b.length();
        if (la != lb) return la < lb;
        std::uint32_t diff = a.bits ^ b.bits;
        // Both index sequences agree below the lowest differing generator; the
        // sequence containing it is the lexicographically smaller one.
        return diff != 0 && (a.bits & (diff & (~diff + 1))) != 0;
    }
};

/// All 2^n monomials of P_n in canonical order.
std::vector<Monomial> canonical_monomials(int n);

/// "i1*i2" (or "ι1*ι2" when unicode is set); "1" for the unit monomial.
std::string to_string(Monomial m, bool unicode = false);

}  // namespace pimenov
