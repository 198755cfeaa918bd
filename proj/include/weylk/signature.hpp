#pragma once

#include <cstdint>

#include "weylk/errors.hpp"

namespace weylk {

/// Signature (l1, l2, l3, l4): how many derivations of each of the four
/// kinds (locally nilpotent / locally finite / not locally finite /
/// semisimple) the algebra carries.  All indices in this codebase are
/// 0-based; the p-th derivation acts according to which of the three
/// ranges below p falls in.
struct Signature {
    std::int64_t l1 = 0, l2 = 0, l3 = 0, l4 = 0;

    std::int64_t ell() const { return l1 + l2 + l3 + l4; }

    // Prefix sums l'_i and suffix sums l''_i.
    std::int64_t prefix(int i) const {
        switch (i) {
        case 1: return l1;
        case 2: return l1 + l2;
        case 3: return l1 + l2 + l3;
        case 4: return ell();
        default: throw Error("Signature::prefix: index out of range");
        }
    }
    std::int64_t suffix(int i) const {
        switch (i) {
        case 1: return ell();
        case 2: return l2 + l3 + l4;
        case 3: return l3 + l4;
        case 4: return l4;
        default: throw Error("Signature::suffix: index out of range");
        }
    }

    /// Down-grading part exists for coordinates p < prefix(3).
    bool has_down(std::int64_t p) const { return p >= 0 && p < prefix(3); }
    /// Grading part exists for coordinates p >= l1.
    bool has_up(std::int64_t p) const { return p >= l1 && p < ell(); }

    /// J-vector constraints: entries [0, prefix(2)) are >= 0, entries
    /// [prefix(2), prefix(3)) are unrestricted, entries [prefix(3), ell) are 0.
    bool j_nonnegative_at(std::int64_t p) const { return p < prefix(2); }
    bool j_zero_at(std::int64_t p) const { return p >= prefix(3); }

    friend bool operator==(const Signature &, const Signature &) = default;
};

/// Validates l_i >= 0 and ell > 0.
inline Signature make_signature(std::int64_t l1, std::int64_t l2, std::int64_t l3,
                                std::int64_t l4) {
    if (l1 < 0 || l2 < 0 || l3 < 0 || l4 < 0)
        throw ConfigError("signature entries must be nonnegative");
    if (l1 + l2 + l3 + l4 == 0)
        throw ConfigError("signature must have ell = l1+l2+l3+l4 > 0");
    return Signature{l1, l2, l3, l4};
}

} // namespace weylk
