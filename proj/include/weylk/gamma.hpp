#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "weylk/numeric.hpp"
#include "weylk/signature.hpp"

namespace weylk {

class GammaLattice;

/// An element of the free abelian group Gamma, held as its integer
/// coefficient vector over the lattice generators plus the derived
/// embedding into Q^ell.  Equality is coefficient-vector equality, which
/// coincides with embedding equality because generators are independent.
class GammaElement {
public:
    GammaElement() = default;
    GammaElement(IntVec coeffs, RatVec embedding)
        : coeffs_(std::move(coeffs)), embed_(std::move(embedding)) {}

    static GammaElement zero(std::size_t rank, std::size_t ell) {
        return GammaElement(IntVec(rank, 0), RatVec(ell, Rational(0)));
    }

    const IntVec &coeffs() const { return coeffs_; }
    const RatVec &embedding() const { return embed_; }
    /// q-th ambient coordinate alpha_q.
    const Rational &embed(std::size_t q) const { return embed_[q]; }
    std::size_t rank() const { return coeffs_.size(); }

    bool is_zero() const {
        for (auto c : coeffs_)
            if (c != 0)
                return false;
        return true;
    }

    GammaElement operator+(const GammaElement &o) const { return combined(o, +1); }
    GammaElement operator-(const GammaElement &o) const { return combined(o, -1); }
    GammaElement operator-() const {
        GammaElement r = *this;
        for (auto &c : r.coeffs_)
            c = -c;
        for (auto &e : r.embed_)
            e = -e;
        return r;
    }

    friend bool operator==(const GammaElement &a, const GammaElement &b) {
        return a.coeffs_ == b.coeffs_;
    }

private:
    GammaElement combined(const GammaElement &o, int sign) const {
        if (coeffs_.size() != o.coeffs_.size() || embed_.size() != o.embed_.size())
            throw DimensionMismatch("GammaElement: mixing elements of different lattices");
        GammaElement r = *this;
        for (std::size_t k = 0; k < coeffs_.size(); ++k)
            r.coeffs_[k] += sign * o.coeffs_[k];
        for (std::size_t q = 0; q < embed_.size(); ++q)
            r.embed_[q] += sign * o.embed_[q];
        return r;
    }

    IntVec coeffs_;
    RatVec embed_;
};

/// Lexicographic order on coefficient vectors; used wherever GammaElements
/// key a map.
struct GammaElementLess {
    bool operator()(const GammaElement &a, const GammaElement &b) const {
        return a.coeffs() < b.coeffs();
    }
};

/// The group Gamma as a free abelian group on user-supplied generators in
/// Q^ell.  Validation enforces, in order: the zero prefix on the first l1
/// coordinates, Z-linear independence, and nondegeneracy (the projections
/// to the last ell - l1 coordinates must span that space over Q).
class GammaLattice {
public:
    GammaLattice(Signature sig, std::vector<RatVec> generators);

    const Signature &signature() const { return sig_; }
    std::size_t rank() const { return gens_.size(); }
    const RatVec &generator(std::size_t k) const { return gens_[k]; }

    /// Element with the given generator coefficients.
    GammaElement element(const IntVec &coeffs) const;
    GammaElement zero() const { return GammaElement::zero(rank(), sig_.ell()); }

    /// Integer coefficients n with sum n_k g_k = vec, or nullopt when vec is
    /// not in the lattice (no solution, or a non-integral one).
    std::optional<IntVec> membership(const RatVec &vec) const;

private:
    Signature sig_;
    std::vector<RatVec> gens_;
};

/// Validates generators against the signature; throws ZeroPrefixViolation,
/// DependentGenerators or DegenerateLattice.
inline std::shared_ptr<const GammaLattice> lattice_validate(Signature sig,
                                                            std::vector<RatVec> generators) {
    return std::make_shared<const GammaLattice>(sig, std::move(generators));
}

} // namespace weylk
