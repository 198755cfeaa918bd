#pragma once

#include <random>

#include "weylk/algebra.hpp"

namespace weylk {

/// Finite truncation of the monomial basis: Gamma coefficients range over
/// [-gammaCoeffBound, gammaCoeffBound]^rank, each i_p over the J-lattice
/// slice with |i_p| <= jBound, and each mu_p over [0, muBound].
struct Box {
    std::int64_t gammaCoeffBound = 0;
    std::int64_t jBound = 0;
    std::int64_t muBound = 0;
};

/// Number of monomials the box contains.
std::uint64_t box_size(const Box &box, const Signature &sig, std::size_t rank);

/// Deterministic enumeration: the Gamma coefficients step slowest (first
/// coordinate outermost, ascending), then the i entries, then the mu
/// entries, each coordinate ascending through its range.
std::vector<Monomial> enumerate_box(const Box &box, const GammaLattice &lattice);

/// Deterministic random stream.  mt19937_64 is fully specified by the
/// standard and all derived draws below avoid the library distributions,
/// whose outputs are implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t raw() { return eng_(); }

    /// Uniform in [lo, hi], inclusive.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);

    /// Rational with numerator in [-bound, bound] and denominator in
    /// [1, den_bound]; never zero when nonzero = true.
    Rational rational(std::int64_t bound, std::int64_t den_bound, bool nonzero);

private:
    std::mt19937_64 eng_;
};

Monomial random_monomial(const Box &box, const GammaLattice &lattice, Rng &rng);

/// Random element with 1..max_terms distinct monomials and nonzero small
/// rational coefficients.
Element random_element(const Box &box, const GammaLattice &lattice, Rng &rng, int max_terms);

/// Random finite linear-functional support drawn from the box.
std::map<Monomial, Rational, MonomialLess>
random_functional_values(const Box &box, const GammaLattice &lattice, Rng &rng, int entries);

} // namespace weylk
