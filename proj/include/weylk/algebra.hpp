#pragma once

#include <map>
#include <string>
#include <utility>

#include "weylk/gamma.hpp"
#include "weylk/numeric.hpp"
#include "weylk/signature.hpp"

namespace weylk {

/// Throws InvalidJIndex unless i satisfies the J-vector constraints of sig.
void validate_j_index(const Signature &sig, const IntVec &i);

/// Throws InvalidDerivIndex unless mu is in Z_+^ell.
void validate_deriv_index(const Signature &sig, const IntVec &mu);

/// One basis monomial x^{alpha,i} d^mu.
struct Monomial {
    GammaElement alpha;
    IntVec i;
    IntVec mu;

    bool is_identity() const {
        if (!alpha.is_zero())
            return false;
        for (auto e : i)
            if (e != 0)
                return false;
        for (auto e : mu)
            if (e != 0)
                return false;
        return true;
    }

    friend bool operator==(const Monomial &a, const Monomial &b) {
        return a.mu == b.mu && a.i == b.i && a.alpha == b.alpha;
    }
};

/// Canonical total order: mu under the level-first order, then i, then the
/// Gamma coefficient vector.  Used for term maps, printing and the pair
/// order in the coboundary systems.
struct MonomialLess {
    bool operator()(const Monomial &a, const Monomial &b) const {
        if (auto c = compare_order(a.mu, b.mu); c != 0)
            return c < 0;
        if (auto c = compare_order(a.i, b.i); c != 0)
            return c < 0;
        return a.alpha.coeffs() < b.alpha.coeffs();
    }
};

/// Validating constructor for monomials.
Monomial make_monomial(const Signature &sig, GammaElement alpha, IntVec i, IntVec mu);

/// d^{1_[p]} as a monomial (alpha = 0, i = 0).
Monomial deriv_monomial(const Signature &sig, std::size_t rank, std::size_t p);

/// t^{1_[p]} d^{1_[p]} as a monomial; requires p < prefix(3).
Monomial t_deriv_monomial(const Signature &sig, std::size_t rank, std::size_t p);

/// A finite linear combination of monomials.  Zero coefficients are never
/// stored, so structural equality is semantic equality.
class Element {
public:
    using TermMap = std::map<Monomial, Rational, MonomialLess>;

    explicit Element(Signature sig) : sig_(sig) {}

    static Element zero(const Signature &sig) { return Element(sig); }
    static Element monomial(const Signature &sig, Monomial m, Rational coeff = Rational(1));

    const Signature &signature() const { return sig_; }
    const TermMap &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Adds c * m, erasing the term if the total cancels.
    void add_term(const Monomial &m, const Rational &c);

    Element &operator+=(const Element &o);
    Element &operator-=(const Element &o);
    Element &operator*=(const Rational &c);

    friend Element operator+(Element a, const Element &b) { return a += b; }
    friend Element operator-(Element a, const Element &b) { return a -= b; }
    friend Element operator*(const Rational &c, Element a) { return a *= c; }

    friend bool operator==(const Element &a, const Element &b) {
        return a.sig_ == b.sig_ && a.terms_ == b.terms_;
    }

private:
    Signature sig_;
    TermMap terms_;
};

/// Down-grading action on one monomial: i_p x^{alpha, i - 1_[p]} d^mu.
/// Returns the zero element when i_p = 0 (the decremented index may leave
/// the J-vector lattice, so it is never constructed in that case).
Element apply_down(const Signature &sig, std::size_t p, const Monomial &m);

/// Grading action: alpha_q * m, the q-th ambient coordinate of alpha.
Element apply_up(const Signature &sig, std::size_t q, const Monomial &m);

/// The full derivation d_p, combining the down- and up-grading parts
/// according to which range p falls in; acts on the coefficient part of
/// each term and leaves d^mu untouched.
Element apply_partial(const Signature &sig, std::size_t p, const Element &e);

/// Iterated application d^lam; the individual derivations commute.
Element apply_deriv_power(const Signature &sig, const IntVec &lam, const Element &e);

/// Associative product: bilinear extension of
///   u d^mu * v d^nu = u sum_{lam <= mu} C(mu, lam) d^lam(v) d^{mu+nu-lam}.
Element mul(const Element &a, const Element &b);

/// Commutator mul(a, b) - mul(b, a).
Element bracket(const Element &a, const Element &b);

/// Product/bracket of single monomials, as elements.
Element mul_monomials(const Signature &sig, const Monomial &a, const Monomial &b);
Element bracket_monomials(const Signature &sig, const Monomial &a, const Monomial &b);

/// Canonical text forms.  A monomial prints as m[alpha;i;mu] with the
/// ambient alpha coordinates as rationals; an element prints its terms in
/// map order joined with " + " / " - ", or "0" when empty.  The expression
/// parser accepts exactly this grammar, so printing and parsing round-trip.
std::string print_monomial(const Monomial &m);
std::string print_element(const Element &e);

} // namespace weylk
