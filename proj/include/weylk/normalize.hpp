#pragma once

#include <memory>

#include "weylk/cocycle.hpp"

namespace weylk {

/// Normal form of a 2-cocycle psi: a lazily computed linear functional f
/// such that phi(u, v) = psi(u, v) - f([u, v]) vanishes whenever the first
/// argument is d_p (any p) or t^{1_[p]} d_p (p with a down-grading part).
///
/// f is defined by a case split on the monomial: recursion on |i_q| at the
/// first coordinate q with alpha_q != 0; a single evaluation at the first
/// r with i_r != 0 when alpha = 0; and, for pure d^mu, either one psi value
/// (when some down-grading coordinate exists) or a recursion on mu in the
/// level-first order, driven by the fixed tau.
///
/// Values are memoized; recomputation yields identical results.  Instances
/// are not synchronized: confine each one to a single worker, or share only
/// after all needed values are computed.
///
/// If a postcondition pair evaluates to a nonzero value, psi was not a
/// 2-cocycle and NonCocycleInput is raised at that evaluation.
class NormalizedCocycle {
public:
    /// Requires tau_p != 0 for every p in [l1, ell); throws InvalidTau.
    NormalizedCocycle(Signature sig, BilinearForm psi, GammaElement tau);

    const Signature &signature() const;
    const BilinearForm &source() const;
    const GammaElement &tau() const;

    /// The functional f on basis monomials and its linear extension.
    Rational f_value(const Monomial &m) const;
    Rational f_value(const Element &e) const;

    /// phi(u, v) = psi(u, v) - f([u, v]); checks the vanishing
    /// postcondition whenever u is one of the distinguished monomials.
    Rational phi(const Monomial &u, const Monomial &v) const;
    Rational phi(const Element &a, const Element &b) const;

    /// The normalized form as a shareable evaluator (keeps this object's
    /// state alive through a shared handle).
    BilinearForm form() const;

    std::size_t memo_size() const;

private:
    struct State;
    std::shared_ptr<State> st_;
};

/// Convenience spelling matching the operation name.
inline NormalizedCocycle normalize(const Signature &sig, BilinearForm psi, GammaElement tau) {
    return NormalizedCocycle(sig, std::move(psi), std::move(tau));
}

} // namespace weylk
