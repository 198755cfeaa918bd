#pragma once

#include <functional>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "weylk/algebra.hpp"
#include "weylk/report.hpp"

namespace weylk {

/// A candidate 2-cocycle: an evaluator on monomial pairs plus a kind tag.
/// Evaluation on elements is the bilinear extension over terms; evaluators
/// are pure and safe to share across workers.
class BilinearForm {
public:
    using Evaluator = std::function<Rational(const Monomial &, const Monomial &)>;

    BilinearForm() = default;
    BilinearForm(std::string kind, Evaluator eval)
        : kind_(std::move(kind)), eval_(std::move(eval)) {}

    const std::string &kind() const { return kind_; }

    Rational operator()(const Monomial &u, const Monomial &v) const { return eval_(u, v); }

    Rational operator()(const Element &a, const Element &b) const {
        Rational r = 0;
        for (const auto &[u, cu] : a.terms())
            for (const auto &[v, cv] : b.terms())
                r += cu * cv * eval_(u, v);
        return r;
    }

    Rational operator()(const Element &a, const Monomial &v) const {
        Rational r = 0;
        for (const auto &[u, cu] : a.terms())
            r += cu * eval_(u, v);
        return r;
    }

private:
    std::string kind_;
    Evaluator eval_;
};

/// A linear functional given by finitely many values on monomials
/// (default 0 elsewhere), extended linearly to elements.
class LinearFunctional {
public:
    using ValueMap = std::map<Monomial, Rational, MonomialLess>;

    LinearFunctional() = default;
    explicit LinearFunctional(ValueMap values) : values_(std::move(values)) {}

    void set(const Monomial &m, Rational v) { values_[m] = std::move(v); }
    const ValueMap &values() const { return values_; }

    Rational operator()(const Monomial &m) const {
        auto it = values_.find(m);
        return it == values_.end() ? Rational(0) : it->second;
    }

    Rational operator()(const Element &e) const {
        Rational r = 0;
        for (const auto &[m, c] : e.terms())
            r += c * (*this)(m);
        return r;
    }

private:
    ValueMap values_;
};

/// phi_0 on signature (0,0,0,1): the nontrivial 2-cocycle of the algebra of
/// differential operators.  On falling-factorial powers of the derivation
/// its value is delta_{alpha+beta,0} (-1)^mu mu! nu! C(alpha+mu, mu+nu+1);
/// on the plain power basis this becomes the Stirling transform of that
/// kernel, which for integer alpha equals sum_{j=1}^alpha (-j)^mu
/// (alpha-j)^nu.  Polynomial in alpha, so it covers every rational Gamma.
Rational phi0_eval(const Signature &sig, const Monomial &m1, const Monomial &m2);
BilinearForm phi0_form(const Signature &sig);

/// phi_gamma on signature (0,0,1,0):
///   delta_{alpha+beta,gamma} (-1)^mu mu! nu!
///     sum_{s=0}^{mu+nu+1} C(i,s) powdiv(alpha, mu+nu+1-s) powdiv(gamma, s-i-j-1).
/// The gamma = 0 reading delta_{i+j,s-1} falls out of powdiv's conventions.
Rational phi_gamma_eval(const Signature &sig, const GammaElement &gamma, const Monomial &m1,
                        const Monomial &m2);
BilinearForm phi_gamma_form(const Signature &sig, const GammaElement &gamma);

/// sum_gamma b_gamma phi_gamma; on any monomial pair at most the single
/// gamma = alpha + beta contributes.
using GammaCoeffMap = std::map<GammaElement, Rational, GammaElementLess>;
BilinearForm combine_cocycles(const Signature &sig, GammaCoeffMap coeffs);

/// psi_f(a, b) = f([a, b]).
Rational coboundary_eval(const Signature &sig, const LinearFunctional &f, const Element &a,
                         const Element &b);
BilinearForm coboundary_form(const Signature &sig, LinearFunctional f);

/// Pointwise sum and scalar multiple of forms.
BilinearForm sum_forms(BilinearForm a, BilinearForm b);
BilinearForm scale_form(Rational c, BilinearForm a);
BilinearForm zero_form();

/// Reports every pair with form(u,v) + form(v,u) != 0.
VerificationReport check_antisymmetry(const BilinearForm &form,
                                      std::span<const std::pair<Monomial, Monomial>> pairs);

/// Reports every triple violating the cyclic identity
///   form([v1,v2],v3) + form([v2,v3],v1) + form([v3,v1],v2) = 0,
/// with brackets expanded in the algebra and the form extended bilinearly.
VerificationReport
check_cocycle_identity(const Signature &sig, const BilinearForm &form,
                       std::span<const std::array<Monomial, 3>> triples);

/// Brackets of all unordered pairs of a monomial list, computed once and
/// shared by the triple checkers ([b,a] is served as -[a,b]).
class BracketCache {
public:
    BracketCache(const Signature &sig, std::span<const Monomial> box, unsigned workers = 1);

    std::size_t size() const { return n_; }
    /// Pointer to [min,max] bracket plus whether the caller asked for the
    /// swapped order.
    std::pair<const Element *, bool> ref(std::size_t a, std::size_t b) const {
        bool flip = a > b;
        if (flip)
            std::swap(a, b);
        // row a starts after the a previous rows of lengths n, n-1, ...
        return {&cache_[a * n_ - a * (a - 1) / 2 + (b - a)], flip};
    }

private:
    std::size_t n_;
    std::vector<Element> cache_;
};

/// Streaming variants over all pairs/triples of a monomial list; brackets
/// are cached per ordered pair and independent chunks fan out to workers.
VerificationReport check_antisymmetry_box(const BilinearForm &form,
                                          std::span<const Monomial> box, unsigned workers = 1);
VerificationReport check_cocycle_identity_box(const Signature &sig, const BilinearForm &form,
                                              std::span<const Monomial> box,
                                              unsigned workers = 1,
                                              const BracketCache *cache = nullptr);

/// Verifies sum_q (-1)^q C(k+1-s, nu-q) C(lam+q, q) = C(mu+nu-s, nu) with
/// k = mu+nu+lam, for 0 <= s <= k+1.
struct BinomialIdentityResult {
    bool pass;
    Rational lhs;
    Rational rhs;
};
BinomialIdentityResult check_binomial_identity(std::int64_t mu, std::int64_t nu,
                                               std::int64_t lam, std::int64_t s);

} // namespace weylk
