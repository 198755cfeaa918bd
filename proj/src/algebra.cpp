#include "weylk/algebra.hpp"

namespace weylk {

void validate_j_index(const Signature &sig, const IntVec &i) {
    if (i.size() != static_cast<std::size_t>(sig.ell()))
        throw InvalidJIndex("J-index has length " + std::to_string(i.size()) + ", expected " +
                            std::to_string(sig.ell()));
    for (std::size_t p = 0; p < i.size(); ++p) {
        auto sp = static_cast<std::int64_t>(p);
        if (sig.j_nonnegative_at(sp) && i[p] < 0)
            throw InvalidJIndex("J-index entry " + std::to_string(p) + " must be nonnegative");
        if (sig.j_zero_at(sp) && i[p] != 0)
            throw InvalidJIndex("J-index entry " + std::to_string(p) + " must be zero");
    }
}

void validate_deriv_index(const Signature &sig, const IntVec &mu) {
    if (mu.size() != static_cast<std::size_t>(sig.ell()))
        throw InvalidDerivIndex("derivation index has length " + std::to_string(mu.size()) +
                                ", expected " + std::to_string(sig.ell()));
    for (std::size_t p = 0; p < mu.size(); ++p)
        if (mu[p] < 0)
            throw InvalidDerivIndex("derivation index entry " + std::to_string(p) +
                                    " must be nonnegative");
}

Monomial make_monomial(const Signature &sig, GammaElement alpha, IntVec i, IntVec mu) {
    if (alpha.embedding().size() != static_cast<std::size_t>(sig.ell()))
        throw DimensionMismatch("monomial alpha has wrong ambient dimension");
    validate_j_index(sig, i);
    validate_deriv_index(sig, mu);
    return Monomial{std::move(alpha), std::move(i), std::move(mu)};
}

Monomial deriv_monomial(const Signature &sig, std::size_t rank, std::size_t p) {
    auto ell = static_cast<std::size_t>(sig.ell());
    if (p >= ell)
        throw DimensionMismatch("derivation index out of range");
    IntVec mu(ell, 0);
    mu[p] = 1;
    return Monomial{GammaElement::zero(rank, ell), IntVec(ell, 0), std::move(mu)};
}

Monomial t_deriv_monomial(const Signature &sig, std::size_t rank, std::size_t p) {
    auto ell = static_cast<std::size_t>(sig.ell());
    if (!sig.has_down(static_cast<std::int64_t>(p)))
        throw DimensionMismatch("t^[p] d_p needs p < prefix(3)");
    IntVec i(ell, 0), mu(ell, 0);
    i[p] = 1;
    mu[p] = 1;
    return Monomial{GammaElement::zero(rank, ell), std::move(i), std::move(mu)};
}

Element Element::monomial(const Signature &sig, Monomial m, Rational coeff) {
    Element e(sig);
    e.add_term(m, coeff);
    return e;
}

void Element::add_term(const Monomial &m, const Rational &c) {
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Element &Element::operator+=(const Element &o) {
    if (sig_ != o.sig_)
        throw DimensionMismatch("element addition: signature mismatch");
    for (const auto &[m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

Element &Element::operator-=(const Element &o) {
    if (sig_ != o.sig_)
        throw DimensionMismatch("element subtraction: signature mismatch");
    for (const auto &[m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

Element &Element::operator*=(const Rational &c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto &[m, v] : terms_)
        v *= c;
    return *this;
}

Element apply_down(const Signature &sig, std::size_t p, const Monomial &m) {
    if (!sig.has_down(static_cast<std::int64_t>(p)))
        throw DimensionMismatch("apply_down: index " + std::to_string(p) +
                                " has no down-grading part");
    Element r(sig);
    std::int64_t ip = m.i[p];
    if (ip == 0)
        return r; // i - 1_[p] may leave the J lattice; the coefficient vanishes anyway
    Monomial lowered = m;
    lowered.i[p] -= 1;
    r.add_term(lowered, Rational(ip));
    return r;
}

Element apply_up(const Signature &sig, std::size_t q, const Monomial &m) {
    if (!sig.has_up(static_cast<std::int64_t>(q)))
        throw DimensionMismatch("apply_up: index " + std::to_string(q) +
                                " has no grading part");
    Element r(sig);
    r.add_term(m, m.alpha.embed(q));
    return r;
}

Element apply_partial(const Signature &sig, std::size_t p, const Element &e) {
    if (p >= static_cast<std::size_t>(sig.ell()))
        throw DimensionMismatch("apply_partial: index out of range");
    Element r(sig);
    const bool down = sig.has_down(static_cast<std::int64_t>(p));
    const bool up = sig.has_up(static_cast<std::int64_t>(p));
    for (const auto &[m, c] : e.terms()) {
        if (down && m.i[p] != 0) {
            Monomial lowered = m;
            lowered.i[p] -= 1;
            r.add_term(lowered, c * Rational(m.i[p]));
        }
        if (up) {
            const Rational &aq = m.alpha.embed(p);
            if (aq != 0)
                r.add_term(m, c * aq);
        }
    }
    return r;
}

Element apply_deriv_power(const Signature &sig, const IntVec &lam, const Element &e) {
    validate_deriv_index(sig, lam);
    Element r = e;
    for (std::size_t p = 0; p < lam.size(); ++p)
        for (std::int64_t k = 0; k < lam[p]; ++k)
            r = apply_partial(sig, p, r);
    return r;
}

namespace {

/// Multiplies the coefficient parts: x^{alpha,i} * x^{beta,j} = x^{alpha+beta, i+j}.
Monomial coeff_mul(const Monomial &a, const Monomial &b_coeff, IntVec mu) {
    Monomial r;
    r.alpha = a.alpha + b_coeff.alpha;
    r.i = a.i;
    for (std::size_t p = 0; p < r.i.size(); ++p)
        r.i[p] += b_coeff.i[p];
    r.mu = std::move(mu);
    return r;
}

/// Walks all lam with 0 <= lam <= mu componentwise, sharing the partial
/// derivatives d_0^{lam_0} ... d_{p-1}^{lam_{p-1}}(v) across the recursion.
struct LambdaSum {
    const Signature &sig;
    const Monomial &a;
    const IntVec &nu;
    Element &out;
    IntVec lam;

    void run(std::size_t p, const Element &dv, const Integer &binom) {
        auto ell = lam.size();
        if (p == ell) {
            IntVec mu_out(ell);
            for (std::size_t k = 0; k < ell; ++k)
                mu_out[k] = a.mu[k] + nu[k] - lam[k];
            Rational scale = Rational(binom);
            for (const auto &[w, cw] : dv.terms())
                out.add_term(coeff_mul(a, w, mu_out), scale * cw);
            return;
        }
        Element cur = dv;
        Integer c = 1; // C(mu_p, k), updated multiplicatively
        for (std::int64_t k = 0;; ++k) {
            lam[p] = k;
            run(p + 1, cur, binom * c);
            if (k == a.mu[p])
                break;
            cur = apply_partial(sig, p, cur);
            if (cur.is_zero())
                break;
            c = c * (a.mu[p] - k) / (k + 1);
        }
        lam[p] = 0;
    }
};

} // namespace

Element mul_monomials(const Signature &sig, const Monomial &a, const Monomial &b) {
    Element r(sig);
    // v d^nu with the coefficient part of b isolated.
    Monomial v = b;
    IntVec nu = v.mu;
    v.mu.assign(v.i.size(), 0);
    Element v_elem = Element::monomial(sig, v);

    LambdaSum sum{sig, a, nu, r, IntVec(nu.size(), 0)};
    sum.run(0, v_elem, Integer(1));
    return r;
}

Element mul(const Element &a, const Element &b) {
    if (a.signature() != b.signature())
        throw DimensionMismatch("mul: signature mismatch");
    Element r(a.signature());
    for (const auto &[ma, ca] : a.terms())
        for (const auto &[mb, cb] : b.terms()) {
            Element prod = mul_monomials(a.signature(), ma, mb);
            Rational c = ca * cb;
            for (const auto &[m, v] : prod.terms())
                r.add_term(m, c * v);
        }
    return r;
}

Element bracket(const Element &a, const Element &b) { return mul(a, b) - mul(b, a); }

Element bracket_monomials(const Signature &sig, const Monomial &a, const Monomial &b) {
    return mul_monomials(sig, a, b) - mul_monomials(sig, b, a);
}

std::string print_monomial(const Monomial &m) {
    std::string s = "m[";
    for (std::size_t q = 0; q < m.alpha.embedding().size(); ++q) {
        if (q)
            s += ',';
        s += rat_to_string(m.alpha.embed(q));
    }
    s += ';';
    for (std::size_t p = 0; p < m.i.size(); ++p) {
        if (p)
            s += ',';
        s += std::to_string(m.i[p]);
    }
    s += ';';
    for (std::size_t p = 0; p < m.mu.size(); ++p) {
        if (p)
            s += ',';
        s += std::to_string(m.mu[p]);
    }
    s += ']';
    return s;
}

std::string print_element(const Element &e) {
    if (e.is_zero())
        return "0";
    std::string s;
    bool first = true;
    for (const auto &[m, c] : e.terms()) {
        Rational a = c;
        if (first) {
            first = false;
            if (a != 1)
                s += rat_to_string(a) + "*";
        } else if (a > 0) {
            s += " + ";
            if (a != 1)
                s += rat_to_string(a) + "*";
        } else {
            s += " - ";
            a = -a;
            if (a != 1)
                s += rat_to_string(a) + "*";
        }
        s += print_monomial(m);
    }
    return s;
}

} // namespace weylk
