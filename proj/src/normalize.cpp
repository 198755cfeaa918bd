#include "weylk/normalize.hpp"

namespace weylk {

struct NormalizedCocycle::State {
    Signature sig;
    BilinearForm psi;
    GammaElement tau;
    std::size_t rank;
    std::map<Monomial, Rational, MonomialLess> memo;

    Rational f(const Monomial &m);
    Rational f_of_element(const Element &e);
    Rational phi_pair(const Monomial &u, const Monomial &v);
};

namespace {

/// First q >= l1 with alpha_q != 0, or -1 when alpha = 0.
std::int64_t first_graded_index(const Signature &sig, const GammaElement &alpha) {
    for (std::int64_t q = sig.l1; q < sig.ell(); ++q)
        if (alpha.embed(static_cast<std::size_t>(q)) != 0)
            return q;
    return -1;
}

std::int64_t first_nonzero(const IntVec &v) {
    for (std::size_t p = 0; p < v.size(); ++p)
        if (v[p] != 0)
            return static_cast<std::int64_t>(p);
    return -1;
}

bool is_deriv_pattern(const Monomial &m, std::int64_t &p_out) {
    if (!m.alpha.is_zero())
        return false;
    for (auto e : m.i)
        if (e != 0)
            return false;
    std::int64_t p = -1;
    for (std::size_t k = 0; k < m.mu.size(); ++k) {
        if (m.mu[k] == 0)
            continue;
        if (m.mu[k] != 1 || p != -1)
            return false;
        p = static_cast<std::int64_t>(k);
    }
    if (p == -1)
        return false;
    p_out = p;
    return true;
}

bool is_t_deriv_pattern(const Signature &sig, const Monomial &m, std::int64_t &p_out) {
    std::int64_t p = -1;
    if (!is_deriv_pattern(Monomial{m.alpha, IntVec(m.i.size(), 0), m.mu}, p))
        return false;
    for (std::size_t k = 0; k < m.i.size(); ++k) {
        if (m.i[k] != (static_cast<std::int64_t>(k) == p ? 1 : 0))
            return false;
    }
    if (!sig.has_down(p))
        return false;
    p_out = p;
    return true;
}

} // namespace

NormalizedCocycle::NormalizedCocycle(Signature sig, BilinearForm psi, GammaElement tau) {
    if (tau.embedding().size() != static_cast<std::size_t>(sig.ell()))
        throw DimensionMismatch("tau has wrong ambient dimension");
    for (std::int64_t p = sig.l1; p < sig.ell(); ++p)
        if (tau.embed(static_cast<std::size_t>(p)) == 0)
            throw InvalidTau("tau coordinate " + std::to_string(p) +
                             " vanishes; every coordinate from l1 on must be nonzero");
    st_ = std::make_shared<State>(
        State{sig, std::move(psi), std::move(tau), 0, {}});
    st_->rank = st_->tau.rank();
}

const Signature &NormalizedCocycle::signature() const { return st_->sig; }
const BilinearForm &NormalizedCocycle::source() const { return st_->psi; }
const GammaElement &NormalizedCocycle::tau() const { return st_->tau; }
std::size_t NormalizedCocycle::memo_size() const { return st_->memo.size(); }

Rational NormalizedCocycle::State::f(const Monomial &m) {
    if (auto it = memo.find(m); it != memo.end())
        return it->second;

    Rational value;
    const auto ell = static_cast<std::size_t>(sig.ell());

    if (std::int64_t q64 = first_graded_index(sig, m.alpha); q64 >= 0) {
        // alpha != 0: recursion on |i_q| at the first graded coordinate.
        const auto q = static_cast<std::size_t>(q64);
        const Rational &aq = m.alpha.embed(q);
        const std::int64_t iq = m.i[q];
        if (iq >= 0) {
            Rational rec = 0;
            if (iq != 0) { // i - 1_[q] may leave the J lattice when i_q = 0
                Monomial lower = m;
                lower.i[q] -= 1;
                rec = Rational(iq) * f(lower);
            }
            value = (psi(deriv_monomial(sig, rank, q), m) - rec) / aq;
        } else if (iq == -1) {
            Monomial higher = m;
            higher.i[q] += 1;
            value = -(psi(t_deriv_monomial(sig, rank, q), m) - aq * f(higher)) /
                    Rational(1 + m.mu[q]);
        } else { // iq <= -2
            Monomial higher = m;
            higher.i[q] += 1;
            value = (psi(deriv_monomial(sig, rank, q), higher) - aq * f(higher)) /
                    Rational(iq + 1);
        }
    } else if (std::int64_t r64 = first_nonzero(m.i); r64 >= 0) {
        // alpha = 0, i != 0: a single psi evaluation at the first r with i_r != 0.
        const auto r = static_cast<std::size_t>(r64);
        const std::int64_t ir = m.i[r];
        if (ir != m.mu[r]) {
            value = psi(t_deriv_monomial(sig, rank, r), m) / Rational(ir - m.mu[r]);
        } else {
            Monomial higher = m;
            higher.i[r] += 1;
            value = psi(deriv_monomial(sig, rank, r), higher) / Rational(ir + 1);
        }
    } else if (sig.prefix(3) >= 1) {
        // pure d^mu with a down-grading coordinate available.
        Monomial t1 = m;
        t1.i[0] += 1;
        value = psi(deriv_monomial(sig, rank, 0), t1);
    } else {
        // pure d^mu, all derivations semisimple: recursion on mu in the
        // level-first order, driven by tau.
        const std::size_t last = ell - 1;
        IntVec mup = m.mu;
        mup[last] += 1;

        Monomial x_tau{tau, IntVec(ell, 0), IntVec(ell, 0)};
        Monomial x_neg{-tau, IntVec(ell, 0), std::move(mup)};
        const IntVec &target = x_neg.mu;
        Rational acc = psi(x_tau, x_neg);

        // lam <= mu + 1_[last], lam not in {0, 1_[last]}
        IntVec lam(ell, 0);
        while (true) {
            std::size_t p = 0;
            while (p < ell && lam[p] == target[p]) {
                lam[p] = 0;
                ++p;
            }
            if (p == ell)
                break;
            ++lam[p];

            if (level(lam) == 1 && lam[last] == 1)
                continue; // lam = 1_[last]
            Rational tau_pow = 1;
            for (std::size_t k = 0; k < ell; ++k)
                tau_pow *= rat_pow(tau.embed(k), lam[k]);
            IntVec rest(ell);
            for (std::size_t k = 0; k < ell; ++k)
                rest[k] = target[k] - lam[k];
            Monomial lower{GammaElement::zero(rank, ell), IntVec(ell, 0), std::move(rest)};
            acc += Rational(multi_binomial(target, lam)) * tau_pow * f(lower);
        }
        value = -acc / Rational(m.mu[last] + 1);
    }

    memo.emplace(m, value);
    return value;
}

Rational NormalizedCocycle::State::f_of_element(const Element &e) {
    Rational r = 0;
    for (const auto &[m, c] : e.terms())
        r += c * f(m);
    return r;
}

Rational NormalizedCocycle::State::phi_pair(const Monomial &u, const Monomial &v) {
    Rational value = psi(u, v) - f_of_element(bracket_monomials(sig, u, v));
    std::int64_t p = 0;
    bool distinguished = is_deriv_pattern(u, p) || is_t_deriv_pattern(sig, u, p);
    if (distinguished && value != 0)
        throw NonCocycleInput("normalization postcondition failed on (" + std::to_string(p) +
                              "): the supplied form is not a 2-cocycle");
    return value;
}

Rational NormalizedCocycle::f_value(const Monomial &m) const { return st_->f(m); }
Rational NormalizedCocycle::f_value(const Element &e) const { return st_->f_of_element(e); }

Rational NormalizedCocycle::phi(const Monomial &u, const Monomial &v) const {
    return st_->phi_pair(u, v);
}

Rational NormalizedCocycle::phi(const Element &a, const Element &b) const {
    Rational r = 0;
    for (const auto &[u, cu] : a.terms())
        for (const auto &[v, cv] : b.terms())
            r += cu * cv * st_->phi_pair(u, v);
    return r;
}

BilinearForm NormalizedCocycle::form() const {
    auto st = st_;
    return BilinearForm("normalized(" + st_->psi.kind() + ")",
                        [st](const Monomial &u, const Monomial &v) -> Rational {
                            return st->phi_pair(u, v);
                        });
}

} // namespace weylk
