#include "weylk/cocycle.hpp"

#include <array>
#include <optional>

#include "weylk/parallel.hpp"

namespace weylk {

namespace {

void require_signature(const Signature &sig, const Signature &want, const char *what) {
    if (sig != want)
        throw ConfigError(std::string(what) + " requires signature (" +
                          std::to_string(want.l1) + "," + std::to_string(want.l2) + "," +
                          std::to_string(want.l3) + "," + std::to_string(want.l4) + ")");
}

Rational sign_pow(std::int64_t mu) { return mu % 2 == 0 ? Rational(1) : Rational(-1); }

} // namespace

Rational phi0_eval(const Signature &sig, const Monomial &m1, const Monomial &m2) {
    require_signature(sig, Signature{0, 0, 0, 1}, "phi0");
    if (!(m1.alpha + m2.alpha).is_zero())
        return 0;
    const Rational &alpha = m1.alpha.embed(0);
    const std::int64_t mu = m1.mu[0], nu = m2.mu[0];
    // The binomial kernel (-1)^k k! l! C(alpha+k, k+l+1) gives the cocycle
    // values on falling-factorial powers of the derivation; transporting it
    // to the plain powers d^mu = sum_k S(mu, k) [d]_k keeps the cocycle
    // identity exact (on integer alpha this is the classical power sum
    // sum_{j=1}^alpha (-j)^mu (alpha-j)^nu).
    Rational sum = 0;
    for (std::int64_t k = 0; k <= mu; ++k) {
        Integer smu = stirling2(mu, k);
        if (smu == 0)
            continue;
        for (std::int64_t l = 0; l <= nu; ++l) {
            Integer snu = stirling2(nu, l);
            if (snu == 0)
                continue;
            sum += Rational(smu) * Rational(snu) * sign_pow(k) * factorial(k) * factorial(l) *
                   gen_binomial(alpha + k, k + l + 1);
        }
    }
    return sum;
}

BilinearForm phi0_form(const Signature &sig) {
    require_signature(sig, Signature{0, 0, 0, 1}, "phi0");
    return BilinearForm("phi0", [sig](const Monomial &u, const Monomial &v) {
        return phi0_eval(sig, u, v);
    });
}

Rational phi_gamma_eval(const Signature &sig, const GammaElement &gamma, const Monomial &m1,
                        const Monomial &m2) {
    require_signature(sig, Signature{0, 0, 1, 0}, "phi_gamma");
    if (!(m1.alpha + m2.alpha == gamma))
        return 0;
    const Rational &alpha = m1.alpha.embed(0);
    const Rational &gval = gamma.embed(0);
    const std::int64_t i = m1.i[0], j = m2.i[0];
    const std::int64_t mu = m1.mu[0], nu = m2.mu[0];

    Rational sum = 0;
    for (std::int64_t s = 0; s <= mu + nu + 1; ++s) {
        Rational a = powdiv(alpha, mu + nu + 1 - s);
        if (a == 0)
            continue;
        Rational g = powdiv(gval, s - i - j - 1);
        if (g == 0)
            continue;
        sum += gen_binomial(Rational(i), s) * a * g;
    }
    return sign_pow(mu) * factorial(mu) * factorial(nu) * sum;
}

BilinearForm phi_gamma_form(const Signature &sig, const GammaElement &gamma) {
    require_signature(sig, Signature{0, 0, 1, 0}, "phi_gamma");
    std::string kind = "phi_gamma(";
    for (std::size_t k = 0; k < gamma.coeffs().size(); ++k)
        kind += (k ? "," : "") + std::to_string(gamma.coeffs()[k]);
    kind += ")";
    return BilinearForm(kind, [sig, gamma](const Monomial &u, const Monomial &v) {
        return phi_gamma_eval(sig, gamma, u, v);
    });
}

BilinearForm combine_cocycles(const Signature &sig, GammaCoeffMap coeffs) {
    require_signature(sig, Signature{0, 0, 1, 0}, "combined cocycle");
    auto table = std::make_shared<GammaCoeffMap>(std::move(coeffs));
    return BilinearForm("combined", [sig, table](const Monomial &u, const Monomial &v) -> Rational {
        GammaElement g = u.alpha + v.alpha; // the only gamma whose delta survives
        auto it = table->find(g);
        if (it == table->end())
            return 0;
        return it->second * phi_gamma_eval(sig, g, u, v);
    });
}

Rational coboundary_eval(const Signature &sig, const LinearFunctional &f, const Element &a,
                         const Element &b) {
    if (a.signature() != sig || b.signature() != sig)
        throw DimensionMismatch("coboundary_eval: signature mismatch");
    return f(bracket(a, b));
}

BilinearForm coboundary_form(const Signature &sig, LinearFunctional f) {
    auto fn = std::make_shared<LinearFunctional>(std::move(f));
    return BilinearForm("coboundary", [sig, fn](const Monomial &u, const Monomial &v) {
        return (*fn)(bracket_monomials(sig, u, v));
    });
}

BilinearForm sum_forms(BilinearForm a, BilinearForm b) {
    std::string kind = a.kind() + "+" + b.kind();
    return BilinearForm(kind, [a = std::move(a), b = std::move(b)](const Monomial &u,
                                                                   const Monomial &v) {
        return a(u, v) + b(u, v);
    });
}

BilinearForm scale_form(Rational c, BilinearForm a) {
    std::string kind = rat_to_string(c) + "*" + a.kind();
    return BilinearForm(kind,
                        [c = std::move(c), a = std::move(a)](const Monomial &u, const Monomial &v) {
                            return c * a(u, v);
                        });
}

BilinearForm zero_form() {
    return BilinearForm("zero", [](const Monomial &, const Monomial &) { return Rational(0); });
}

VerificationReport check_antisymmetry(const BilinearForm &form,
                                      std::span<const std::pair<Monomial, Monomial>> pairs) {
    VerificationReport rep;
    rep.suite = "antisymmetry";
    for (const auto &[u, v] : pairs) {
        ++rep.checked;
        Rational s = form(u, v) + form(v, u);
        if (s != 0)
            rep.add_failure(print_monomial(u) + " , " + print_monomial(v), "0",
                            rat_to_string(s));
    }
    return rep;
}

VerificationReport check_cocycle_identity(const Signature &sig, const BilinearForm &form,
                                          std::span<const std::array<Monomial, 3>> triples) {
    VerificationReport rep;
    rep.suite = "cocycle-identity";
    for (const auto &t : triples) {
        ++rep.checked;
        Rational s = form(bracket_monomials(sig, t[0], t[1]), t[2]) +
                     form(bracket_monomials(sig, t[1], t[2]), t[0]) +
                     form(bracket_monomials(sig, t[2], t[0]), t[1]);
        if (s != 0)
            rep.add_failure(print_monomial(t[0]) + " , " + print_monomial(t[1]) + " , " +
                                print_monomial(t[2]),
                            "0", rat_to_string(s));
    }
    return rep;
}

VerificationReport check_antisymmetry_box(const BilinearForm &form,
                                          std::span<const Monomial> box, unsigned workers) {
    const std::size_t n = box.size();
    std::vector<VerificationReport> parts(workers == 0 ? 1 : workers);
    parallel_chunks(n, workers, [&](unsigned w, std::size_t lo, std::size_t hi) {
        VerificationReport &rep = parts[w];
        for (std::size_t a = lo; a < hi; ++a)
            for (std::size_t b = a; b < n; ++b) {
                ++rep.checked;
                Rational s = form(box[a], box[b]) + form(box[b], box[a]);
                if (s != 0)
                    rep.add_failure(print_monomial(box[a]) + " , " + print_monomial(box[b]),
                                    "0", rat_to_string(s));
            }
    });
    VerificationReport rep;
    rep.suite = "antisymmetry";
    for (auto &p : parts)
        rep.absorb(std::move(p));
    rep.sort_failures();
    return rep;
}

BracketCache::BracketCache(const Signature &sig, std::span<const Monomial> box,
                           unsigned workers)
    : n_(box.size()), cache_(n_ * (n_ + 1) / 2, Element(sig)) {
    parallel_chunks(n_, workers, [&](unsigned, std::size_t lo, std::size_t hi) {
        for (std::size_t a = lo; a < hi; ++a)
            for (std::size_t b = a; b < n_; ++b)
                cache_[a * n_ - a * (a - 1) / 2 + (b - a)] =
                    bracket_monomials(sig, box[a], box[b]);
    });
}

VerificationReport check_cocycle_identity_box(const Signature &sig, const BilinearForm &form,
                                              std::span<const Monomial> box, unsigned workers,
                                              const BracketCache *cache) {
    const std::size_t n = box.size();
    std::optional<BracketCache> own;
    if (cache == nullptr) {
        own.emplace(sig, box, workers);
        cache = &*own;
    }
    auto cached = [&](std::size_t a, std::size_t b) { return cache->ref(a, b); };

    std::vector<VerificationReport> parts(workers == 0 ? 1 : workers);
    parallel_chunks(n, workers, [&](unsigned w, std::size_t lo, std::size_t hi) {
        VerificationReport &rep = parts[w];
        for (std::size_t a = lo; a < hi; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c) {
                    ++rep.checked;
                    Rational s = 0;
                    const std::array<std::array<std::size_t, 3>, 3> cyc{
                        {{a, b, c}, {b, c, a}, {c, a, b}}};
                    for (const auto &[x, y, z] : cyc) {
                        auto [el, flip] = cached(x, y);
                        Rational v = form(*el, box[z]);
                        s += flip ? -v : v;
                    }
                    if (s != 0)
                        rep.add_failure(print_monomial(box[a]) + " , " + print_monomial(box[b]) +
                                            " , " + print_monomial(box[c]),
                                        "0", rat_to_string(s));
                }
    });
    VerificationReport rep;
    rep.suite = "cocycle-identity";
    for (auto &p : parts)
        rep.absorb(std::move(p));
    rep.sort_failures();
    return rep;
}

BinomialIdentityResult check_binomial_identity(std::int64_t mu, std::int64_t nu,
                                               std::int64_t lam, std::int64_t s) {
    if (mu < 0 || nu < 0 || lam < 0)
        throw Error("check_binomial_identity: indices must be nonnegative");
    const std::int64_t k = mu + nu + lam;
    if (s < 0 || s > k + 1)
        throw Error("check_binomial_identity: s out of range [0, mu+nu+lam+1]");

    Rational lhs = 0;
    for (std::int64_t q = 0; q <= nu; ++q) {
        Rational term = gen_binomial(Rational(k + 1 - s), nu - q) *
                        gen_binomial(Rational(lam + q), q);
        if (term == 0)
            continue;
        lhs += (q % 2 == 0 ? term : -term);
    }
    Rational rhs = gen_binomial(Rational(mu + nu - s), nu);
    return {lhs == rhs, lhs, rhs};
}

} // namespace weylk
