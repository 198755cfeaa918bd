#include "doctest.h"

#include "weylk/box.hpp"
#include "weylk/cocycle.hpp"

using namespace weylk;

namespace {

std::shared_ptr<const GammaLattice> z_lattice(Signature sig) {
    return lattice_validate(sig, {RatVec{Rational(1)}});
}

Monomial mono(const GammaLattice &L, IntVec coeffs, IntVec i, IntVec mu) {
    return make_monomial(L.signature(), L.element(coeffs), std::move(i), std::move(mu));
}

// Virasoro oracle: -(a^3 - a)/6 by direct products.
Rational virasoro_central(const Rational &a) { return -(a * a * a - a) / 6; }

} // namespace

TEST_CASE("phi0 frozen values") {
    auto L = z_lattice(make_signature(0, 0, 0, 1));
    const Signature &sig = L->signature();
    // (x^2 d, x^-2 d) -> -1
    CHECK(phi0_eval(sig, mono(*L, {2}, {0}, {1}), mono(*L, {-2}, {0}, {1})) == -1);
    // Kronecker delta kills alpha + beta != 0
    CHECK(phi0_eval(sig, mono(*L, {2}, {0}, {1}), mono(*L, {1}, {0}, {2})) == 0);
    // (x^3, x^-3) -> 3
    CHECK(phi0_eval(sig, mono(*L, {3}, {0}, {0}), mono(*L, {-3}, {0}, {0})) == 3);
}

TEST_CASE("phi0 wrong signature") {
    auto L = z_lattice(make_signature(0, 0, 1, 0));
    CHECK_THROWS_AS(phi0_form(L->signature()), ConfigError);
}

TEST_CASE("phi0 cocycle axioms on the box") {
    auto L = z_lattice(make_signature(0, 0, 0, 1));
    const Signature &sig = L->signature();
    auto box = enumerate_box(Box{3, 0, 3}, *L);
    BilinearForm form = phi0_form(sig);
    CHECK(check_antisymmetry_box(form, box, 2).passed());
    CHECK(check_cocycle_identity_box(sig, form, box, 2).passed());
}

TEST_CASE("phi0 equals the discrete power-moment sum on integer alpha") {
    // independent oracle: sum_{j=1}^{a} (-j)^mu (a-j)^nu, no binomials anywhere
    auto L = z_lattice(make_signature(0, 0, 0, 1));
    const Signature &sig = L->signature();
    for (std::int64_t a = 0; a <= 6; ++a)
        for (std::int64_t mu = 0; mu <= 4; ++mu)
            for (std::int64_t nu = 0; nu <= 4; ++nu) {
                Rational oracle = 0;
                for (std::int64_t j = 1; j <= a; ++j)
                    oracle += rat_pow(Rational(-j), mu) * rat_pow(Rational(a - j), nu);
                CHECK(phi0_eval(sig, mono(*L, {a}, {0}, {mu}), mono(*L, {-a}, {0}, {nu})) ==
                      oracle);
                // and the antisymmetric side
                CHECK(phi0_eval(sig, mono(*L, {-a}, {0}, {nu}), mono(*L, {a}, {0}, {mu})) ==
                      -oracle);
            }
}

TEST_CASE("a generic bilinear form fails both axioms") {
    auto L = z_lattice(make_signature(0, 0, 0, 1));
    const Signature &sig = L->signature();
    auto box = enumerate_box(Box{1, 0, 1}, *L);
    BilinearForm one("one", [](const Monomial &, const Monomial &) { return Rational(1); });
    auto anti = check_antisymmetry_box(one, box);
    CHECK_FALSE(anti.passed());
    CHECK(anti.failures.size() == anti.failed());

    // delta form on a specific pair is not a cocycle
    Monomial p = mono(*L, {1}, {0}, {1}), q = mono(*L, {-1}, {0}, {0});
    BilinearForm deltam("delta", [p, q](const Monomial &u, const Monomial &v) {
        return (u == p && v == q) ? Rational(1) : Rational(0);
    });
    CHECK_FALSE(check_cocycle_identity_box(sig, deltam, box).passed());
    CHECK(check_antisymmetry_box(zero_form(), box).passed());
    CHECK(check_cocycle_identity_box(sig, zero_form(), box).passed());
}

TEST_CASE("phi_gamma frozen values") {
    auto L = z_lattice(make_signature(0, 0, 1, 0));
    const Signature &sig = L->signature();
    GammaElement g0 = L->zero();

    // gamma = 0: (t^3 d, t^-1 d) -> -1, single surviving term s = 3
    CHECK(phi_gamma_eval(sig, g0, mono(*L, {0}, {3}, {1}), mono(*L, {0}, {-1}, {1})) == -1);

    // normalization value phi_gamma(t^1, x^{gamma,-1}) = 1 for every gamma
    for (std::int64_t g = -2; g <= 2; ++g) {
        GammaElement gamma = L->element(IntVec{g});
        CHECK(phi_gamma_eval(sig, gamma, mono(*L, {0}, {1}, {0}), mono(*L, {g}, {-1}, {0})) ==
              1);
    }

    // delta: alpha + beta != gamma -> 0
    CHECK(phi_gamma_eval(sig, L->element(IntVec{1}), mono(*L, {0}, {1}, {1}),
                         mono(*L, {0}, {-1}, {0})) == 0);

    // gamma = 1: (x^{1,0}, x^{0,-1}) -> 1, the s = 0 term alpha * gamma^0
    CHECK(phi_gamma_eval(sig, L->element(IntVec{1}), mono(*L, {1}, {0}, {0}),
                         mono(*L, {0}, {-1}, {0})) == 1);
}

TEST_CASE("phi_gamma cocycle axioms for gamma in {-1,0,1,2}") {
    auto L = z_lattice(make_signature(0, 0, 1, 0));
    const Signature &sig = L->signature();
    auto box = enumerate_box(Box{1, 1, 1}, *L); // small here; the big box runs in acceptance
    BracketCache cache(sig, box);
    for (std::int64_t g : {-1, 0, 1, 2}) {
        BilinearForm form = phi_gamma_form(sig, L->element(IntVec{g}));
        CHECK(check_antisymmetry_box(form, box).passed());
        CHECK(check_cocycle_identity_box(sig, form, box, 1, &cache).passed());
    }
}

TEST_CASE("gamma = 0 collapse equals the Kronecker reading") {
    auto L = z_lattice(make_signature(0, 0, 1, 0));
    const Signature &sig = L->signature();
    GammaElement g0 = L->zero();
    for (std::int64_t a = -2; a <= 2; ++a)
        for (std::int64_t i = -2; i <= 2; ++i)
            for (std::int64_t j = -2; j <= 2; ++j)
                for (std::int64_t mu = 0; mu <= 2; ++mu)
                    for (std::int64_t nu = 0; nu <= 2; ++nu) {
                        Monomial m1 = mono(*L, {a}, {i}, {mu});
                        Monomial m2 = mono(*L, {-a}, {j}, {nu});
                        // direct delta_{i+j,s-1} evaluation
                        Rational expect = 0;
                        std::int64_t s = i + j + 1;
                        if (s >= 0 && s <= mu + nu + 1)
                            expect = (mu % 2 ? Rational(-1) : Rational(1)) * factorial(mu) *
                                     factorial(nu) * gen_binomial(Rational(i), s) *
                                     powdiv(Rational(a), mu + nu + 1 - s);
                        CHECK(phi_gamma_eval(sig, g0, m1, m2) == expect);
                    }
}

TEST_CASE("Virasoro restriction of phi0") {
    auto L = z_lattice(make_signature(0, 0, 0, 1));
    const Signature &sig = L->signature();
    for (std::int64_t a = -6; a <= 6; ++a)
        CHECK(phi0_eval(sig, mono(*L, {a}, {0}, {1}), mono(*L, {-a}, {0}, {1})) ==
              virasoro_central(Rational(a)));
}

TEST_CASE("Witt restriction of phi_{gamma=0}") {
    auto L = z_lattice(make_signature(0, 0, 1, 0));
    const Signature &sig = L->signature();
    GammaElement g0 = L->zero();
    for (std::int64_t m = -6; m <= 6; ++m)
        for (std::int64_t n = -6; n <= 6; ++n) {
            Rational expect = m + n == 0 ? virasoro_central(Rational(m)) : Rational(0);
            CHECK(phi_gamma_eval(sig, g0, mono(*L, {0}, {m + 1}, {1}),
                                 mono(*L, {0}, {n + 1}, {1})) == expect);
        }
}

TEST_CASE("normalization values (b = 1)") {
    auto L = z_lattice(make_signature(0, 0, 1, 0));
    const Signature &sig = L->signature();
    // phi_gamma(x^{gamma,i}, t^1) = -powdiv(gamma, -i-1)
    for (std::int64_t g = -2; g <= 2; ++g) {
        GammaElement gamma = L->element(IntVec{g});
        for (std::int64_t i = -4; i <= 4; ++i)
            CHECK(phi_gamma_eval(sig, gamma, mono(*L, {g}, {i}, {0}),
                                 mono(*L, {0}, {1}, {0})) ==
                  -powdiv(gamma.embed(0), -i - 1));
    }
}

TEST_CASE("degree shift identity") {
    auto L = z_lattice(make_signature(0, 0, 1, 0));
    const Signature &sig = L->signature();
    for (std::int64_t g : {-1, 0, 2}) {
        GammaElement gamma = L->element(IntVec{g});
        for (std::int64_t a = -2; a <= 2; ++a)
            for (std::int64_t i = -2; i <= 2; ++i)
                for (std::int64_t j = -2; j <= 2; ++j)
                    for (std::int64_t mu = 0; mu <= 2; ++mu)
                        for (std::int64_t nu = 0; nu <= 2; ++nu) {
                            Rational lhs = phi_gamma_eval(sig, gamma, mono(*L, {a}, {i}, {mu}),
                                                          mono(*L, {g - a}, {j}, {nu}));
                            Rational shift = (mu % 2 ? Rational(-1) : Rational(1)) *
                                             factorial(mu) * factorial(nu) /
                                             factorial(mu + nu);
                            Rational rhs =
                                shift * phi_gamma_eval(sig, gamma, mono(*L, {a}, {i}, {0}),
                                                       mono(*L, {g - a}, {j}, {mu + nu}));
                            CHECK(lhs == rhs);
                        }
    }
}

TEST_CASE("combine_cocycles selects by delta") {
    auto L = z_lattice(make_signature(0, 0, 1, 0));
    const Signature &sig = L->signature();

    BilinearForm empty = combine_cocycles(sig, {});
    CHECK(empty(mono(*L, {0}, {1}, {0}), mono(*L, {0}, {-1}, {0})) == 0);

    GammaCoeffMap coeffs;
    coeffs[L->zero()] = Rational(2);
    coeffs[L->element(IntVec{1})] = Rational(3);
    BilinearForm comb = combine_cocycles(sig, coeffs);

    // {0 -> 1} reproduces phi_{gamma=0}
    GammaCoeffMap just0;
    just0[L->zero()] = Rational(1);
    BilinearForm only0 = combine_cocycles(sig, just0);
    for (std::int64_t i = -2; i <= 2; ++i)
        CHECK(only0(mono(*L, {0}, {i}, {1}), mono(*L, {0}, {-i}, {1})) ==
              phi_gamma_eval(sig, L->zero(), mono(*L, {0}, {i}, {1}),
                             mono(*L, {0}, {-i}, {1})));

    // a pair with alpha + beta = gamma_1 picks 3 * phi_{gamma_1}
    Monomial u = mono(*L, {1}, {0}, {0}), v = mono(*L, {0}, {-1}, {0});
    CHECK(comb(u, v) ==
          Rational(3) * phi_gamma_eval(sig, L->element(IntVec{1}), u, v));
}

TEST_CASE("coboundary evaluation") {
    auto L = z_lattice(make_signature(0, 0, 0, 1));
    const Signature &sig = L->signature();

    LinearFunctional f;
    Monomial xb = mono(*L, {2}, {0}, {0});
    f.set(xb, Rational(1));

    // commuting pair -> 0
    Element xa = Element::monomial(sig, mono(*L, {1}, {0}, {0}));
    Element xb_el = Element::monomial(sig, xb);
    CHECK(coboundary_eval(sig, f, xa, xb_el) == 0);

    // [d, x^b] = b x^b, so the delta functional reads off beta
    Element d = Element::monomial(sig, mono(*L, {0}, {0}, {1}));
    CHECK(coboundary_eval(sig, f, d, xb_el) == 2);

    // alternating bracket
    CHECK(coboundary_eval(sig, f, d, d) == 0);

    // coboundaries satisfy the cocycle identity on any triple set
    BilinearForm psi_f = coboundary_form(sig, f);
    auto box = enumerate_box(Box{2, 0, 2}, *L);
    CHECK(check_antisymmetry_box(psi_f, box).passed());
    CHECK(check_cocycle_identity_box(sig, psi_f, box).passed());
}

TEST_CASE("binomial identity examples") {
    auto r1 = check_binomial_identity(1, 1, 1, 0);
    CHECK(r1.pass);
    CHECK(r1.lhs == 2);
    CHECK(r1.rhs == 2);

    // nu = 0 degenerates to a single q = 0 term
    for (std::int64_t mu = 0; mu <= 4; ++mu)
        for (std::int64_t lam = 0; lam <= 4; ++lam)
            for (std::int64_t s = 0; s <= mu + lam + 1; ++s)
                CHECK(check_binomial_identity(mu, 0, lam, s).pass);

    auto r2 = check_binomial_identity(2, 2, 1, 6);
    CHECK(r2.pass);
    CHECK(r2.lhs == 3); // brute-force: only q = 2 contributes, C(0,0) C(3,2)

    CHECK_THROWS_AS(check_binomial_identity(1, 1, 1, 5), Error);
}

TEST_CASE("binomial identity brute-force sweep") {
    for (std::int64_t mu = 0; mu <= 4; ++mu)
        for (std::int64_t nu = 0; nu <= 4; ++nu)
            for (std::int64_t lam = 0; lam <= 4; ++lam)
                for (std::int64_t s = 0; s <= mu + nu + lam + 1; ++s) {
                    auto r = check_binomial_identity(mu, nu, lam, s);
                    CHECK(r.pass);
                }
}

TEST_CASE("explicit pair/triple checker entry points") {
    auto L = z_lattice(make_signature(0, 0, 0, 1));
    const Signature &sig = L->signature();
    BilinearForm form = phi0_form(sig);
    std::vector<std::pair<Monomial, Monomial>> pairs = {
        {mono(*L, {1}, {0}, {1}), mono(*L, {-1}, {0}, {1})},
        {mono(*L, {2}, {0}, {0}), mono(*L, {-2}, {0}, {3})},
    };
    CHECK(check_antisymmetry(form, pairs).passed());

    std::vector<std::array<Monomial, 3>> triples = {
        {mono(*L, {1}, {0}, {1}), mono(*L, {-1}, {0}, {1}), mono(*L, {0}, {0}, {2})},
    };
    CHECK(check_cocycle_identity(sig, form, triples).passed());
}
