#include "weylk/suites.hpp"

#include <chrono>

#include "weylk/extension.hpp"
#include "weylk/linalg.hpp"
#include "weylk/normalize.hpp"
#include "weylk/parallel.hpp"
#include "weylk/parser.hpp"

namespace weylk {

namespace {

constexpr std::int64_t kVirasoroBound = 6;   // |alpha|, |m|, |n| range of the regressions
constexpr std::int64_t kBinomialBound = 6;   // mu, nu, lam range of the binomial identity
constexpr int kFunctionalEntries = 5;        // support size of random coboundaries
constexpr std::int64_t kRoundTripDefault = 10000;

struct SuiteContext {
    const Config &cfg;
    std::uint64_t seed;
    unsigned workers;
    std::string ref; // config reference for repro lines
    std::string suite;

    std::string verify_repro() const {
        return "weylk verify --config " + ref + " --suite " + suite + " --seed " +
               std::to_string(seed);
    }
    std::string eval_repro(const std::string &op, const std::string &a,
                           const std::string &b) const {
        return "weylk eval " + op + " --config " + ref + " \"" + a + "\" \"" + b + "\"";
    }
    std::string cocycle_repro(const std::string &spec, const std::string &a,
                              const std::string &b) const {
        return "weylk eval cocycle --config " + ref + " --form '" + spec + "' \"" + a + "\" \"" +
               b + "\"";
    }
};

void require_suite_signature(const SuiteContext &ctx, const Signature &want) {
    if (ctx.cfg.sig != want)
        throw SuiteError("suite " + ctx.suite + " requires signature (" +
                         std::to_string(want.l1) + "," + std::to_string(want.l2) + "," +
                         std::to_string(want.l3) + "," + std::to_string(want.l4) + ")");
}

Element elem(const Signature &sig, const Monomial &m) { return Element::monomial(sig, m); }

std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t t) {
    return seed * 0x9e3779b97f4a7c15ull + t + 1;
}

// ---------------------------------------------------------------- algebra laws

VerificationReport suite_assoc(const SuiteContext &ctx) {
    const Signature &sig = ctx.cfg.sig;
    VerificationReport rep;

    auto check_triple = [&](VerificationReport &r, const Monomial &a, const Monomial &b,
                            const Monomial &c) {
        ++r.checked;
        Element ab = mul_monomials(sig, a, b);
        Element bc = mul_monomials(sig, b, c);
        Element lhs = mul(ab, elem(sig, c));
        Element rhs = mul(elem(sig, a), bc);
        if (!(lhs == rhs))
            r.add_failure(print_monomial(a) + " , " + print_monomial(b) + " , " +
                              print_monomial(c),
                          "equal products", print_element(lhs) + " vs " + print_element(rhs),
                          ctx.eval_repro("mul", print_monomial(a), print_monomial(b)));
    };

    if (ctx.cfg.samples > 0) {
        Rng rng(ctx.seed);
        for (std::int64_t t = 0; t < ctx.cfg.samples; ++t) {
            Monomial a = random_monomial(ctx.cfg.box, *ctx.cfg.lattice, rng);
            Monomial b = random_monomial(ctx.cfg.box, *ctx.cfg.lattice, rng);
            Monomial c = random_monomial(ctx.cfg.box, *ctx.cfg.lattice, rng);
            check_triple(rep, a, b, c);
        }
        return rep;
    }

    std::vector<Monomial> box = enumerate_box(ctx.cfg.box, *ctx.cfg.lattice);
    const std::size_t n = box.size();
    std::vector<VerificationReport> parts(ctx.workers);
    parallel_chunks(n, ctx.workers, [&](unsigned w, std::size_t lo, std::size_t hi) {
        for (std::size_t a = lo; a < hi; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c)
                    check_triple(parts[w], box[a], box[b], box[c]);
    });
    for (auto &p : parts)
        rep.absorb(std::move(p));
    rep.sort_failures();
    return rep;
}

VerificationReport suite_jacobi(const SuiteContext &ctx) {
    const Signature &sig = ctx.cfg.sig;
    VerificationReport rep;

    auto check_triple = [&](VerificationReport &r, const Element &ab_bracket, const Monomial &a,
                            const Monomial &b, const Monomial &c, const Element &bc,
                            const Element &ca) {
        ++r.checked;
        Element sum = bracket(ab_bracket, elem(sig, c));
        sum += bracket(bc, elem(sig, a));
        sum += bracket(ca, elem(sig, b));
        if (!sum.is_zero())
            r.add_failure(print_monomial(a) + " , " + print_monomial(b) + " , " +
                              print_monomial(c),
                          "0", print_element(sum),
                          ctx.eval_repro("bracket", print_monomial(a), print_monomial(b)));
    };

    if (ctx.cfg.samples > 0) {
        Rng rng(ctx.seed);
        for (std::int64_t t = 0; t < ctx.cfg.samples; ++t) {
            Monomial a = random_monomial(ctx.cfg.box, *ctx.cfg.lattice, rng);
            Monomial b = random_monomial(ctx.cfg.box, *ctx.cfg.lattice, rng);
            Monomial c = random_monomial(ctx.cfg.box, *ctx.cfg.lattice, rng);
            check_triple(rep, bracket_monomials(sig, a, b), a, b, c,
                         bracket_monomials(sig, b, c), bracket_monomials(sig, c, a));
        }
        return rep;
    }

    std::vector<Monomial> box = enumerate_box(ctx.cfg.box, *ctx.cfg.lattice);
    const std::size_t n = box.size();
    BracketCache cache(sig, box, ctx.workers);
    auto signed_bracket = [&](std::size_t x, std::size_t y) {
        auto [el, flip] = cache.ref(x, y);
        if (!flip)
            return *el;
        Element e = *el;
        e *= Rational(-1);
        return e;
    };
    std::vector<VerificationReport> parts(ctx.workers);
    parallel_chunks(n, ctx.workers, [&](unsigned w, std::size_t lo, std::size_t hi) {
        for (std::size_t a = lo; a < hi; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                Element ab = signed_bracket(a, b);
                for (std::size_t c = 0; c < n; ++c)
                    check_triple(parts[w], ab, box[a], box[b], box[c], signed_bracket(b, c),
                                 signed_bracket(c, a));
            }
    });
    for (auto &p : parts)
        rep.absorb(std::move(p));
    rep.sort_failures();
    return rep;
}

VerificationReport suite_witt_compat(const SuiteContext &ctx) {
    const Signature &sig = ctx.cfg.sig;
    const auto ell = static_cast<std::size_t>(sig.ell());
    VerificationReport rep;

    std::int64_t samples = ctx.cfg.samples > 0 ? ctx.cfg.samples : 1000;
    Rng rng(ctx.seed);
    for (std::int64_t t = 0; t < samples; ++t) {
        Monomial u = random_monomial(ctx.cfg.box, *ctx.cfg.lattice, rng);
        Monomial v = random_monomial(ctx.cfg.box, *ctx.cfg.lattice, rng);
        u.mu.assign(ell, 0); // degree-one operators u d_p need u, v in the base algebra
        v.mu.assign(ell, 0);
        auto p = static_cast<std::size_t>(rng.uniform(0, sig.ell() - 1));
        auto q = static_cast<std::size_t>(rng.uniform(0, sig.ell() - 1));

        Monomial udp = u, vdq = v;
        udp.mu[p] = 1;
        vdq.mu[q] = 1;
        Element lhs = bracket_monomials(sig, udp, vdq);

        // u d_p(v) d_q - v d_q(u) d_p
        Element rhs(sig);
        Element dv = apply_partial(sig, p, elem(sig, v));
        for (const auto &[w, c] : dv.terms()) {
            Monomial m = w;
            m.alpha = m.alpha + u.alpha;
            for (std::size_t k = 0; k < ell; ++k)
                m.i[k] += u.i[k];
            m.mu[q] = 1;
            rhs.add_term(m, c);
        }
        Element du = apply_partial(sig, q, elem(sig, u));
        for (const auto &[w, c] : du.terms()) {
            Monomial m = w;
            m.alpha = m.alpha + v.alpha;
            for (std::size_t k = 0; k < ell; ++k)
                m.i[k] += v.i[k];
            m.mu[p] = 1;
            rhs.add_term(m, -c);
        }

        ++rep.checked;
        if (!(lhs == rhs))
            rep.add_failure(print_monomial(udp) + " , " + print_monomial(vdq),
                            print_element(rhs), print_element(lhs),
                            ctx.eval_repro("bracket", print_monomial(udp), print_monomial(vdq)));
    }
    return rep;
}

// ---------------------------------------------------------------- cocycle suites

void add_form_failures(VerificationReport &rep, const SuiteContext &ctx,
                       const std::string &spec, VerificationReport part) {
    for (auto &f : part.failures) {
        if (f.repro.empty()) {
            auto comma = f.inputs.find(" , ");
            if (comma != std::string::npos && f.inputs.find(" , ", comma + 3) == std::string::npos)
                f.repro = ctx.cocycle_repro(spec, f.inputs.substr(0, comma),
                                            f.inputs.substr(comma + 3));
            else
                f.repro = ctx.verify_repro();
        }
        rep.failures.push_back(std::move(f));
    }
    rep.checked += part.checked;
}

VerificationReport suite_cocycle_phi0(const SuiteContext &ctx) {
    require_suite_signature(ctx, Signature{0, 0, 0, 1});
    const Signature &sig = ctx.cfg.sig;
    std::vector<Monomial> box = enumerate_box(ctx.cfg.box, *ctx.cfg.lattice);
    BilinearForm form = phi0_form(sig);

    VerificationReport rep;
    add_form_failures(rep, ctx, "{\"kind\":\"phi0\"}",
                      check_antisymmetry_box(form, box, ctx.workers));
    add_form_failures(rep, ctx, "{\"kind\":\"phi0\"}",
                      check_cocycle_identity_box(sig, form, box, ctx.workers));
    rep.sort_failures();
    return rep;
}

VerificationReport suite_cocycle_phi_gamma(const SuiteContext &ctx) {
    require_suite_signature(ctx, Signature{0, 0, 1, 0});
    const Signature &sig = ctx.cfg.sig;
    std::vector<Monomial> box = enumerate_box(ctx.cfg.box, *ctx.cfg.lattice);
    BracketCache cache(sig, box, ctx.workers);

    VerificationReport rep;
    for (std::int64_t g : {-1, 0, 1, 2}) {
        GammaElement gamma = ctx.cfg.lattice->element(IntVec{g});
        BilinearForm form = phi_gamma_form(sig, gamma);
        std::string spec = "{\"kind\":\"phi_gamma\",\"gamma\":[\"" +
                           rat_to_string(gamma.embed(0)) + "\"]}";
        add_form_failures(rep, ctx, spec, check_antisymmetry_box(form, box, ctx.workers));
        add_form_failures(rep, ctx, spec,
                          check_cocycle_identity_box(sig, form, box, ctx.workers, &cache));
    }
    rep.sort_failures();
    return rep;
}

VerificationReport suite_binomial_330(const SuiteContext &ctx) {
    VerificationReport rep;
    for (std::int64_t mu = 0; mu <= kBinomialBound; ++mu)
        for (std::int64_t nu = 0; nu <= kBinomialBound; ++nu)
            for (std::int64_t lam = 0; lam <= kBinomialBound; ++lam)
                for (std::int64_t s = 0; s <= mu + nu + lam + 1; ++s) {
                    ++rep.checked;
                    auto res = check_binomial_identity(mu, nu, lam, s);
                    if (!res.pass)
                        rep.add_failure("mu=" + std::to_string(mu) + " nu=" + std::to_string(nu) +
                                            " lam=" + std::to_string(lam) +
                                            " s=" + std::to_string(s),
                                        rat_to_string(res.rhs), rat_to_string(res.lhs),
                                        ctx.verify_repro());
                }
    return rep;
}

// ---------------------------------------------------------------- normalization

BilinearForm default_base_form(const SuiteContext &ctx, std::uint64_t seed) {
    const Signature &sig = ctx.cfg.sig;
    if (ctx.cfg.cocycle)
        return form_from_spec(ctx.cfg, *ctx.cfg.cocycle);
    if (sig == Signature{0, 0, 0, 1})
        return phi0_form(sig);
    if (sig == Signature{0, 0, 1, 0})
        return phi_gamma_form(sig, ctx.cfg.lattice->zero());
    Rng rng(seed);
    return coboundary_form(sig, LinearFunctional(random_functional_values(
                                    ctx.cfg.box, *ctx.cfg.lattice, rng, kFunctionalEntries)));
}

BilinearForm seeded_coboundary(const SuiteContext &ctx, std::uint64_t seed) {
    Rng rng(seed);
    return coboundary_form(ctx.cfg.sig,
                           LinearFunctional(random_functional_values(
                               ctx.cfg.box, *ctx.cfg.lattice, rng, kFunctionalEntries)));
}

VerificationReport suite_normalize_postconditions(const SuiteContext &ctx) {
    const Signature &sig = ctx.cfg.sig;
    GammaElement tau = require_tau(ctx.cfg);
    std::vector<Monomial> box = enumerate_box(ctx.cfg.box, *ctx.cfg.lattice);
    const auto rank = ctx.cfg.lattice->rank();

    VerificationReport rep;
    for (int t = 0; t <= ctx.cfg.trials; ++t) {
        BilinearForm base = default_base_form(ctx, sub_seed(ctx.seed, 0));
        BilinearForm psi =
            t == 0 ? base : sum_forms(base, seeded_coboundary(ctx, sub_seed(ctx.seed, t)));
        NormalizedCocycle norm(sig, psi, tau);

        auto check_pair = [&](const Monomial &left, const Monomial &m) {
            ++rep.checked;
            try {
                Rational v = norm.phi(left, m);
                if (v != 0)
                    rep.add_failure("trial " + std::to_string(t) + ": phi(" +
                                        print_monomial(left) + ", " + print_monomial(m) + ")",
                                    "0", rat_to_string(v), ctx.verify_repro());
            } catch (const NonCocycleInput &e) {
                rep.add_failure("trial " + std::to_string(t) + ": phi(" + print_monomial(left) +
                                    ", " + print_monomial(m) + ")",
                                "0", e.what(), ctx.verify_repro());
            }
        };

        for (const auto &m : box) {
            for (std::int64_t p = 0; p < sig.ell(); ++p)
                check_pair(deriv_monomial(sig, rank, static_cast<std::size_t>(p)), m);
            for (std::int64_t p = 0; p < sig.prefix(3); ++p)
                check_pair(t_deriv_monomial(sig, rank, static_cast<std::size_t>(p)), m);
        }
    }
    return rep;
}

VerificationReport suite_lemma22_vanish(const SuiteContext &ctx) {
    if (ctx.cfg.sig.prefix(2) < 1)
        throw SuiteError("suite lemma22-vanish requires l1 + l2 >= 1");
    const Signature &sig = ctx.cfg.sig;
    GammaElement tau = require_tau(ctx.cfg);
    std::vector<Monomial> box = enumerate_box(ctx.cfg.box, *ctx.cfg.lattice);

    VerificationReport rep;
    for (int t = 0; t < ctx.cfg.trials; ++t) {
        BilinearForm psi = seeded_coboundary(ctx, sub_seed(ctx.seed, t));
        NormalizedCocycle norm(sig, psi, tau);
        for (const auto &u : box)
            for (const auto &v : box) {
                ++rep.checked;
                Rational val = norm.phi(u, v);
                if (val != 0)
                    rep.add_failure("trial " + std::to_string(t) + ": phi(" + print_monomial(u) +
                                        ", " + print_monomial(v) + ")",
                                    "0", rat_to_string(val), ctx.verify_repro());
            }
    }
    return rep;
}

VerificationReport suite_case1_equivalence(const SuiteContext &ctx) {
    require_suite_signature(ctx, Signature{0, 0, 0, 1});
    const Signature &sig = ctx.cfg.sig;
    GammaElement tau = require_tau(ctx.cfg);
    if (tau.embed(0) != 1)
        throw SuiteError("suite case1-equivalence requires tau embedding 1 (rescale Gamma)");
    std::vector<Monomial> box = enumerate_box(ctx.cfg.box, *ctx.cfg.lattice);
    const auto ell = static_cast<std::size_t>(sig.ell());

    Monomial x_plus{tau, IntVec(ell, 0), IntVec(ell, 0)};
    Monomial x_minus{-tau, IntVec(ell, 0), IntVec(ell, 0)};

    VerificationReport rep;
    for (int t = 0; t <= ctx.cfg.trials; ++t) {
        BilinearForm psi = t == 0 ? phi0_form(sig)
                                  : sum_forms(phi0_form(sig),
                                              seeded_coboundary(ctx, sub_seed(ctx.seed, t)));
        NormalizedCocycle norm(sig, psi, tau);
        Rational c = norm.phi(x_plus, x_minus);
        for (const auto &u : box)
            for (const auto &v : box) {
                ++rep.checked;
                Rational got = norm.phi(u, v);
                Rational want = c * phi0_eval(sig, u, v);
                if (got != want)
                    rep.add_failure("trial " + std::to_string(t) + ": phi(" + print_monomial(u) +
                                        ", " + print_monomial(v) + ")",
                                    rat_to_string(want), rat_to_string(got), ctx.verify_repro());
            }
    }
    return rep;
}

// ---------------------------------------------------------------- extension + tables

VerificationReport suite_extension_jacobi(const SuiteContext &ctx) {
    require_suite_signature(ctx, Signature{0, 0, 1, 0});
    const Signature &sig = ctx.cfg.sig;
    std::vector<Monomial> box = enumerate_box(ctx.cfg.box, *ctx.cfg.lattice);
    BilinearForm form = ctx.cfg.cocycle ? form_from_spec(ctx.cfg, *ctx.cfg.cocycle)
                                        : phi_gamma_form(sig, ctx.cfg.lattice->zero());
    VerificationReport rep = check_ext_jacobi(sig, box, form, ctx.workers);
    for (auto &f : rep.failures)
        if (f.repro.empty())
            f.repro = ctx.verify_repro();
    return rep;
}

VerificationReport suite_virasoro_regression(const SuiteContext &ctx) {
    const Signature &sig = ctx.cfg.sig;
    VerificationReport rep;

    if (sig == Signature{0, 0, 0, 1}) {
        if (ctx.cfg.lattice->rank() != 1)
            throw SuiteError("virasoro-regression needs a rank-1 Gamma on (0,0,0,1)");
        for (std::int64_t a = -kVirasoroBound; a <= kVirasoroBound; ++a) {
            GammaElement alpha = ctx.cfg.lattice->element(IntVec{a});
            Monomial u{alpha, IntVec{0}, IntVec{1}};
            Monomial v{-alpha, IntVec{0}, IntVec{1}};
            // independent oracle: the cubic computed by direct products
            const Rational &av = alpha.embed(0);
            Rational expect = -(av * av * av - av) / 6;
            ++rep.checked;
            Rational got = phi0_eval(sig, u, v);
            if (got != expect)
                rep.add_failure("phi0(" + print_monomial(u) + ", " + print_monomial(v) + ")",
                                rat_to_string(expect), rat_to_string(got),
                                ctx.cocycle_repro("{\"kind\":\"phi0\"}", print_monomial(u),
                                                  print_monomial(v)));
        }
        return rep;
    }

    if (sig == Signature{0, 0, 1, 0}) {
        auto rows = virasoro_table(sig, ctx.cfg.lattice->rank(), kVirasoroBound);
        for (const auto &r : rows) {
            Rational m(r.m);
            Rational expect_central =
                r.m + r.n == 0 ? -(m * m * m - m) / 6 : Rational(0);
            Rational expect_body(r.n - r.m);
            ++rep.checked;
            if (r.central != expect_central || r.body_coeff != expect_body)
                rep.add_failure("L_" + std::to_string(r.m) + ", L_" + std::to_string(r.n),
                                "body " + rat_to_string(expect_body) + ", central " +
                                    rat_to_string(expect_central),
                                "body " + rat_to_string(r.body_coeff) + ", central " +
                                    rat_to_string(r.central),
                                "weylk table virasoro --config " + ctx.ref + " --bound " +
                                    std::to_string(kVirasoroBound));
        }
        return rep;
    }

    throw SuiteError("virasoro-regression requires signature (0,0,0,1) or (0,0,1,0)");
}

VerificationReport suite_triviality_phi0(const SuiteContext &ctx) {
    require_suite_signature(ctx, Signature{0, 0, 0, 1});
    const Signature &sig = ctx.cfg.sig;
    std::vector<Monomial> box = enumerate_box(ctx.cfg.box, *ctx.cfg.lattice);

    TrivialityOutcome out = triviality_test(sig, phi0_form(sig), box);
    VerificationReport rep;
    rep.checked = out.equations.size();

    if (out.feasible) {
        rep.add_failure("triviality_test(phi0) over the box",
                        "Infeasible (certificate of nontriviality)",
                        "Feasible (inconclusive window)", ctx.verify_repro());
        return rep;
    }

    auto cert = nlohmann::json::array();
    const auto &mult = out.certificate->multipliers;
    for (std::size_t r = 0; r < mult.size(); ++r) {
        if (mult[r] == 0)
            continue;
        cert.push_back({{"equation", r},
                        {"pair", print_monomial(out.equations[r].first) + " , " +
                                     print_monomial(out.equations[r].second)},
                        {"multiplier", rat_to_string(mult[r])}});
    }
    rep.extra = {{"verdict", "infeasible"},
                 {"certificate", std::move(cert)},
                 {"contradiction", rat_to_string(out.certificate->contradiction)},
                 {"unknowns", out.unknowns.size()}};
    return rep;
}

VerificationReport suite_parser_roundtrip(const SuiteContext &ctx) {
    std::int64_t n = ctx.cfg.samples > 0 ? ctx.cfg.samples : kRoundTripDefault;
    Rng rng(ctx.seed);
    VerificationReport rep;

    ++rep.checked;
    if (!parse_element("0", *ctx.cfg.lattice).is_zero())
        rep.add_failure("\"0\"", "zero element", "nonzero", ctx.verify_repro());

    for (std::int64_t t = 0; t < n; ++t) {
        Element e = random_element(ctx.cfg.box, *ctx.cfg.lattice, rng, 4);
        std::string text = print_element(e);
        ++rep.checked;
        try {
            Element back = parse_element(text, *ctx.cfg.lattice);
            if (!(back == e))
                rep.add_failure("\"" + text + "\"", "round-trip equality",
                                print_element(back), ctx.verify_repro());
        } catch (const ParseError &err) {
            rep.add_failure("\"" + text + "\"", "parse success", err.what(),
                            ctx.verify_repro());
        }
    }
    return rep;
}

} // namespace

const std::vector<std::string> &suite_names() {
    static const std::vector<std::string> names = {
        "assoc",          "jacobi",
        "witt-compat",    "cocycle-phi0",
        "cocycle-phi-gamma", "normalize-postconditions",
        "lemma22-vanish", "case1-equivalence",
        "binomial-330",   "extension-jacobi",
        "virasoro-regression", "triviality-phi0",
        "parser-roundtrip"};
    return names;
}

VerificationReport run_suite(const std::string &name, const Config &cfg,
                             const SuiteOptions &opts) {
    SuiteContext ctx{cfg, opts.seed.value_or(cfg.seed),
                     opts.workers == 0 ? default_workers() : opts.workers, opts.config_ref,
                     name};

    using Runner = VerificationReport (*)(const SuiteContext &);
    static const std::map<std::string, Runner> table = {
        {"assoc", suite_assoc},
        {"jacobi", suite_jacobi},
        {"witt-compat", suite_witt_compat},
        {"cocycle-phi0", suite_cocycle_phi0},
        {"cocycle-phi-gamma", suite_cocycle_phi_gamma},
        {"normalize-postconditions", suite_normalize_postconditions},
        {"lemma22-vanish", suite_lemma22_vanish},
        {"case1-equivalence", suite_case1_equivalence},
        {"binomial-330", suite_binomial_330},
        {"extension-jacobi", suite_extension_jacobi},
        {"virasoro-regression", suite_virasoro_regression},
        {"triviality-phi0", suite_triviality_phi0},
        {"parser-roundtrip", suite_parser_roundtrip},
    };

    auto it = table.find(name);
    if (it == table.end()) {
        std::string known;
        for (const auto &s : suite_names())
            known += (known.empty() ? "" : ", ") + s;
        throw SuiteError("unknown suite \"" + name + "\" (known: " + known + ")");
    }

    auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep = it->second(ctx);
    auto t1 = std::chrono::steady_clock::now();
    rep.suite = name;
    rep.seed = ctx.seed;
    rep.config_echo = config_echo(cfg);
    rep.wall_seconds = std::chrono::duration<double>(t1 - t0).count();
    rep.sort_failures();
    return rep;
}

} // namespace weylk
