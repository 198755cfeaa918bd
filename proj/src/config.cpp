#include "weylk/config.hpp"

#include <fstream>

namespace weylk {

namespace {

using nlohmann::json;

RatVec rat_vec_from_json(const json &arr, const char *what) {
    if (!arr.is_array())
        throw ConfigError(std::string(what) + " must be an array of rational strings");
    RatVec v;
    for (const auto &e : arr) {
        if (e.is_string())
            v.push_back(rat_from_string(e.get<std::string>()));
        else if (e.is_number_integer())
            v.push_back(Rational(e.get<std::int64_t>()));
        else
            throw ConfigError(std::string(what) + ": entries must be rational strings");
    }
    return v;
}

IntVec int_vec_from_json(const json &arr, const char *what) {
    if (!arr.is_array())
        throw ConfigError(std::string(what) + " must be an array of integers");
    IntVec v;
    for (const auto &e : arr) {
        if (!e.is_number_integer())
            throw ConfigError(std::string(what) + ": entries must be integers");
        v.push_back(e.get<std::int64_t>());
    }
    return v;
}

GammaElement gamma_from_ambient(const Config &cfg, const json &arr, const char *what) {
    RatVec ambient = rat_vec_from_json(arr, what);
    auto coeffs = cfg.lattice->membership(ambient);
    if (!coeffs)
        throw NotInGamma(std::string(what) + ": vector is not in Gamma");
    return cfg.lattice->element(*coeffs);
}

} // namespace

Config load_config(const nlohmann::json &doc) {
    Config cfg;
    if (!doc.contains("signature") || !doc["signature"].is_array() ||
        doc["signature"].size() != 4)
        throw ConfigError("config: \"signature\" must be [l1,l2,l3,l4]");
    const auto &s = doc["signature"];
    cfg.sig = make_signature(s[0].get<std::int64_t>(), s[1].get<std::int64_t>(),
                             s[2].get<std::int64_t>(), s[3].get<std::int64_t>());

    std::vector<RatVec> gens;
    if (doc.contains("gamma")) {
        if (!doc["gamma"].is_array())
            throw ConfigError("config: \"gamma\" must be an array of generators");
        for (const auto &g : doc["gamma"])
            gens.push_back(rat_vec_from_json(g, "gamma generator"));
    }
    cfg.lattice = lattice_validate(cfg.sig, std::move(gens));

    if (doc.contains("tau")) {
        GammaElement tau = cfg.lattice->element(int_vec_from_json(doc["tau"], "tau"));
        for (std::int64_t p = cfg.sig.l1; p < cfg.sig.ell(); ++p)
            if (tau.embed(static_cast<std::size_t>(p)) == 0)
                throw InvalidTau("config: tau coordinate " + std::to_string(p) +
                                 " vanishes; coordinates from l1 on must be nonzero");
        cfg.tau = std::move(tau);
    }

    if (doc.contains("box")) {
        const auto &b = doc["box"];
        auto field = [&](const char *k) -> std::int64_t {
            if (!b.contains(k) || !b[k].is_number_integer() || b[k].get<std::int64_t>() < 0)
                throw ConfigError(std::string("config: box.") + k +
                                  " must be a nonnegative integer");
            return b[k].get<std::int64_t>();
        };
        cfg.box = Box{field("gammaCoeffBound"), field("jBound"), field("muBound")};
    }

    if (doc.contains("cocycle"))
        cfg.cocycle = doc["cocycle"];
    if (doc.contains("seed"))
        cfg.seed = doc["seed"].get<std::uint64_t>();
    if (doc.contains("samples"))
        cfg.samples = doc["samples"].get<std::int64_t>();
    if (doc.contains("trials"))
        cfg.trials = doc["trials"].get<int>();
    if (cfg.trials < 1)
        throw ConfigError("config: trials must be >= 1");
    return cfg;
}

Config load_config_file(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file: " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::exception &e) {
        throw ConfigError("config file " + path + " is not valid JSON: " + e.what());
    }
    return load_config(doc);
}

GammaElement require_tau(const Config &cfg) {
    if (cfg.tau)
        return *cfg.tau;
    // Default: coefficient vector (1,...,1), the natural choice for Gamma = Z.
    IntVec ones(cfg.lattice->rank(), 1);
    GammaElement tau = cfg.lattice->element(ones);
    for (std::int64_t p = cfg.sig.l1; p < cfg.sig.ell(); ++p)
        if (tau.embed(static_cast<std::size_t>(p)) == 0)
            throw InvalidTau("no usable default tau: supply \"tau\" in the config");
    return tau;
}

nlohmann::json config_echo(const Config &cfg) {
    json j;
    j["signature"] = {cfg.sig.l1, cfg.sig.l2, cfg.sig.l3, cfg.sig.l4};
    auto gens = json::array();
    for (std::size_t k = 0; k < cfg.lattice->rank(); ++k) {
        auto g = json::array();
        for (const auto &x : cfg.lattice->generator(k))
            g.push_back(rat_to_string(x));
        gens.push_back(std::move(g));
    }
    j["gamma"] = std::move(gens);
    if (cfg.tau) {
        auto t = json::array();
        for (auto c : cfg.tau->coeffs())
            t.push_back(c);
        j["tau"] = std::move(t);
    }
    j["box"] = {{"gammaCoeffBound", cfg.box.gammaCoeffBound},
                {"jBound", cfg.box.jBound},
                {"muBound", cfg.box.muBound}};
    if (cfg.cocycle)
        j["cocycle"] = *cfg.cocycle;
    j["samples"] = cfg.samples;
    j["trials"] = cfg.trials;
    return j;
}

BilinearForm form_from_spec(const Config &cfg, const nlohmann::json &spec) {
    if (!spec.is_object() || !spec.contains("kind"))
        throw ConfigError("cocycle spec must be an object with a \"kind\"");
    const std::string kind = spec["kind"].get<std::string>();

    if (kind == "phi0")
        return phi0_form(cfg.sig);

    if (kind == "phi_gamma") {
        if (!spec.contains("gamma"))
            throw ConfigError("phi_gamma spec needs \"gamma\"");
        return phi_gamma_form(cfg.sig, gamma_from_ambient(cfg, spec["gamma"], "phi_gamma.gamma"));
    }

    if (kind == "combined") {
        if (!spec.contains("coeffs") || !spec["coeffs"].is_array())
            throw ConfigError("combined spec needs a \"coeffs\" array");
        GammaCoeffMap coeffs;
        for (const auto &entry : spec["coeffs"]) {
            GammaElement g = gamma_from_ambient(cfg, entry.at("gamma"), "combined.gamma");
            coeffs[g] = rat_from_string(entry.at("b").get<std::string>());
        }
        return combine_cocycles(cfg.sig, std::move(coeffs));
    }

    if (kind == "coboundary") {
        if (!spec.contains("f") || !spec["f"].is_array())
            throw ConfigError("coboundary spec needs an \"f\" array");
        LinearFunctional f;
        for (const auto &entry : spec["f"]) {
            Monomial m = monomial_from_json(cfg, entry.at("monomial"));
            f.set(m, rat_from_string(entry.at("value").get<std::string>()));
        }
        return coboundary_form(cfg.sig, std::move(f));
    }

    if (kind == "sum") {
        if (!spec.contains("parts") || !spec["parts"].is_array() || spec["parts"].empty())
            throw ConfigError("sum spec needs a nonempty \"parts\" array");
        BilinearForm acc = form_from_spec(cfg, spec["parts"][0]);
        for (std::size_t k = 1; k < spec["parts"].size(); ++k)
            acc = sum_forms(std::move(acc), form_from_spec(cfg, spec["parts"][k]));
        return acc;
    }

    throw ConfigError("unknown cocycle kind \"" + kind + "\"");
}

nlohmann::json monomial_to_json(const Monomial &m) {
    json j;
    auto alpha = json::array();
    for (const auto &x : m.alpha.embedding())
        alpha.push_back(rat_to_string(x));
    j["alpha"] = std::move(alpha);
    j["i"] = m.i;
    j["mu"] = m.mu;
    return j;
}

Monomial monomial_from_json(const Config &cfg, const nlohmann::json &j) {
    GammaElement alpha = gamma_from_ambient(cfg, j.at("alpha"), "monomial.alpha");
    IntVec i = int_vec_from_json(j.at("i"), "monomial.i");
    IntVec mu = int_vec_from_json(j.at("mu"), "monomial.mu");
    return make_monomial(cfg.sig, std::move(alpha), std::move(i), std::move(mu));
}

nlohmann::json element_to_json(const Element &e) {
    auto arr = nlohmann::json::array();
    for (const auto &[m, c] : e.terms())
        arr.push_back({{"coefficient", rat_to_string(c)}, {"monomial", monomial_to_json(m)}});
    return arr;
}

} // namespace weylk
