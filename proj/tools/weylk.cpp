#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "weylk/extension.hpp"
#include "weylk/linalg.hpp"
#include "weylk/normalize.hpp"
#include "weylk/parser.hpp"
#include "weylk/suites.hpp"

using namespace weylk;
using nlohmann::json;

namespace {

BilinearForm form_from_arg(const Config &cfg, const std::string &arg) {
    std::string text = arg;
    if (!arg.empty() && arg[0] == '@') {
        std::ifstream in(arg.substr(1));
        if (!in)
            throw ConfigError("cannot open form file: " + arg.substr(1));
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    json spec;
    try {
        spec = json::parse(text);
    } catch (const json::exception &e) {
        throw ConfigError("--form is not valid JSON: " + std::string(e.what()));
    }
    return form_from_spec(cfg, spec);
}

void write_out(const std::string &path, const json &doc) {
    if (path.empty()) {
        std::cout << doc.dump(2) << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw ConfigError("cannot write output file: " + path);
    out << doc.dump(2) << "\n";
}

int cmd_verify(const std::string &config_path, const std::string &suite, std::uint64_t seed,
               bool seed_set, const std::string &out_path, unsigned jobs, bool timings) {
    Config cfg = load_config_file(config_path);
    SuiteOptions opts;
    if (seed_set)
        opts.seed = seed;
    opts.workers = jobs;
    opts.config_ref = config_path;
    VerificationReport rep = run_suite(suite, cfg, opts);
    std::cerr << rep.text();
    if (!out_path.empty())
        write_out(out_path, rep.to_json(timings));
    else
        std::cout << rep.to_json(timings).dump(2) << "\n";
    return rep.passed() ? 0 : 1;
}

int cmd_eval(const std::string &config_path, const std::string &op, const std::string &form_arg,
             const std::string &e1, const std::string &e2, bool as_json) {
    Config cfg = load_config_file(config_path);
    Element a = parse_element(e1, *cfg.lattice);
    Element b = parse_element(e2, *cfg.lattice);

    if (op == "cocycle") {
        std::string arg = form_arg;
        if (arg.empty()) {
            if (!cfg.cocycle)
                throw ConfigError("eval cocycle: give --form or a \"cocycle\" entry in the config");
            arg = cfg.cocycle->dump();
        }
        BilinearForm form = form_from_arg(cfg, arg);
        Rational v = form(a, b);
        if (as_json)
            std::cout << json{{"value", rat_to_string(v)}}.dump(2) << "\n";
        else
            std::cout << rat_to_string(v) << "\n";
        return 0;
    }

    Element r = op == "mul" ? mul(a, b) : bracket(a, b);
    if (as_json)
        std::cout << json{{"element", element_to_json(r)}, {"text", print_element(r)}}.dump(2)
                  << "\n";
    else
        std::cout << print_element(r) << "\n";
    return 0;
}

int cmd_normalize(const std::string &config_path, const std::string &form_arg,
                  const std::string &pairs_path, const std::string &out_path) {
    Config cfg = load_config_file(config_path);
    std::string arg = form_arg;
    if (arg.empty()) {
        if (!cfg.cocycle)
            throw ConfigError("normalize: give --form or a \"cocycle\" entry in the config");
        arg = cfg.cocycle->dump();
    }
    BilinearForm psi = form_from_arg(cfg, arg);
    NormalizedCocycle norm(cfg.sig, psi, require_tau(cfg));

    std::ifstream in(pairs_path);
    if (!in)
        throw ConfigError("cannot open pairs file: " + pairs_path);
    json pairs;
    try {
        in >> pairs;
    } catch (const json::exception &e) {
        throw ConfigError("pairs file is not valid JSON: " + std::string(e.what()));
    }
    if (!pairs.is_array())
        throw ConfigError("pairs file must be a JSON array of [expr, expr] pairs");

    json results = json::array();
    for (const auto &p : pairs) {
        if (!p.is_array() || p.size() != 2)
            throw ConfigError("each pair must be [\"expr\", \"expr\"]");
        Element u = parse_element(p[0].get<std::string>(), *cfg.lattice);
        Element v = parse_element(p[1].get<std::string>(), *cfg.lattice);
        Rational psi_val = psi(u, v);
        Rational f_val = norm.f_value(bracket(u, v));
        Rational phi_val = norm.phi(u, v);
        results.push_back({{"u", p[0]},
                           {"v", p[1]},
                           {"psi", rat_to_string(psi_val)},
                           {"f_bracket", rat_to_string(f_val)},
                           {"phi", rat_to_string(phi_val)}});
    }
    json doc = {{"command", "normalize"},
                {"config", config_echo(cfg)},
                {"form", json::parse(arg)},
                {"results", std::move(results)}};
    write_out(out_path, doc);
    return 0;
}

int cmd_table(const std::string &config_path, std::int64_t bound, const std::string &out_path,
              bool as_json) {
    Config cfg = load_config_file(config_path);
    auto rows = virasoro_table(cfg.sig, cfg.lattice->rank(), bound);
    if (as_json || !out_path.empty()) {
        json doc = {{"command", "table virasoro"},
                    {"config", config_echo(cfg)},
                    {"bound", bound},
                    {"rows", virasoro_table_json(rows)}};
        write_out(out_path, doc);
    } else {
        std::cout << virasoro_table_text(rows);
    }
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"weylk: exact verification kernel for generalized differential-operator "
                 "Lie algebras"};
    app.require_subcommand(1);

    std::string config_path, suite, out_path, form_arg, pairs_path;
    std::string expr1, expr2;
    std::uint64_t seed = 0;
    unsigned jobs = 0;
    bool timings = false, as_json = false;
    std::int64_t bound = 6;

    auto *verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--config", config_path, "config file")->required();
    verify->add_option("--suite", suite, "suite name")->required();
    auto *seed_opt = verify->add_option("--seed", seed, "64-bit seed for randomized suites");
    verify->add_option("--out", out_path, "write the JSON report here");
    verify->add_option("--jobs", jobs, "worker count (default: machine parallelism)");
    verify->add_flag("--timings", timings, "include wall time in the JSON report");

    auto *eval = app.add_subcommand("eval", "evaluate a product, bracket or cocycle");
    eval->require_subcommand(1);
    CLI::App *eval_ops[3];
    const char *op_names[3] = {"mul", "bracket", "cocycle"};
    for (int k = 0; k < 3; ++k) {
        auto *sub = eval->add_subcommand(op_names[k]);
        sub->add_option("--config", config_path, "config file")->required();
        sub->add_option("expr1", expr1, "first element expression")->required();
        sub->add_option("expr2", expr2, "second element expression")->required();
        sub->add_flag("--json", as_json, "machine-readable output");
        if (std::string(op_names[k]) == "cocycle")
            sub->add_option("--form", form_arg, "cocycle spec (inline JSON or @file)");
        eval_ops[k] = sub;
    }

    auto *normalize = app.add_subcommand("normalize", "normalize a cocycle and evaluate pairs");
    normalize->add_option("--config", config_path, "config file")->required();
    normalize->add_option("--form", form_arg, "cocycle spec (inline JSON or @file)");
    normalize->add_option("--pairs", pairs_path, "JSON array of [expr, expr] pairs")->required();
    normalize->add_option("--out", out_path, "write results here");

    auto *table = app.add_subcommand("table", "print regression tables");
    auto *virasoro = table->add_subcommand("virasoro", "Witt-restriction table of the extension");
    virasoro->add_option("--config", config_path, "config file")->required();
    virasoro->add_option("--bound", bound, "|m|, |n| bound");
    virasoro->add_option("--out", out_path, "write JSON rows here");
    virasoro->add_flag("--json", as_json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed())
            return cmd_verify(config_path, suite, seed, seed_opt->count() > 0, out_path, jobs,
                              timings);
        if (eval->parsed()) {
            for (int k = 0; k < 3; ++k)
                if (eval_ops[k]->parsed())
                    return cmd_eval(config_path, op_names[k], form_arg, expr1, expr2, as_json);
        }
        if (normalize->parsed())
            return cmd_normalize(config_path, form_arg, pairs_path, out_path);
        if (table->parsed() && virasoro->parsed())
            return cmd_table(config_path, bound, out_path, as_json);
        std::cerr << "no subcommand\n";
        return 2;
    } catch (const NonCocycleInput &e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return 1;
    } catch (const ConfigError &e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
