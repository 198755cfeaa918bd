#pragma once

#include <memory>
#include <optional>

#include "json.hpp"
#include "weylk/box.hpp"
#include "weylk/cocycle.hpp"

namespace weylk {

/// A fully validated run configuration.  The JSON document looks like
///
///   {
///     "signature": [0, 0, 1, 0],
///     "gamma": [["1"]],                 // generators, ambient rationals
///     "tau": [1],                       // generator coefficients, optional
///     "box": {"gammaCoeffBound": 2, "jBound": 2, "muBound": 2},
///     "cocycle": {"kind": "phi0"},      // optional default form
///     "seed": 0, "samples": 0, "trials": 10
///   }
///
/// All rationals travel as strings so exactness survives serialization.
struct Config {
    Signature sig{};
    std::shared_ptr<const GammaLattice> lattice;
    std::optional<GammaElement> tau;
    Box box;
    std::optional<nlohmann::json> cocycle;
    std::uint64_t seed = 0;
    std::int64_t samples = 0; // 0 = exhaustive where a suite allows sampling
    int trials = 10;          // randomized repetitions in seeded suites
};

Config load_config(const nlohmann::json &doc);
Config load_config_file(const std::string &path);

/// tau, defaulting to coefficients (1,...,1) when absent; throws
/// InvalidTau/ConfigError if that default fails the nonvanishing check.
GammaElement require_tau(const Config &cfg);

/// Canonical echo of the configuration for reports.
nlohmann::json config_echo(const Config &cfg);

/// Cocycle specifications:
///   {"kind":"phi0"}
///   {"kind":"phi_gamma","gamma":["1"]}
///   {"kind":"combined","coeffs":[{"gamma":["0"],"b":"2"},...]}
///   {"kind":"coboundary","f":[{"monomial":{...},"value":"1/2"},...]}
///   {"kind":"sum","parts":[...]}
BilinearForm form_from_spec(const Config &cfg, const nlohmann::json &spec);

/// Canonical monomial/element records: {"alpha":[rationals],"i":[...],"mu":[...]}
/// and arrays of {"coefficient":..., "monomial":...}.
nlohmann::json monomial_to_json(const Monomial &m);
Monomial monomial_from_json(const Config &cfg, const nlohmann::json &j);
nlohmann::json element_to_json(const Element &e);

} // namespace weylk
