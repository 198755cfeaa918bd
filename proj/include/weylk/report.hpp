#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace weylk {

/// One failed check: the offending inputs, what was expected, what came
/// out, and a command line that reproduces just this check.
struct Failure {
    std::string inputs;
    std::string expected;
    std::string actual;
    std::string repro;
};

/// Outcome of one verification suite or checker.  Reports are
/// byte-deterministic for a fixed config and seed: failures are sorted
/// canonically and wall time is kept out of the serialized form unless
/// explicitly requested.
struct VerificationReport {
    std::string suite;
    nlohmann::json config_echo = nlohmann::json::object();
    std::uint64_t seed = 0;
    std::uint64_t checked = 0;
    std::vector<Failure> failures;
    /// Suite-specific payload (e.g. a triviality certificate).
    nlohmann::json extra;
    double wall_seconds = 0.0;

    bool passed() const { return failures.empty(); }
    std::uint64_t failed() const { return failures.size(); }

    void add_failure(std::string inputs, std::string expected, std::string actual,
                     std::string repro = {}) {
        failures.push_back(
            {std::move(inputs), std::move(expected), std::move(actual), std::move(repro)});
    }

    /// Order-independent merge: used when workers report their own chunks.
    void absorb(VerificationReport other) {
        checked += other.checked;
        for (auto &f : other.failures)
            failures.push_back(std::move(f));
    }

    void sort_failures() {
        std::sort(failures.begin(), failures.end(), [](const Failure &a, const Failure &b) {
            return std::tie(a.inputs, a.expected, a.actual) <
                   std::tie(b.inputs, b.expected, b.actual);
        });
    }

    nlohmann::json to_json(bool with_timings = false) const {
        nlohmann::json j;
        j["suite"] = suite;
        j["config"] = config_echo;
        j["seed"] = seed;
        j["checked"] = checked;
        j["failed"] = failed();
        auto arr = nlohmann::json::array();
        for (const auto &f : failures) {
            nlohmann::json e;
            e["inputs"] = f.inputs;
            e["expected"] = f.expected;
            e["actual"] = f.actual;
            if (!f.repro.empty())
                e["repro"] = f.repro;
            arr.push_back(std::move(e));
        }
        j["failures"] = std::move(arr);
        if (!extra.is_null())
            j["details"] = extra;
        if (with_timings)
            j["wall_seconds"] = wall_seconds;
        return j;
    }

    /// Human-readable one-screen summary.
    std::string text(std::size_t max_failures = 5) const;
};

} // namespace weylk
