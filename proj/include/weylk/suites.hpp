#pragma once

#include <optional>

#include "weylk/config.hpp"
#include "weylk/report.hpp"

namespace weylk {

struct SuiteOptions {
    std::optional<std::uint64_t> seed; // overrides the config seed
    unsigned workers = 0;              // 0 = machine parallelism
    std::string config_ref = "<config>"; // how repro lines refer to the config file
};

/// Names accepted by run_suite.
const std::vector<std::string> &suite_names();

/// Runs one verification suite over the configured box.  Throws SuiteError
/// for unknown names or a config/signature incompatible with the suite.
VerificationReport run_suite(const std::string &name, const Config &cfg,
                             const SuiteOptions &opts = {});

} // namespace weylk
