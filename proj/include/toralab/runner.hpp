#pragma once

#include "toralab/report.hpp"

#include <optional>

namespace toralab {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Run description: one check verb plus the knobs it needs. Parsed from
/// plain-text `key = value` lines and overridden by CLI flags; parity
/// constraints and the window cap are enforced before running.
struct RunConfig {
    std::string check = "all";
    std::string family = "tauH";
    int N = 2;
    std::string g = "sl2";
    int radius = 1;
    std::string decomposition = "levelzero";
    int threads = 0;

    // jet knobs
    int m = 1;
    std::string fiber = "defining";
    bool calibrate = false;

    // lambda knobs
    std::string lam = "1", mu = "1", c = "1";

    // automorphism knobs
    long long shear_a = 1;
    unsigned long long seed = 2024;

    // evaluation knobs: comma-separated rationals, one point per factor
    std::string points = "1,2";

    bool strict = false;
    bool unsafe_large = false;

    static RunConfig from_file(const std::string& path);
    void set(const std::string& key, const std::string& value);
    void validate() const;
    json echo() const;
};

/// Executes the configured checks; deterministic given the config.
ReportBundle run(const RunConfig& cfg);

/// Exit code contract: 0 ok, 1 check failure, 2 config error.
int exit_code_for(const ReportBundle& bundle, bool strict);

}  // namespace toralab
