#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace toralab {

using json = nlohmann::json;

/// Outcome of one named check over a window. The comparable body is the
/// report minus timing; reruns with one config must reproduce it byte for
/// byte.
struct VerificationReport {
    std::string check;
    json config = json::object();     // family, N, radius, parameters
    std::string status = "pass";      // pass | fail | partial | inconclusive
    std::vector<json> witnesses;      // {inputs, residual}
    json details = json::object();    // counts, notes, published constants
    double seconds = 0.0;

    void fail_with(json witness, size_t cap = 16) {
        status = "fail";
        if (witnesses.size() < cap) witnesses.push_back(std::move(witness));
    }
    /// pass < partial < inconclusive < fail
    void merge_status(const std::string& other);

    json to_json(bool include_timing = true) const;
    /// Canonical serialization with timing stripped.
    std::string comparable_body() const;
};

/// Lowers `status` to the worse of the two.
std::string worse_status(const std::string& a, const std::string& b);

/// Bundle of reports produced by one run.
struct ReportBundle {
    json config = json::object();
    std::vector<VerificationReport> reports;

    bool all_passed(bool strict = false) const;
    json to_json(bool include_timing = true) const;
    std::string comparable_body() const;
};

/// Structural diff of two report documents, ignoring timing. Empty string
/// means the comparable bodies agree.
std::string report_diff(const json& a, const json& b);

}  // namespace toralab
