#include "toralab/report.hpp"

#include <sstream>

namespace toralab {

namespace {
int status_rank(const std::string& s) {
    if (s == "pass") return 0;
    if (s == "partial") return 1;
    if (s == "inconclusive") return 2;
    return 3;  // fail
}
}  // namespace

std::string worse_status(const std::string& a, const std::string& b) {
    return status_rank(a) >= status_rank(b) ? a : b;
}

void VerificationReport::merge_status(const std::string& other) { status = worse_status(status, other); }

json VerificationReport::to_json(bool include_timing) const {
    json j;
    j["check"] = check;
    j["config"] = config;
    j["status"] = status;
    j["witnesses"] = witnesses;
    j["details"] = details;
    if (include_timing) j["timing_ms"] = seconds * 1000.0;
    return j;
}

std::string VerificationReport::comparable_body() const { return to_json(false).dump(2); }

bool ReportBundle::all_passed(bool strict) const {
    for (const auto& r : reports) {
        if (r.status == "fail") return false;
        if (strict && r.status != "pass") return false;
    }
    return true;
}

json ReportBundle::to_json(bool include_timing) const {
    json j;
    j["config"] = config;
    json rs = json::array();
    for (const auto& r : reports) rs.push_back(r.to_json(include_timing));
    j["reports"] = rs;
    return j;
}

std::string ReportBundle::comparable_body() const { return to_json(false).dump(2); }

namespace {
json strip_timing(const json& j) {
    if (j.is_object()) {
        json out = json::object();
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (it.key() == "timing_ms" || it.key() == "timing") continue;
            out[it.key()] = strip_timing(it.value());
        }
        return out;
    }
    if (j.is_array()) {
        json out = json::array();
        for (const auto& v : j) out.push_back(strip_timing(v));
        return out;
    }
    return j;
}

void diff_rec(const json& a, const json& b, const std::string& path, std::ostringstream& os, int& count) {
    if (count > 50) return;
    if (a.type() != b.type()) {
        os << path << ": type " << a.type_name() << " vs " << b.type_name() << "\n";
        ++count;
        return;
    }
    if (a.is_object()) {
        for (auto it = a.begin(); it != a.end(); ++it) {
            if (!b.contains(it.key())) {
                os << path << "." << it.key() << ": only in left\n";
                ++count;
            } else {
                diff_rec(it.value(), b.at(it.key()), path + "." + it.key(), os, count);
            }
        }
        for (auto it = b.begin(); it != b.end(); ++it) {
            if (!a.contains(it.key())) {
                os << path << "." << it.key() << ": only in right\n";
                ++count;
            }
        }
        return;
    }
    if (a.is_array()) {
        if (a.size() != b.size()) {
            os << path << ": array size " << a.size() << " vs " << b.size() << "\n";
            ++count;
            return;
        }
        for (size_t i = 0; i < a.size(); ++i)
            diff_rec(a[i], b[i], path + "[" + std::to_string(i) + "]", os, count);
        return;
    }
    if (a != b) {
        os << path << ": " << a.dump() << " vs " << b.dump() << "\n";
        ++count;
    }
}
}  // namespace

std::string report_diff(const json& a, const json& b) {
    json sa = strip_timing(a);
    json sb = strip_timing(b);
    if (sa == sb) return "";
    std::ostringstream os;
    int count = 0;
    diff_rec(sa, sb, "$", os, count);
    return os.str();
}

}  // namespace toralab
