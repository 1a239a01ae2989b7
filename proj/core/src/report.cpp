#include "posetsat/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace posetsat {

void CheckReport::absorb(const CheckReport& other) {
    for (const std::string& v : other.violations) {
        violations.push_back(other.check + ": " + v);
    }
    for (const std::string& v : other.notes) {
        notes.push_back(other.check + ": " + v);
    }
    if (other.max_ratio && (!max_ratio || *other.max_ratio > *max_ratio)) {
        max_ratio = other.max_ratio;
    }
}

nlohmann::json CheckReport::to_json() const {
    nlohmann::json j;
    j["check"] = check;
    j["n"] = n;
    j["violations"] = violations;
    j["notes"] = notes;
    j["max_ratio"] = max_ratio ? nlohmann::json(fraction_string(*max_ratio)) : nlohmann::json(nullptr);
    j["passed"] = passed();
    if (!details.empty()) {
        j["details"] = details;
    }
    return j;
}

nlohmann::json limits_json(const Limits& limits) {
    return {{"max_elements", limits.max_elements},
            {"max_closure", limits.max_closure},
            {"max_subsets", limits.max_subsets},
            {"max_branch_elements", limits.max_branch_elements},
            {"max_matching_level", limits.max_matching_level}};
}

nlohmann::json RunManifest::to_json() const {
    nlohmann::json j;
    j["tool_version"] = tool_version;
    j["command"] = command;
    j["generator"] = generator;
    j["master_seed"] = master_seed ? nlohmann::json(std::to_string(*master_seed)) : nlohmann::json(nullptr);
    j["limits"] = limits_json(limits);
    j["workers"] = workers;
    if (wall_seconds) {
        j["wall_seconds_approx"] = approx(*wall_seconds);
    }
    return j;
}

std::string dump_json(const nlohmann::json& j) {
    return j.dump(2) + "\n";
}

double approx(double value) {
    if (!std::isfinite(value) || value == 0.0) {
        return value;
    }
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.12g", value);
    return std::strtod(buffer, nullptr);
}

}  // namespace posetsat
