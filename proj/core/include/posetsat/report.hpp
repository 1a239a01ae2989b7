#pragma once

#include "posetsat/exact.hpp"
#include "posetsat/poset.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace posetsat {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kGeneratorId = "mt19937_64";

// Outcome of an exact verification sweep.
struct CheckReport {
    std::string check;
    long n = 0;
    std::vector<std::string> violations;
    std::vector<std::string> notes;
    std::optional<Rational> max_ratio;
    nlohmann::json details = nlohmann::json::object();

    bool passed() const { return violations.empty(); }
    void absorb(const CheckReport& other);
    nlohmann::json to_json() const;
};

struct RunManifest {
    std::string tool_version = kToolVersion;
    std::vector<std::string> command;
    std::string generator = kGeneratorId;
    std::optional<std::uint64_t> master_seed;
    Limits limits;
    unsigned workers = 1;
    std::optional<double> wall_seconds;

    nlohmann::json to_json() const;
};

nlohmann::json limits_json(const Limits& limits);

// Keys sorted, two-space indent, trailing newline.
std::string dump_json(const nlohmann::json& j);

// Display-only float with a fixed number of significant digits, so output
// stays byte-stable across runs.
double approx(double value);

}  // namespace posetsat
