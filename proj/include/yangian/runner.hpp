#pragma once

#include "yangian/rational.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace yangian {

/// Malformed or inconsistent configuration (exit status 2 in the CLI).
class ConfigError : public Error {
public:
    using Error::Error;
};

struct RunConfig {
    int theta = 1;
    int n = 2;
    int p = 0;
    int q = 1;
    std::vector<Rational> mu;
    std::vector<int> nu;
    std::vector<int> word;  // 1-based positions; empty means the longest element
    std::vector<std::string> checks;
    int truncation = 6;  // D
    int order = 6;       // K
    std::string output;
    bool allow_nongeneric = false;
};

struct CheckDescriptor {
    std::string name;
    std::string description;
    std::string anchor;
};

const std::vector<CheckDescriptor>& list_checks();

/// Field-level validation; throws ConfigError naming the field.
RunConfig parse_config(const nlohmann::json& j);
nlohmann::json config_to_json(const RunConfig& c);
/// Structural checks plus genericity of mu (unless allow_nongeneric).
void validate_config(const RunConfig& c);

struct CheckRecord {
    std::string name;
    std::string status;  // "pass", "fail" or "error"
    nlohmann::json details;
    double timing_ms = 0;
};

struct Report {
    RunConfig config;
    std::vector<CheckRecord> records;
    bool all_pass() const;
    nlohmann::json to_json(bool with_timing = true) const;
};

/// Runs the configured checks in declared order; `parallel` runs them
/// concurrently and merges the records in the same order.
Report run(const RunConfig& config, bool parallel = false);

/// Longest element of S_m as the reduced word (1, 2, 1, 3, 2, 1, ...).
std::vector<int> longest_word(int m);

}  // namespace yangian
