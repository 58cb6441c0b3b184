#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace omstat {

inline constexpr const char* kVersion = "0.1.0";

struct SuiteOptions {
    int max_size = 6;
    int max_r = 2;
    int threads = 0;  // 0: hardware concurrency
};

struct CaseRecord {
    std::string key;
    std::string expected;
    std::string actual;
    bool pass = false;
};

struct SuiteReport {
    std::string suite;
    SuiteOptions options;
    bool report_only = false;
    std::vector<CaseRecord> cases;
    long passed = 0;
    long failed = 0;
    double elapsed_ms = 0;

    bool ok() const { return report_only || failed == 0; }
    // With reproducible set, elapsed_ms is written as 0 so reports compare byte for byte.
    nlohmann::json to_json(bool reproducible = false) const;
};

const std::vector<std::string>& suite_names();
bool is_report_suite(const std::string& name);
// Throws std::invalid_argument for an unknown suite.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opts);

}  // namespace omstat
