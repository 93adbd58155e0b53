#pragma once

#include "taut/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace taut {

struct SuiteParams {
    std::optional<int> n;  // complex dimension of CP^n
    std::optional<int> m;  // sphere dimension
    std::optional<int> cutoff;
};

struct SuiteInfo {
    std::string name;
    std::string summary;
    std::string parameter;  // "n", "m" or empty
    int default_value = 0;
};

std::vector<SuiteInfo> suite_catalog();
// Runs a named suite; every comparison becomes a pass/fail row.
Report run_suite(const std::string& name, const SuiteParams& params = {});

// Statements about spaces that a ring computation cannot reproduce, and what
// the suites check instead.
std::vector<std::string> scope_disclosure();

}  // namespace taut
