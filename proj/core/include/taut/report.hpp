#pragma once

#include "taut/graded.hpp"

#include <optional>
#include <string>
#include <vector>

namespace taut {

enum class Check { Pass, Fail, NotApplicable };

std::string check_string(Check c);

struct ReportRow {
    std::string name;
    std::optional<int> degree;
    std::string expression;
    Check check = Check::NotApplicable;
};

struct ReportSection {
    std::string title;
    std::vector<std::string> lines;
};

struct Report {
    std::string command;
    std::string setup_hash;  // empty for commands without a setup
    std::vector<ReportSection> sections;  // human-readable context
    std::vector<ReportRow> results;
    Hilbert hilbert;
    long timing_ms = 0;

    void add(std::string name, std::optional<int> degree, std::string expression, Check check = Check::NotApplicable);
    void expect(std::string name, bool ok, std::string expression, std::optional<int> degree = std::nullopt);
    ReportSection& section(std::string title);
    bool all_pass() const;
    std::size_t failures() const;
};

enum class ReportFormat { Human, Json };

// Deterministic rendering: identical reports give identical bytes. The human
// form is an aligned table; the JSON form has the keys setup_hash, command,
// results, hilbert and timing_ms.
std::string emit_report(const Report& r, ReportFormat format);
// Reads the JSON form back; sections are not part of it.
Report report_from_json(const std::string& text);

}  // namespace taut
