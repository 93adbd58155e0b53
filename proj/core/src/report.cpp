#include "taut/report.hpp"

#include "taut/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <sstream>

namespace taut {

std::string check_string(Check c)
{
    switch (c) {
    case Check::Pass:
        return "pass";
    case Check::Fail:
        return "fail";
    case Check::NotApplicable:
        break;
    }
    return "n/a";
}

void Report::add(std::string name, std::optional<int> degree, std::string expression, Check check)
{
    results.push_back({std::move(name), degree, std::move(expression), check});
}

void Report::expect(std::string name, bool ok, std::string expression, std::optional<int> degree)
{
    add(std::move(name), degree, std::move(expression), ok ? Check::Pass : Check::Fail);
}

ReportSection& Report::section(std::string title)
{
    sections.push_back({std::move(title), {}});
    return sections.back();
}

bool Report::all_pass() const
{
    return failures() == 0;
}

std::size_t Report::failures() const
{
    return static_cast<std::size_t>(
        std::count_if(results.begin(), results.end(), [](const ReportRow& r) { return r.check == Check::Fail; }));
}

namespace {

std::string emit_human(const Report& r)
{
    std::ostringstream o;
    o << "command: " << r.command << "\n";
    if (!r.setup_hash.empty())
        o << "setup: " << r.setup_hash << "\n";
    for (const auto& s : r.sections) {
        o << "\n" << s.title << "\n";
        for (const auto& line : s.lines)
            o << "  " << line << "\n";
    }
    if (!r.results.empty()) {
        std::vector<std::array<std::string, 4>> rows{{"check", "name", "degree", "expression"}};
        for (const auto& row : r.results)
            rows.push_back({check_string(row.check), row.name, row.degree ? std::to_string(*row.degree) : "",
                            row.expression});
        std::array<std::size_t, 3> width{};
        for (const auto& row : rows)
            for (std::size_t c = 0; c < width.size(); ++c)
                width[c] = std::max(width[c], row[c].size());
        o << "\n";
        for (const auto& row : rows) {
            std::string line;
            for (std::size_t c = 0; c < width.size(); ++c)
                line += row[c] + std::string(width[c] - row[c].size() + 2, ' ');
            line += row[3];
            line.erase(line.find_last_not_of(' ') + 1);
            o << line << "\n";
        }
    }
    if (!r.hilbert.empty())
        o << "\nhilbert: " << hilbert_string(r.hilbert) << "\n";
    const auto checks = std::count_if(r.results.begin(), r.results.end(),
                                      [](const ReportRow& row) { return row.check != Check::NotApplicable; });
    o << "\n" << checks << " checks, " << r.failures() << " failures";
    if (r.timing_ms)
        o << ", " << r.timing_ms << " ms";
    o << "\n";
    return o.str();
}

std::string emit_json(const Report& r)
{
    nlohmann::ordered_json j;
    j["setup_hash"] = r.setup_hash;
    j["command"] = r.command;
    j["results"] = nlohmann::ordered_json::array();
    for (const auto& row : r.results) {
        nlohmann::ordered_json e;
        e["name"] = row.name;
        e["degree"] = row.degree ? nlohmann::ordered_json(*row.degree) : nlohmann::ordered_json(nullptr);
        e["expression"] = row.expression;
        e["check"] = check_string(row.check);
        j["results"].push_back(std::move(e));
    }
    j["hilbert"] = nlohmann::ordered_json::array();
    for (const auto& h : r.hilbert) {
        if (!h.fits_slong_p())
            throw ModelError("Hilbert series coefficient too large for the JSON report");
        j["hilbert"].push_back(h.get_si());
    }
    j["timing_ms"] = r.timing_ms;
    return j.dump(2) + "\n";
}

Check check_from_string(const std::string& s)
{
    if (s == "pass")
        return Check::Pass;
    if (s == "fail")
        return Check::Fail;
    if (s == "n/a")
        return Check::NotApplicable;
    throw InputError("unknown check value '" + s + "'");
}

}  // namespace

std::string emit_report(const Report& r, ReportFormat format)
{
    return format == ReportFormat::Json ? emit_json(r) : emit_human(r);
}

Report report_from_json(const std::string& text)
{
    Report r;
    try {
        const auto j = nlohmann::json::parse(text);
        r.setup_hash = j.at("setup_hash").get<std::string>();
        r.command = j.at("command").get<std::string>();
        for (const auto& e : j.at("results")) {
            ReportRow row;
            row.name = e.at("name").get<std::string>();
            if (!e.at("degree").is_null())
                row.degree = e.at("degree").get<int>();
            row.expression = e.at("expression").get<std::string>();
            row.check = check_from_string(e.at("check").get<std::string>());
            r.results.push_back(std::move(row));
        }
        for (const auto& h : j.at("hilbert"))
            r.hilbert.push_back(Integer(h.get<long>()));
        r.timing_ms = j.at("timing_ms").get<long>();
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed report: ") + e.what());
    }
    return r;
}

}  // namespace taut
