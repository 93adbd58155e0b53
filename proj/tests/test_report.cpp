#include "taut/commands.hpp"
#include "taut/presets.hpp"
#include "taut/report.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace taut;

namespace {

const Pipeline& s4()
{
    static const Pipeline p = build_pipeline(preset_setup("s-even", 4));
    return p;
}

}  // namespace

TEST(Report, JsonRoundTripsThroughItsParser)
{
    Report r = taut_ring_report(s4(), {}, "degreewise", false);
    r.timing_ms = 12;
    const std::string json = emit_report(r, ReportFormat::Json);
    const Report back = report_from_json(json);
    EXPECT_EQ(back.command, r.command);
    EXPECT_EQ(back.setup_hash, r.setup_hash);
    EXPECT_EQ(back.results.size(), r.results.size());
    EXPECT_EQ(back.hilbert, r.hilbert);
    EXPECT_EQ(emit_report(back, ReportFormat::Json), json);
}

TEST(Report, JsonHasTheDocumentedKeys)
{
    const std::string json = emit_report(kappa_report(s4(), "e^3", false), ReportFormat::Json);
    for (const char* key : {"\"setup_hash\"", "\"command\"", "\"results\"", "\"name\"", "\"degree\"", "\"expression\"",
                            "\"check\"", "\"hilbert\"", "\"timing_ms\""})
        EXPECT_NE(json.find(key), std::string::npos) << key;
    EXPECT_NE(json.find("\"6*e^2 - 8*a\""), std::string::npos);
}

TEST(Report, MalformedJsonIsAnInputError)
{
    EXPECT_THROW(report_from_json("{"), InputError);
    EXPECT_THROW(report_from_json(R"({"setup_hash":"","command":"x","results":[{"name":"a","degree":null,)"
                                  R"("expression":"","check":"maybe"}],"hilbert":[],"timing_ms":0})"),
                 InputError);
}

TEST(Report, OutputIsByteStable)
{
    const Pipeline other = build_pipeline(preset_setup("s-even", 4));
    for (auto format : {ReportFormat::Human, ReportFormat::Json}) {
        EXPECT_EQ(emit_report(model_report(s4()), format), emit_report(model_report(other), format));
        EXPECT_EQ(emit_report(taut_ring_report(s4(), {}, "degreewise", false), format),
                  emit_report(taut_ring_report(other, {}, "degreewise", false), format));
    }
}

TEST(Report, HumanTableIsAligned)
{
    const std::string text = emit_report(taut_ring_report(s4(), {}, "degreewise", false), ReportFormat::Human);
    std::istringstream in(text);
    std::string line;
    std::size_t name_col = std::string::npos;
    bool in_table = false;
    while (std::getline(in, line)) {
        if (line.rfind("check", 0) == 0) {
            name_col = line.find("name");
            in_table = true;
            continue;
        }
        if (!in_table || line.empty())
            continue;
        if (line.rfind("pass", 0) == 0 || line.rfind("fail", 0) == 0 || line.rfind("n/a", 0) == 0) {
            ASSERT_GT(line.size(), name_col);
            EXPECT_NE(line[name_col], ' ') << line;
            EXPECT_EQ(line[name_col - 1], ' ') << line;
        }
    }
    EXPECT_NE(name_col, std::string::npos);
}

TEST(Report, EvenSphereRingListsGeneratorsByDegree)
{
    // S^8: k = 4, generators kappa[e*p_i] in degrees 4i and kappa[p_i] in degrees 4i - 8 >= 2k + 2
    const Pipeline p = build_pipeline(preset_setup("s-even", 8));
    const Report r = taut_ring_report(p, {}, "degreewise", false);
    std::vector<int> degrees;
    for (const auto& row : r.results)
        if (row.name.rfind("kappa[", 0) == 0 && row.degree)
            degrees.push_back(*row.degree);
    std::vector<int> sorted = degrees;
    std::sort(sorted.begin(), sorted.end());
    EXPECT_EQ(degrees, sorted);
    EXPECT_FALSE(degrees.empty());
    EXPECT_EQ(degrees.front(), 4);
}

TEST(Report, CohomologyInDegreeZero)
{
    const Report r = cohomology_report(s4(), 0);
    bool found = false;
    for (const auto& row : r.results)
        if (row.name == "H^0") {
            found = true;
            EXPECT_EQ(row.degree, 0);
            EXPECT_EQ(row.expression, "1");
        }
    EXPECT_TRUE(found);
    EXPECT_EQ(r.hilbert, (Hilbert{1}));
}
