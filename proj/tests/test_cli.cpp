#include "taut/report.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct CliRun {
    int code = -1;
    std::string out;
};

CliRun taut_cli(const std::string& args)
{
    const std::string cmd = std::string(TAUT_EXE) + " " + args + " 2>&1";
    CliRun r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return r;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string preset_file(const std::string& name)
{
    return std::string(TAUT_PRESET_DIR) + "/" + name + ".k";
}

}  // namespace

TEST(Cli, KappaOnTheFourSphere)
{
    const CliRun r = taut_cli("kappa --preset s-even --m 4 --class 'e^3'");
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("6*e^2 - 8*a"), std::string::npos) << r.out;
}

TEST(Cli, SetupFileAndPresetAgree)
{
    const CliRun a = taut_cli("kappa --setup " + preset_file("s-even") + " --class 'e^2' --format json");
    const CliRun b = taut_cli("kappa --preset s-even --class 'e^2' --format json");
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    const taut::Report r = taut::report_from_json(a.out);
    EXPECT_EQ(r.command, "kappa");
    EXPECT_EQ(r.setup_hash.size(), 16u);
}

TEST(Cli, CohomologyInDegreeZero)
{
    const CliRun r = taut_cli("cohomology --preset cpn --max-degree 0");
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("H^0"), std::string::npos);
    EXPECT_NE(r.out.find("hilbert: 1\n"), std::string::npos);
}

TEST(Cli, CheckSuiteExitCodes)
{
    const CliRun ok = taut_cli("check cpn-kappa-congruences --n 3");
    EXPECT_EQ(ok.code, 0) << ok.out;
    EXPECT_NE(ok.out.find(", 0 failures"), std::string::npos);
    const CliRun fail = taut_cli("check cp2-invariants");
    EXPECT_EQ(fail.code, 1);
    EXPECT_NE(fail.out.find("fail"), std::string::npos);
}

TEST(Cli, InputErrorsExitWithTwo)
{
    EXPECT_EQ(taut_cli("").code, 2);
    EXPECT_EQ(taut_cli("frobnicate").code, 2);
    EXPECT_EQ(taut_cli("model").code, 2);
    EXPECT_EQ(taut_cli("model --preset nope").code, 2);
    EXPECT_EQ(taut_cli("kappa --preset s-even --class 'e^'").code, 2);
    EXPECT_EQ(taut_cli("check no-such-suite").code, 2);
    EXPECT_EQ(taut_cli("model --setup /nonexistent.k").code, 2);

    const std::string path = testing::TempDir() + "bad_setup.k";
    std::ofstream(path) << "fiber {\n  x : 4\n  d x = x^2\n}\n";
    const CliRun bad = taut_cli("model --setup " + path);
    EXPECT_EQ(bad.code, 2);
    EXPECT_NE(bad.out.find("3:3:"), std::string::npos) << bad.out;
}

TEST(Cli, ReportsAreByteStable)
{
    const CliRun a = taut_cli("model --preset cpn --n 2");
    const CliRun b = taut_cli("model --preset cpn --n 2");
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(taut_cli("hilbert --preset s-odd --format json").out, taut_cli("hilbert --preset s-odd --format json").out);
}

TEST(Cli, TimingIsOptIn)
{
    const CliRun plain = taut_cli("kahler --m 3 --cutoff 12 --format json");
    EXPECT_NE(plain.out.find("\"timing_ms\": 0"), std::string::npos) << plain.out;
    const CliRun timed = taut_cli("kahler --m 3 --cutoff 12 --timing --format json");
    EXPECT_EQ(timed.code, 0);
    EXPECT_GE(taut::report_from_json(timed.out).timing_ms, 0);
}

TEST(Cli, OtherCommandsRun)
{
    EXPECT_EQ(taut_cli("taut-ring --preset s-even --m 4").code, 0);
    EXPECT_EQ(taut_cli("taut-ring --preset cpn --n 2 --classes 'w^4,w^5,w^2*c1,w*c2,w^2*c2' --method indecomposables").code, 0);
    EXPECT_EQ(taut_cli("invariants --preset cpn-real --n 2").code, 0);
    EXPECT_EQ(taut_cli("cp2-report --preset cp2-euler-trivial --cutoff 24").code, 0);
    EXPECT_EQ(taut_cli("check --list").code, 0);
}
