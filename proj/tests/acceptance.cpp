// Prints one PASS/FAIL line per acceptance criterion. With --expect-fail IDS
// the exit status is 0 exactly when the failing criteria are the listed ones.

#include "properties.hpp"

#include "taut/suites.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <set>
#include <sstream>

namespace {

struct Criterion {
    Criterion(std::string i, std::string t) : id(std::move(i)), title(std::move(t)) {}

    std::string id;
    std::string title;
    bool pass = true;
    std::size_t checks = 0;
    double seconds = 0;
    std::vector<std::string> notes;
};

struct SuiteRun {
    taut::Report report;
    double seconds = 0;
};

SuiteRun timed_suite(const std::string& name, const taut::SuiteParams& params)
{
    const auto start = std::chrono::steady_clock::now();
    SuiteRun r{taut::run_suite(name, params), 0};
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::string label(const std::string& name, const taut::SuiteParams& p)
{
    std::string s = name;
    if (p.n)
        s += " n=" + std::to_string(*p.n);
    if (p.m)
        s += " m=" + std::to_string(*p.m);
    return s;
}

void add_suite(Criterion& c, const std::string& name, const taut::SuiteParams& params, double limit_seconds,
               std::vector<taut::Report>* keep = nullptr)
{
    SuiteRun run;
    try {
        run = timed_suite(name, params);
    } catch (const std::exception& e) {
        c.pass = false;
        c.notes.push_back(label(name, params) + ": error: " + e.what());
        return;
    }
    c.seconds += run.seconds;
    for (const auto& row : run.report.results) {
        if (row.check == taut::Check::NotApplicable)
            continue;
        ++c.checks;
        if (row.check == taut::Check::Fail) {
            c.pass = false;
            c.notes.push_back(label(name, params) + ": " + row.name +
                              (row.expression.empty() ? "" : " [" + row.expression + "]"));
        }
    }
    if (run.seconds > limit_seconds) {
        c.pass = false;
        std::ostringstream o;
        o << label(name, params) << ": took " << run.seconds << " s, limit " << limit_seconds << " s";
        c.notes.push_back(o.str());
    }
    if (keep)
        keep->push_back(std::move(run.report));
}

void add_property(Criterion& c, const props::Outcome& o, std::size_t minimum)
{
    ++c.checks;
    if (!o.ok || o.instances < minimum) {
        c.pass = false;
        c.notes.push_back(o.name + " (" + std::to_string(o.instances) + " instances): " +
                          (o.ok ? "too few instances" : o.detail));
    }
}

bool marks_ring_level(const taut::Report& r)
{
    for (const auto& s : r.sections)
        if (s.title == "scope")
            for (const auto& line : s.lines)
                if (line.find("ring-level consequence") == 0)
                    return true;
    return false;
}

taut::SuiteParams with_n(int n)
{
    return {n, std::nullopt, std::nullopt};
}

taut::SuiteParams with_m(int m)
{
    return {std::nullopt, m, std::nullopt};
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"acceptance criteria report"};
    std::vector<std::string> expected_failures;
    app.add_option("--expect-fail", expected_failures, "criteria known to fail")->delimiter(',');
    CLI11_PARSE(app, argc, argv);

    constexpr double check_limit = 10;
    std::vector<Criterion> out;
    std::vector<taut::Report> ring_level;

    Criterion ac1{"AC1", "even spheres m = 2, 4, 6, 8: relation, kappa-classes, free kappa-ring"};
    for (int m : {2, 4, 6, 8})
        add_suite(ac1, "even-sphere", with_m(m), check_limit);
    out.push_back(ac1);

    Criterion ac2{"AC2", "odd spheres m = 3, 5, 7: d p_i, kappa = D(c), exact forms, kill-cocycles cohomology"};
    for (int m : {3, 5, 7})
        add_suite(ac2, "odd-sphere", with_m(m), check_limit);
    out.push_back(ac2);

    Criterion ac3{"AC3", "CP^n n = 2, 3, 4: fiber integration, congruences, free generators; ker(q*) = I for n = 2, 3"};
    for (int n : {2, 3, 4}) {
        add_suite(ac3, "cpn-fiber-integration", with_n(n), check_limit);
        add_suite(ac3, "cpn-kappa-congruences", with_n(n), check_limit);
        add_suite(ac3, "cpn-generators", with_n(n), check_limit, &ring_level);
    }
    for (int n : {2, 3})
        add_suite(ac3, "projective-kernel", with_n(n), check_limit);
    out.push_back(ac3);

    Criterion ac4{"AC4", "invariant rings: CP^2 nine generators with three relations as a complete intersection; "
                         "generator counts n + binom(k,2) for n = 2, 4"};
    add_suite(ac4, "cp2-invariants", {}, check_limit);
    for (int n : {2, 4})
        add_suite(ac4, "cpn-real-generators", with_n(n), check_limit, &ring_level);
    out.push_back(ac4);

    Criterion ac5{"AC5", "CP^2 ledger: kappa values, identities, quartic relation, pd1|0 survives, fiberwise values"};
    add_suite(ac5, "cp2-ledger", {}, 60, &ring_level);
    out.push_back(ac5);

    Criterion ac6{"AC6", "property suites: d^2, Jacobi, Leibniz, Koszul fuzz; dense elimination oracle; "
                         "decompose/reassemble; L-polynomial signature"};
    {
        const auto start = std::chrono::steady_clock::now();
        add_property(ac6, props::d_squared(1000, 101), 1000);
        add_property(ac6, props::jacobi_identity(1000, 102), 1000);
        add_property(ac6, props::leibniz_rule(1000, 103), 1000);
        add_property(ac6, props::koszul_signs(1000, 104), 1000);
        add_property(ac6, props::linear_oracle(200, 105), 200);
        add_property(ac6, props::hilbert_oracle(50, 106), 50);
        add_property(ac6, props::decompose_reassemble(200, 107), 200);
        add_property(ac6, props::l_polynomial_oracle(5, 108), 1);
        add_property(ac6, props::signature(2), 2);
        ac6.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    out.push_back(ac6);

    Criterion ac7{"AC7", "statements about spaces are disclosed and replaced by marked ring-level consequences"};
    {
        const auto disclosure = taut::scope_disclosure();
        ++ac7.checks;
        if (disclosure.empty() || disclosure.front().find("rational homotopy equivalences") == std::string::npos) {
            ac7.pass = false;
            ac7.notes.push_back("scope disclosure missing");
        }
        std::set<std::string> marked;
        for (const auto& r : ring_level) {
            ++ac7.checks;
            if (marks_ring_level(r))
                marked.insert(r.command);
            else {
                ac7.pass = false;
                ac7.notes.push_back(r.command + ": no ring-level scope note");
            }
        }
        for (const char* needed : {"check cpn-generators", "check cpn-real-generators", "check cp2-ledger"})
            if (!marked.count(needed)) {
                ac7.pass = false;
                ac7.notes.push_back(std::string(needed) + ": not marked");
            }
    }
    out.push_back(ac7);

    std::set<std::string> failed;
    for (const auto& c : out) {
        std::ostringstream line;
        line.precision(2);
        line << std::fixed << c.id << ' ' << (c.pass ? "PASS" : "FAIL") << "  " << c.title << " (" << c.checks
             << " checks, " << c.seconds << " s)";
        std::cout << line.str() << "\n";
        for (const auto& n : c.notes)
            std::cout << "    " << n << "\n";
        if (!c.pass)
            failed.insert(c.id);
    }
    const std::set<std::string> expected(expected_failures.begin(), expected_failures.end());
    std::cout << "\n" << out.size() - failed.size() << " of " << out.size() << " criteria pass";
    if (!expected.empty())
        std::cout << "; expected to fail: " << [&] {
            std::string s;
            for (const auto& e : expected)
                s += (s.empty() ? "" : ", ") + e;
            return s;
        }();
    std::cout << "\n";
    return failed == expected ? 0 : 1;
}
