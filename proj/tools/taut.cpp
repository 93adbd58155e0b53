#include "taut/commands.hpp"
#include "taut/errors.hpp"
#include "taut/pipeline.hpp"
#include "taut/presets.hpp"
#include "taut/report.hpp"
#include "taut/suites.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

constexpr int exit_pass = 0;
constexpr int exit_check_failure = 1;
constexpr int exit_input_error = 2;

struct Flags {
    std::string setup_file;
    std::string preset;
    std::optional<int> n;
    std::optional<int> m;
    std::optional<int> cutoff;
    std::string format = "human";
    bool timing = false;
    bool fast = false;

    int max_degree = 10;
    std::string class_expr;
    bool fiberwise = false;
    std::vector<std::string> classes;
    std::string method = "degreewise";
    std::string suite;
    bool list = false;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw taut::InputError("cannot read setup file '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

taut::SetupSpec load_setup(const Flags& f)
{
    if (!f.setup_file.empty() && !f.preset.empty())
        throw taut::InputError("give either --setup or --preset, not both");
    taut::SetupSpec s;
    if (!f.setup_file.empty()) {
        if (f.n || f.m)
            throw taut::InputError("--n and --m select preset parameters; they do not apply to --setup");
        s = taut::parse_setup(read_file(f.setup_file));
    } else if (!f.preset.empty()) {
        if (f.n && f.m)
            throw taut::InputError("give at most one of --n and --m");
        const int param = f.n ? *f.n : f.m ? *f.m : taut::preset_default_parameter(f.preset);
        s = taut::preset_setup(f.preset, param);
    } else {
        throw taut::InputError("this command needs a setup: use --setup FILE or --preset NAME");
    }
    if (f.cutoff)
        s.options.cutoff = *f.cutoff;
    return s;
}

taut::Pipeline load_pipeline(const Flags& f)
{
    taut::PipelineOptions opts;
    opts.skip_verification = f.fast;
    return taut::build_pipeline(load_setup(f), opts);
}

taut::Report list_suites()
{
    taut::Report r;
    r.command = "check --list";
    for (const auto& s : taut::suite_catalog())
        r.add(s.name, std::nullopt,
              s.summary + (s.parameter.empty() ? "" : " (--" + s.parameter + ", default " +
                                                          std::to_string(s.default_value) + ")"));
    auto& scope = r.section("scope");
    scope.lines = taut::scope_disclosure();
    return r;
}

taut::Report run_command(const std::string& command, const Flags& f)
{
    if (command == "check") {
        if (f.list)
            return list_suites();
        if (f.suite.empty())
            throw taut::InputError("check needs a suite name (see check --list)");
        return taut::run_suite(f.suite, {f.n, f.m, f.cutoff});
    }
    if (command == "kahler")
        return taut::kahler_report(f.m.value_or(3), f.cutoff.value_or(40));
    const taut::Pipeline p = load_pipeline(f);
    if (command == "model")
        return taut::model_report(p);
    if (command == "cohomology")
        return taut::cohomology_report(p, f.max_degree);
    if (command == "kappa")
        return taut::kappa_report(p, f.class_expr, f.fiberwise);
    if (command == "taut-ring")
        return taut::taut_ring_report(p, f.classes, f.method, f.fiberwise);
    if (command == "invariants")
        return taut::invariants_report(p);
    if (command == "cp2-report")
        return taut::cp2_ring_report(p);
    return taut::hilbert_report(p);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Tautological rings of fibrations from rational models"};
    app.require_subcommand(1, 1);
    Flags f;

    auto setup_flags = [&](CLI::App* c) {
        c->add_option("--setup", f.setup_file, "setup file in the taut DSL");
        c->add_option("--preset", f.preset, "bundled setup")
            ->check(CLI::IsMember(taut::preset_names()));
        c->add_option("--n", f.n, "preset or suite parameter: complex dimension of CP^n");
        c->add_option("--m", f.m, "preset or suite parameter: sphere dimension");
        c->add_option("--cutoff", f.cutoff, "degree cutoff for ring computations");
        c->add_flag("--fast", f.fast, "skip the model verification checks");
    };
    auto output_flags = [&](CLI::App* c) {
        c->add_option("--format", f.format, "report format")->check(CLI::IsMember({"human", "json"}));
        c->add_flag("--timing", f.timing, "record the running time in the report");
    };

    auto* model = app.add_subcommand("model", "print the Lie model, its cochains and the relative model");
    auto* cohomology = app.add_subcommand("cohomology", "cohomology of the base model by degree");
    cohomology->add_option("--max-degree", f.max_degree, "largest degree")->check(CLI::NonNegativeNumber);
    auto* kappa = app.add_subcommand("kappa", "kappa-class of a characteristic class of the total bundle");
    kappa->add_option("--class", f.class_expr, "polynomial in the bundle classes")->required();
    kappa->add_flag("--fiberwise", f.fiberwise, "use the fiberwise classes");
    auto* ring = app.add_subcommand("taut-ring", "presentation of the ring generated by kappa-classes");
    ring->add_option("--classes", f.classes, "classes to push forward")->delimiter(',');
    ring->add_option("--method", f.method, "presentation method")
        ->check(CLI::IsMember({"degreewise", "indecomposables"}));
    ring->add_flag("--fiberwise", f.fiberwise, "use the fiberwise classes");
    auto* invariants = app.add_subcommand("invariants", "subring fixed by the involution");
    auto* check = app.add_subcommand("check", "run a named verification suite");
    check->add_option("suite", f.suite, "suite name");
    check->add_flag("--list", f.list, "list the suites");
    auto* kahler = app.add_subcommand("kahler", "exact Kahler forms modelling an odd sphere's kappa-ring");
    auto* cp2 = app.add_subcommand("cp2-report", "kappa-ring of CP^2 with a trivialized Euler difference");
    auto* hilbert = app.add_subcommand("hilbert", "Hilbert series of the base model");

    for (auto* c : {model, cohomology, kappa, ring, invariants, cp2, hilbert})
        setup_flags(c);
    check->add_option("--n", f.n, "complex dimension of CP^n");
    check->add_option("--m", f.m, "sphere dimension");
    check->add_option("--cutoff", f.cutoff, "degree cutoff");
    kahler->add_option("--m", f.m, "odd sphere dimension");
    kahler->add_option("--cutoff", f.cutoff, "degree cutoff");
    for (auto* c : app.get_subcommands({}))
        output_flags(c);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_pass : exit_input_error;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    const auto format = f.format == "json" ? taut::ReportFormat::Json : taut::ReportFormat::Human;
    try {
        const auto start = std::chrono::steady_clock::now();
        taut::Report r = run_command(command, f);
        if (f.timing)
            r.timing_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                              .count();
        std::cout << taut::emit_report(r, format);
        return r.all_pass() ? exit_pass : exit_check_failure;
    } catch (const taut::InputError& e) {
        std::cerr << "taut: " << e.what() << "\n";
        return exit_input_error;
    } catch (const std::exception& e) {
        std::cerr << "taut: " << e.what() << "\n";
        return exit_check_failure;
    }
}
