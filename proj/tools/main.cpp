#include <cstdint>
#include <string>

#include "CLI11.hpp"

#include "commands.hpp"
#include "folrig/version.hpp"

// Command-line surface.  Every option resolves through four layers: built-in
// default, then the --config JSON file, then a FOLIATION_<NAME> environment
// variable, then the explicit flag; later layers win.  Exit codes: 0 clean
// analysis, 2 validation failure (including unusable flags), 3 budget
// exceeded, 4 numerical non-convergence.

int main(int argc, char** argv) {
    using namespace folrig::cli;

    CLI::App app{"exact-arithmetic toolkit for rigid Lie foliations"};
    app.set_version_flag("--version", folrig::kToolVersion);
    app.require_subcommand(1);

    std::string config, out = ".", cache;
    std::uint64_t seed = 20260816;
    unsigned workers = 1;
    app.add_option("--config", config, "JSON config file (option name -> value)");
    app.add_option("--seed", seed, "seed for every random draw in the run");
    app.add_option("--workers", workers, "worker threads for parallel sections");
    app.add_option("--out", out, "directory for reports and the manifest");
    app.add_option("--cache", cache, "directory for reusable word-ball caches");

    AlgebraOptions algebra;
    auto* cmd_alg = app.add_subcommand("algebra", "rigidity obstructions of a Lie algebra");
    cmd_alg->fallthrough();
    cmd_alg->add_option("input", algebra.input, "structure-constant JSON file")->required();

    ForgeOptions forge;
    auto* cmd_frg = app.add_subcommand(
        "forge", "arithmetic generator construction and compact-group diagnostics");
    cmd_frg->fallthrough();
    cmd_frg->add_option("form", forge.form_file, "quadratic-form JSON file")->required();
    cmd_frg->add_option("--height", forge.height, "search box bound per coefficient");
    cmd_frg->add_option("--radius", forge.radius, "word-ball radius");
    cmd_frg->add_option("--probes", forge.probes, "Haar probe count for covering radii");
    cmd_frg->add_option("--degrees", forge.degrees, "harmonic degrees for gap estimates")
        ->delimiter(',');
    cmd_frg->add_option("--max-generators", forge.max_generators,
                        "cap on the working generator subset");
    cmd_frg->add_option("--dedup-tol", forge.dedup_tol, "word-ball deduplication tolerance");
    cmd_frg->add_option("--ball-cap", forge.ball_cap, "word-ball element budget");
    cmd_frg->add_option("--power-tol", forge.power_tol, "power-iteration tolerance");
    cmd_frg->add_option("--power-iters", forge.power_iters, "power-iteration cap");

    CohomologyOptions coh;
    auto* cmd_coh = app.add_subcommand("cohomology", "group cohomology through Fox calculus");
    cmd_coh->fallthrough();
    cmd_coh->add_option("--presentation", coh.presentation_file, "presentation JSON file")
        ->required();
    cmd_coh->add_option("--representation", coh.representation_file, "representation JSON file")
        ->required();
    cmd_coh->add_option("--degrees", coh.degrees,
                        "harmonic degrees: check H^1 with coefficients in each degree")
        ->delimiter(',');
    cmd_coh->add_option("--budget", coh.budget, "harmonic monomial budget");

    DynamicsOptions dyn;
    auto* cmd_dyn = app.add_subcommand("dynamics", "density and spectral-gap diagnostics");
    cmd_dyn->fallthrough();
    cmd_dyn->add_option("matrices", dyn.matrices_file, "orthogonal-matrix JSON file")->required();
    cmd_dyn->add_option("--radius", dyn.radius, "word-ball radius");
    cmd_dyn->add_option("--probes", dyn.probes, "Haar probe count");
    cmd_dyn->add_option("--degrees", dyn.degrees, "harmonic degrees")->delimiter(',');
    cmd_dyn->add_option("--dedup-tol", dyn.dedup_tol, "deduplication tolerance");
    cmd_dyn->add_option("--ball-cap", dyn.ball_cap, "word-ball element budget");
    cmd_dyn->add_option("--power-tol", dyn.power_tol, "power-iteration tolerance");
    cmd_dyn->add_option("--power-iters", dyn.power_iters, "power-iteration cap");

    SuspensionOptions susp;
    auto* cmd_sus = app.add_subcommand("suspension", "orbit analysis and flat-connection checks");
    cmd_sus->fallthrough();
    cmd_sus->add_option("action", susp.action_file, "finite-action JSON file")->required();
    cmd_sus->add_option("--chart-n", susp.chart_n,
                        "run the flat-connection residual checks on an SO(n) chart");
    cmd_sus->add_option("--grid", susp.grid, "chart grid size");
    cmd_sus->add_option("--translations", susp.translations,
                        "random translations for the invariance check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    return run_guarded([&] {
        OptionResolver resolver(app.count("--config") ? config : "");
        CommonOptions common;
        common.config_path = resolver.config_path();
        common.seed = resolver.resolve_u64("seed", seed, app.count("--seed"));
        common.workers = resolver.resolve_unsigned("workers", workers, app.count("--workers"));
        common.out_dir = resolver.resolve_string("out", out, app.count("--out"));
        common.cache_dir = resolver.resolve_string("cache", cache, app.count("--cache"));

        const auto join = [](const std::vector<std::size_t>& v) {
            std::string s;
            for (std::size_t x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
            return s;
        };

        if (cmd_alg->parsed()) {
            cmd_algebra(algebra, common, resolver);
        } else if (cmd_frg->parsed()) {
            forge.height = resolver.resolve_long("height", forge.height, cmd_frg->count("--height"));
            forge.radius = resolver.resolve_u64("radius", forge.radius, cmd_frg->count("--radius"));
            forge.probes = resolver.resolve_u64("probes", forge.probes, cmd_frg->count("--probes"));
            forge.max_generators = resolver.resolve_u64("max-generators", forge.max_generators,
                                                        cmd_frg->count("--max-generators"));
            forge.dedup_tol =
                resolver.resolve_double("dedup-tol", forge.dedup_tol, cmd_frg->count("--dedup-tol"));
            forge.ball_cap =
                resolver.resolve_u64("ball-cap", forge.ball_cap, cmd_frg->count("--ball-cap"));
            forge.power_tol =
                resolver.resolve_double("power-tol", forge.power_tol, cmd_frg->count("--power-tol"));
            forge.power_iters = resolver.resolve_u64("power-iters", forge.power_iters,
                                                     cmd_frg->count("--power-iters"));
            resolver.resolve_string("degrees", join(forge.degrees), 1);
            cmd_forge(forge, common, resolver);
        } else if (cmd_coh->parsed()) {
            coh.budget = resolver.resolve_u64("budget", coh.budget, cmd_coh->count("--budget"));
            resolver.resolve_string("degrees", join(coh.degrees), 1);
            cmd_cohomology(coh, common, resolver);
        } else if (cmd_dyn->parsed()) {
            dyn.radius = resolver.resolve_u64("radius", dyn.radius, cmd_dyn->count("--radius"));
            dyn.probes = resolver.resolve_u64("probes", dyn.probes, cmd_dyn->count("--probes"));
            dyn.dedup_tol =
                resolver.resolve_double("dedup-tol", dyn.dedup_tol, cmd_dyn->count("--dedup-tol"));
            dyn.ball_cap =
                resolver.resolve_u64("ball-cap", dyn.ball_cap, cmd_dyn->count("--ball-cap"));
            dyn.power_tol =
                resolver.resolve_double("power-tol", dyn.power_tol, cmd_dyn->count("--power-tol"));
            dyn.power_iters = resolver.resolve_u64("power-iters", dyn.power_iters,
                                                   cmd_dyn->count("--power-iters"));
            resolver.resolve_string("degrees", join(dyn.degrees), 1);
            cmd_dynamics(dyn, common, resolver);
        } else if (cmd_sus->parsed()) {
            susp.chart_n =
                resolver.resolve_u64("chart-n", susp.chart_n, cmd_sus->count("--chart-n"));
            susp.grid = resolver.resolve_u64("grid", susp.grid, cmd_sus->count("--grid"));
            susp.translations = resolver.resolve_u64("translations", susp.translations,
                                                     cmd_sus->count("--translations"));
            cmd_suspension(susp, common, resolver);
        }
    });
}
