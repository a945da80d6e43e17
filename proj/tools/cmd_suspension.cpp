#include <chrono>
#include <cstdio>

#include "commands.hpp"
#include "folrig/dynamics/haar.hpp"
#include "folrig/io/files.hpp"
#include "folrig/suspension/finite_action.hpp"
#include "folrig/suspension/maurer_cartan.hpp"

namespace folrig::cli {

void cmd_suspension(const SuspensionOptions& opt, const CommonOptions& common,
                    const OptionResolver& resolver) {
    const auto t0 = std::chrono::steady_clock::now();
    auto manifest =
        make_manifest("suspension", resolver, common.seed, common.workers, {opt.action_file});

    const suspension::FiniteAction action = io::load_finite_action(opt.action_file);
    const suspension::OrbitReport report = suspension::orbits(action);
    std::printf("action on %zu points: %zu orbit(s)\n", report.set_size, report.orbits.size());
    for (const auto& orbit : report.orbits)
        std::printf("  orbit of %zu: size %zu, stabilizer index %zu, leaf %s\n",
                    orbit.members.front(), orbit.members.size(), orbit.stabilizer_index,
                    orbit.compact_leaf ? "compact" : "noncompact");
    write_output(common.out_dir, "orbits.json", io::orbit_json(report));

    if (opt.chart_n >= 2) {
        const auto chart = suspension::so_chart(opt.chart_n, opt.grid, common.seed);
        const auto mc = suspension::mc_residual(chart);
        if (mc.order)
            std::printf("flat-connection residual order: %.3f\n", *mc.order);
        else
            std::printf("flat-connection residual exactly flat across the ladder\n");

        std::vector<double> invariance;
        const auto translations =
            dynamics::haar_probes(static_cast<Eigen::Index>(opt.chart_n), opt.translations,
                                  common.seed ^ 0x746a52d6b54ee9d5ULL);
        for (const auto& gamma : translations)
            invariance.push_back(suspension::invariance_residual(chart, gamma));
        double worst = 0.0;
        for (double r : invariance) worst = std::max(worst, r);
        std::printf("translation invariance residual (max over %zu): %.3e\n", invariance.size(),
                    worst);
        write_output(common.out_dir, "mc.json", io::mc_json(mc, invariance));
    }

    finish_manifest(std::move(manifest), common.out_dir,
                    std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
}

}  // namespace folrig::cli
