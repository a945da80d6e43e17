#include <chrono>
#include <cstdio>

#include "commands.hpp"
#include "folrig/io/files.hpp"
#include "folrig/suspension/pipeline.hpp"

namespace folrig::cli {

void cmd_algebra(const AlgebraOptions& opt, const CommonOptions& common,
                 const OptionResolver& resolver) {
    const auto t0 = std::chrono::steady_clock::now();
    auto manifest = make_manifest("algebra", resolver, common.seed, common.workers, {opt.input});

    const liealg::LieAlgebra g = io::load_lie_algebra(opt.input);
    const suspension::ObstructionReport report = suspension::rigidity_pipeline(g);

    std::printf("algebra: dimension %zu\n", report.dimension);
    std::printf("  perfect:          %s\n", report.perfect ? "yes" : "no");
    std::printf("  compact type:     %s\n", report.compact_type ? "yes" : "no");
    std::printf("  semisimple:       %s\n", report.semisimple ? "yes" : "no");
    if (report.so3_factor) std::printf("  so(3) factor detected\n");
    std::printf("rigidity criterion: %s\n", report.full_criterion ? "satisfied" : "not satisfied");

    write_output(common.out_dir, "obstruction.json", io::obstruction_json(report));
    finish_manifest(std::move(manifest), common.out_dir,
                    std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
}

}  // namespace folrig::cli
