#include <chrono>
#include <cstdio>

#include "commands.hpp"
#include "folrig/dynamics/haar.hpp"
#include "folrig/dynamics/harmonic.hpp"
#include "folrig/dynamics/spectral.hpp"
#include "folrig/dynamics/word_ball.hpp"
#include "folrig/io/files.hpp"

namespace folrig::cli {

void cmd_dynamics(const DynamicsOptions& opt, const CommonOptions& common,
                  const OptionResolver& resolver) {
    const auto t0 = std::chrono::steady_clock::now();
    auto manifest =
        make_manifest("dynamics", resolver, common.seed, common.workers, {opt.matrices_file});

    const std::vector<Eigen::MatrixXd> generators = io::load_float_matrices(opt.matrices_file);
    const auto n = static_cast<std::size_t>(generators.front().rows());

    const auto ball =
        dynamics::enumerate_ball(generators, opt.radius, opt.dedup_tol, opt.ball_cap);
    std::printf("word ball radius %zu: %zu elements%s\n", opt.radius, ball.elements.size(),
                ball.closed ? " (closed: the generated group is finite)" : "");

    const auto profile =
        dynamics::covering_profile(ball, opt.probes, common.seed, common.workers);
    write_output(common.out_dir, "density.json", io::density_json(profile));
    write_output(common.out_dir, "density.csv", io::density_csv(profile));
    for (const auto& r : profile)
        std::printf("radius %zu: covering %.6f\n", r.radius, r.covering_radius);

    std::vector<dynamics::GapEstimate> gaps;
    for (const std::size_t d : opt.degrees) {
        const auto space = dynamics::harmonic_space(n, d);
        gaps.push_back(dynamics::averaging_operator_norm(ball.generators, space, opt.power_tol,
                                                         opt.power_iters));
        const auto& g = gaps.back();
        std::printf("degree %zu: averaging norm %s, gap %s, weyl deviation %.6f\n", d,
                    g.estimate ? std::to_string(*g.estimate).c_str() : "n/a",
                    g.gap ? std::to_string(*g.gap).c_str() : "n/a",
                    dynamics::weyl_deviation(ball, space));
    }
    write_output(common.out_dir, "gaps.json", io::gaps_json(gaps));
    write_output(common.out_dir, "gaps.csv", io::gaps_csv(gaps));

    finish_manifest(std::move(manifest), common.out_dir,
                    std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
}

}  // namespace folrig::cli
