#include <chrono>
#include <cstdio>

#include "commands.hpp"
#include "folrig/groupcoh/fox.hpp"
#include "folrig/io/files.hpp"

namespace folrig::cli {

void cmd_cohomology(const CohomologyOptions& opt, const CommonOptions& common,
                    const OptionResolver& resolver) {
    const auto t0 = std::chrono::steady_clock::now();
    auto manifest = make_manifest("cohomology", resolver, common.seed, common.workers,
                                  {opt.presentation_file, opt.representation_file});

    const groupcoh::Presentation pres = io::load_presentation(opt.presentation_file);
    const groupcoh::MatrixRep rep = io::load_representation(opt.representation_file, pres);

    if (opt.degrees.empty()) {
        const groupcoh::CocycleSpaceReport report = groupcoh::h1_dimension(pres, rep);
        std::printf("cocycles %zu, coboundaries %zu, H^1 dimension %zu (%s path)\n", report.z1,
                    report.b1, report.h1, report.exact_path ? "exact" : "float");
        write_output(common.out_dir, "cocycles.json", io::cocycle_json(report));
    } else {
        // Truncated vanishing mode: the representation must be a list of
        // special-orthogonal images, which then act on the harmonic
        // polynomials of each requested degree.
        std::vector<Eigen::MatrixXd> images;
        if (rep.is_exact()) {
            for (const auto& m : rep.exact_images) {
                Eigen::MatrixXd f(static_cast<Eigen::Index>(m.rows()),
                                  static_cast<Eigen::Index>(m.cols()));
                for (std::size_t i = 0; i < m.rows(); ++i)
                    for (std::size_t j = 0; j < m.cols(); ++j)
                        f(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                            m(i, j).to_double();
                images.push_back(std::move(f));
            }
        } else {
            images = rep.float_images;
        }
        const auto reports = groupcoh::truncated_rigidity_check(pres, images, opt.degrees,
                                                                opt.budget, common.workers);
        bool all_zero = true;
        for (const auto& r : reports) {
            std::printf("degree %zu (harmonic dimension %zu): H^1 dimension %zu\n", r.degree,
                        r.harmonic_dimension, r.cocycles.h1);
            all_zero = all_zero && r.cocycles.h1 == 0;
        }
        std::printf("tested degrees %s\n", all_zero ? "all vanish" : "do not all vanish");
        write_output(common.out_dir, "rigidity.json", io::rigidity_json(reports));
    }

    finish_manifest(std::move(manifest), common.out_dir,
                    std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
}

}  // namespace folrig::cli
