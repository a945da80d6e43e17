#include "folrig/suspension/pipeline.hpp"

#include "folrig/errors.hpp"
#include "folrig/liealg/cohomology.hpp"
#include "folrig/liealg/decomposition.hpp"

namespace folrig::suspension {

ObstructionReport rigidity_pipeline(const liealg::LieAlgebra& g) {
    ObstructionReport report;
    report.dimension = g.dim();
    report.perfect = liealg::is_perfect(g);
    report.compact_type = liealg::is_compact_type(g);
    report.semisimple = liealg::is_semisimple(g);
    // the so(3)-factor question only makes sense past the earlier gates;
    // algebras that already failed them get a report, not an exception
    report.so3_factor =
        report.compact_type && report.semisimple && liealg::detect_so3_factor(g);
    report.full_criterion =
        report.perfect && report.compact_type && report.semisimple && !report.so3_factor;
    return report;
}

ObstructionReport rigidity_pipeline(const liealg::LieAlgebra& g, const liealg::Subspace& ideal) {
    ObstructionReport report = rigidity_pipeline(g);
    if (ideal.ambient_dim() != g.dim())
        throw ValidationError("rigidity pipeline: ideal lives in the wrong ambient space");

    // [g, h] must land back in h; bracket-closedness alone (a subalgebra)
    // is not enough for the reduction statement.
    for (std::size_t i = 0; i < g.dim(); ++i) {
        std::vector<exactnum::Rational> e(g.dim());
        e[i] = exactnum::Rational::one();
        for (std::size_t j = 0; j < ideal.dim(); ++j)
            if (!ideal.contains(g.bracket(e, ideal.basis_vector(j))))
                throw ValidationError("rigidity pipeline: the supplied subspace is not an ideal");
    }

    const liealg::LieAlgebra h = liealg::subalgebra_on(g, ideal);
    report.ideal_h1 = liealg::ce_cohomology(h, 1).dimension;
    report.reduction_preserves_rigidity = (*report.ideal_h1 == 0);
    return report;
}

}  // namespace folrig::suspension
