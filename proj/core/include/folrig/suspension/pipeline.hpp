#pragma once

#include <cstddef>
#include <optional>

#include "folrig/liealg/invariants.hpp"
#include "folrig/liealg/lie_algebra.hpp"

namespace folrig::suspension {

// Algebra-level obstruction summary for dense-leaved Lie foliations:
// perfectness (necessary for infinitesimal rigidity), compact-type
// semisimplicity (the spectral route to sufficiency), and the absence of
// so(3) simple factors (the superrigidity route).  With an ideal supplied,
// also whether reducing the structural algebra by it preserves
// infinitesimal rigidity: it does exactly when the ideal is perfect,
// i.e. its first cohomology vanishes.
struct ObstructionReport {
    std::size_t dimension = 0;
    bool perfect = false;
    bool compact_type = false;
    bool semisimple = false;
    bool so3_factor = false;
    // Conjunction of the strongest wired criterion: perfect, compact-type
    // semisimple, and free of so(3) factors.
    bool full_criterion = false;

    std::optional<std::size_t> ideal_h1;
    std::optional<bool> reduction_preserves_rigidity;
};

ObstructionReport rigidity_pipeline(const liealg::LieAlgebra& g);
ObstructionReport rigidity_pipeline(const liealg::LieAlgebra& g, const liealg::Subspace& ideal);

}  // namespace folrig::suspension
