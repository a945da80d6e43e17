#pragma once

#include <cstddef>
#include <vector>

#include "folrig/exactnum/matrix.hpp"
#include "folrig/exactnum/rational.hpp"
#include "folrig/liealg/lie_algebra.hpp"

namespace folrig::liealg {

// Lie-algebra cohomology with trivial coefficients, computed from the exterior
// complex of the dual space.  Cochains in degree k are indexed by the k-element
// subsets of {0, ..., dim-1}, listed in lexicographic order; a cochain is the
// vector of its coefficients against that subset basis.

// All k-element subsets of {0, ..., n-1} in lexicographic order.  This fixes
// the coordinate convention used by ce_differential and the representatives
// below, so it is part of the public interface.
std::vector<std::vector<std::size_t>> k_subsets(std::size_t n, std::size_t k);

// Matrix of the degree-k differential, mapping coefficient vectors on the
// k-subset basis to coefficient vectors on the (k+1)-subset basis.  Built
// entry-by-entry from the structure constants:
//
//   (d w)(x_0, ..., x_k) = sum_{i<j} (-1)^{i+j} w([x_i, x_j], x_0, ..,
//                                                 ^without x_i and x_j)
//
// Evaluating on basis tuples reduces each term to a single structure constant
// times the sign of the shuffle that re-sorts the arguments.
exactnum::ExactMatrix<exactnum::Rational> ce_differential(const LieAlgebra& g, std::size_t k);

struct CohomologyReport {
    std::size_t degree = 0;
    std::size_t dimension = 0;
    // Cocycle coefficient vectors (k-subset basis) spanning a complement of
    // the coboundaries inside the cocycles; `dimension` of them.
    std::vector<std::vector<exactnum::Rational>> representatives;
};

// Dimension and representatives of the degree-k cohomology.  The subset bases
// in degrees k and k+1 may not exceed `budget` elements each; a request beyond
// that throws BudgetExceeded rather than silently grinding.
CohomologyReport ce_cohomology(const LieAlgebra& g, std::size_t k, std::size_t budget = 5000);

}  // namespace folrig::liealg
