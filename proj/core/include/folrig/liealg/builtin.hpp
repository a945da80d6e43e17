#pragma once

#include <cstddef>

#include "folrig/liealg/lie_algebra.hpp"

namespace folrig::liealg {

// Stock algebras used throughout the test and tool layers.

// Antisymmetric n x n matrices under the commutator, with the basis
// L_ab = E_ab - E_ba for a < b ordered lexicographically.  Supported for
// 3 <= n <= 7; the structure constants are read off from actual matrix
// commutators rather than hand-expanded delta formulas.
LieAlgebra special_orthogonal(std::size_t n);

// The 3-dimensional algebra with [x, y] = z and z central.
LieAlgebra heisenberg();

// n-dimensional algebra with every bracket zero.
LieAlgebra abelian(std::size_t n);

// Block sum: brackets within each summand are kept, cross brackets vanish.
LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

}  // namespace folrig::liealg
