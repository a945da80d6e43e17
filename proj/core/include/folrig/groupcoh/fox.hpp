#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <vector>

#include "folrig/groupcoh/presentation.hpp"

namespace folrig::groupcoh {

// Linear system cutting out the crossed homomorphisms psi: Gamma -> V,
// psi(gh) = psi(g) + pi(g) psi(h).  One block row per relator, one block
// column per generator; the (r, g) block accumulates the Fox derivative of
// relator r by generator g evaluated in the representation: pi(u) for each
// occurrence r = u g w, and -pi(u g^-1) for each occurrence r = u g^-1 w.
// psi, stacked generator by generator, is a cocycle iff it is in the kernel.
ExactMatrix<Rational> fox_matrix(const Presentation& pres, const MatrixRep& rep);
Eigen::MatrixXd fox_matrix_float(const Presentation& pres, const MatrixRep& rep);

struct CocycleSpaceReport {
    std::size_t z1 = 0;  // crossed homomorphisms
    std::size_t b1 = 0;  // principal ones, = dim V - dim V^Gamma
    std::size_t h1 = 0;  // z1 - b1
    bool exact_path = false;
    // Cocycle basis, one value vector per generator; the list matching the
    // path that ran is populated.
    std::vector<std::vector<std::vector<Rational>>> exact_cocycles;
    std::vector<std::vector<Eigen::VectorXd>> float_cocycles;
};

// Kernel of the Fox system plus the fixed-space count; rational
// representations are handled exactly, float ones with the 1e-8 absolute
// singular-value threshold for every rank decision.
CocycleSpaceReport h1_dimension(const Presentation& pres, const MatrixRep& rep);

struct TruncatedRigidityReport {
    std::size_t degree = 0;
    std::size_t harmonic_dimension = 0;
    CocycleSpaceReport cocycles;
};

// H^1(Gamma, H_d) for each listed degree, where Gamma acts on the degree-d
// spherical harmonics through the given special-orthogonal generator
// images.  Zero across all tested degrees is reported as exactly that: a
// truncated vanishing statement, one degree at a time.  Degrees may be
// processed by several workers; the output order always follows the input
// degree list.
std::vector<TruncatedRigidityReport> truncated_rigidity_check(
    const Presentation& pres, const std::vector<Eigen::MatrixXd>& images,
    const std::vector<std::size_t>& degrees, std::size_t budget = 10000, unsigned workers = 1);

}  // namespace folrig::groupcoh
