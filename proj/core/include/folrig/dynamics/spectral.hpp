#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <optional>
#include <vector>

#include "folrig/dynamics/harmonic.hpp"
#include "folrig/dynamics/word_ball.hpp"

namespace folrig::dynamics {

// Matrix of the substitution action p |-> p(g^{-1} x) on the harmonic space,
// in raw harmonic-basis coordinates.  The exact variant demands an exactly
// orthogonal rational matrix; the float variant accepts matrices orthogonal
// to 1e-10 (word-ball elements, embedded generators).
ExactMatrix<Rational> harmonic_action_exact(const HarmonicSpace& space,
                                            const ExactMatrix<Rational>& g);
Eigen::MatrixXd harmonic_action(const HarmonicSpace& space, const Eigen::MatrixXd& g);

// The same action conjugated into L2-orthonormal coordinates, where it is an
// orthogonal matrix up to float error.  This is the representation used by
// the gap and equidistribution diagnostics.
Eigen::MatrixXd representation_matrix(const HarmonicSpace& space, const Eigen::MatrixXd& g);

struct GapEstimate {
    std::size_t degree = 0;
    // Operator norm of the generator average on the invariant-free part and
    // the resulting gap 1 - norm; absent when that part is zero-dimensional
    // (then there is nothing to estimate and `empty_invariant_free` is set).
    std::optional<double> estimate;
    std::optional<double> gap;
    std::size_t iterations = 0;
    double tolerance = 0.0;
    bool converged = false;
    bool empty_invariant_free = false;
    // Whether the invariant subspace came from an exact rational kernel or
    // from a float SVD threshold.
    bool invariant_space_exact = false;
    std::size_t invariant_dimension = 0;
};

// Spectral norm of Delta = (1/|Q|) sum_{s in Q} pi(s) restricted to the
// orthogonal complement of the Q-invariant vectors, by power iteration on
// Delta^T Delta with relative tolerance `tol` (throws NotConverged past
// `max_iters`).  Q must be symmetrized: each generator's transpose must
// appear in the list (within 1e-8).  When `exact_generators` is supplied
// (parallel to `gens`, exactly orthogonal rational matrices), the invariant
// subspace is the exact kernel of the stacked pi(s) - I; otherwise it comes
// from a float SVD with singular threshold 1e-8.
GapEstimate averaging_operator_norm(const std::vector<Eigen::MatrixXd>& gens,
                                    const HarmonicSpace& space, double tol = 1e-8,
                                    std::size_t max_iters = 500,
                                    const std::vector<ExactMatrix<Rational>>* exact_generators =
                                        nullptr);

// Equidistribution deviation of a word ball on one harmonic space: the
// spectral norm of (1/|ball|) sum_{g in ball} pi(g).  For degree >= 1 the
// full rotation group has no invariant harmonics, so the whole space is the
// invariant-free part and small deviations witness Haar-like spreading.
// Computed by walking the ball layer by layer with pi(parent * s) =
// pi(parent) pi(s), so memory stays at two layers of representation
// matrices.
double weyl_deviation(const WordBall& ball, const HarmonicSpace& space);

}  // namespace folrig::dynamics
