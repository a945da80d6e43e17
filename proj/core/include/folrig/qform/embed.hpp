#pragma once

#include <Eigen/Dense>

#include "folrig/exactnum/quadratic.hpp"
#include "folrig/qform/form.hpp"
#include "folrig/qform/orthogonal.hpp"

namespace folrig::qform {

struct EmbeddedElement {
    Eigen::MatrixXd matrix;
    // Max-norm defect of the congruence sigma(M)^T sigma(A) sigma(M) = sigma(A),
    // evaluated in extended precision on correctly rounded entry images.
    double residual = 0.0;
    int embedding_id = 0;
};

// Entrywise image of a certified member under a real embedding (default: the
// conjugate embedding, whose form is the definite one).  The exact congruence
// guarantees the float images nearly preserve the embedded form; a residual
// above `residual_tol` means precision was genuinely exhausted and throws
// rather than returning a silently bad matrix.
EmbeddedElement galois_embed_element(const OrthogonalElement<exactnum::QuadElement>& g,
                                     const QuadraticForm<exactnum::QuadElement>& phi,
                                     int embedding_id = 2, double residual_tol = 1e-12);

// Image moved to the standard orthogonal group: factor the embedded form as
// sigma(A) = L L^T (it must be positive definite under this embedding) and
// conjugate, N = L^T sigma(M) L^{-T}, which satisfies N^T N = I up to
// roundoff.  The defect is enforced within `tol`.  This is the normal form
// consumed by the word-ball and averaging diagnostics.
Eigen::MatrixXd orthonormalized_embedding(const OrthogonalElement<exactnum::QuadElement>& g,
                                          const QuadraticForm<exactnum::QuadElement>& phi,
                                          int embedding_id = 2, double tol = 1e-10);

}  // namespace folrig::qform
