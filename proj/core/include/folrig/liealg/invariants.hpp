#ifndef FOLRIG_LIEALG_INVARIANTS_HPP
#define FOLRIG_LIEALG_INVARIANTS_HPP

#include <vector>

#include "folrig/liealg/lie_algebra.hpp"

namespace folrig::liealg {

// Subspace of a Lie algebra's underlying vector space, held as exact basis
// columns.  Construction reduces a spanning set to an independent basis, so
// the rank invariant holds by construction.
class Subspace {
public:
    Subspace(std::size_t ambient_dim, const std::vector<std::vector<Rational>>& spanning);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.cols(); }
    const ExactMatrix<Rational>& basis() const { return basis_; }

    std::vector<Rational> basis_vector(std::size_t idx) const;
    bool contains(const std::vector<Rational>& v) const;
    // Coordinates of v in this basis; empty optional when v lies outside.
    std::optional<std::vector<Rational>> coordinates(const std::vector<Rational>& v) const;

private:
    std::size_t ambient_ = 0;
    ExactMatrix<Rational> basis_;  // ambient x dim, full column rank
};

// Span of all brackets [e_i, e_j]; dim == dim(g) means g is perfect.
Subspace derived_subalgebra(const LieAlgebra& g);
bool is_perfect(const LieAlgebra& g);

// kappa(x, y) = trace(ad x . ad y), exact and symmetric.
ExactMatrix<Rational> killing_form(const LieAlgebra& g);

// Cartan's criterion: semisimple iff the Killing form is nondegenerate.
bool is_semisimple(const LieAlgebra& g);

// Compact type: Killing form negative definite, certified by exact leading
// principal minors with alternating signs ((-1)^k * minor_k > 0).
bool is_compact_type(const LieAlgebra& g);

// Negative-definiteness test reused for form restrictions to ideals.
bool is_negative_definite(const ExactMatrix<Rational>& sym);

// trace(ad x) = 0 for every x; holds for all the compact/semisimple corpus
// but not in general (e.g. the 2-dim algebra [x,y] = y).
bool is_unimodular(const LieAlgebra& g);

// All matrices ad(e_i), with the homomorphism property
// ad([e_i,e_j]) = ad(e_i) ad(e_j) - ad(e_j) ad(e_i) re-verified exactly.
std::vector<ExactMatrix<Rational>> adjoint_rep(const LieAlgebra& g);

// Structure constants induced on a bracket-closed subspace (its own
// LieAlgebra in the subspace basis).  Throws when the subspace is not
// closed under the bracket.
LieAlgebra subalgebra_on(const LieAlgebra& g, const Subspace& s);

}  // namespace folrig::liealg

#endif
