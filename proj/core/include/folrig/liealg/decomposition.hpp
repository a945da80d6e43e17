#ifndef FOLRIG_LIEALG_DECOMPOSITION_HPP
#define FOLRIG_LIEALG_DECOMPOSITION_HPP

#include <vector>

#include "folrig/liealg/invariants.hpp"

namespace folrig::liealg {

struct IdealInfo {
    Subspace ideal;
    std::size_t dimension = 0;
    bool compact_type = false;
    // Dimension of the commutant (endomorphism algebra) of the ideal as a
    // module; 1 means absolutely simple.  A Q-minimal ideal with commutant a
    // degree-d field is a sum of d Galois-conjugate simple factors of
    // dimension dimension/d each.
    std::size_t endo_degree = 1;
    bool is_so3 = false;
};

struct IdealDecomposition {
    std::vector<IdealInfo> ideals;
    // True when every returned ideal is certified absolutely simple
    // (endo_degree 1).  The bundled corpus always splits completely.
    bool split_complete = true;
};

// Smallest ideal of g containing the seed vectors: repeated bracketing with
// the basis until the span stabilizes.
Subspace ideal_closure(const LieAlgebra& g, const std::vector<std::vector<Rational>>& seeds);

// Decomposition of a semisimple algebra into minimal ideals.  Splitting uses
// basis-vector ideal closures where they suffice and otherwise eigenspaces of
// rational commutant elements (exact kernels only — no floating eigensolves).
// Throws on a degenerate Killing form ("NotSemisimple").
IdealDecomposition simple_decomposition(const LieAlgebra& g);

// Thm.-D-style gate: some minimal ideal is (a sum of copies of) the
// 3-dimensional compact simple algebra.  Requires semisimple + compact type.
bool detect_so3_factor(const LieAlgebra& g);

struct Quotient {
    LieAlgebra algebra;
    ExactMatrix<Rational> projection;         // quotient-dim x ambient-dim
    std::vector<std::size_t> coset_rep_cols;  // ambient basis indices spanning the complement
};

// g/h for an ideal h, with the projection matrix onto a complement basis of
// coordinate vectors.  Verifies pr[x,y] = [pr x, pr y] on all basis pairs.
Quotient quotient_by_ideal(const LieAlgebra& g, const Subspace& h);

}  // namespace folrig::liealg

#endif
