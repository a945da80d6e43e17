#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "folrig/errors.hpp"
#include "folrig/exactnum/quadratic.hpp"
#include "folrig/qform/form.hpp"
#include "folrig/qform/orthogonal.hpp"

namespace folrig::qform {

// Product of the two orthogonal reflections through v and w:
//
//   s_v(x) = x - (2 B(x, v) / Phi(v)) v,
//
// each of determinant -1, so the product lands in the special orthogonal
// group.  Both reflections must map the standard lattice into itself; a
// reflection with non-integral matrix is rejected rather than silently
// cleared by the product.
template <typename F>
OrthogonalElement<F> reflection_pair(const QuadraticForm<F>& phi, const std::vector<F>& v,
                                     const std::vector<F>& w) {
    const auto reflection = [&phi](const std::vector<F>& u) {
        if (u.size() != phi.n()) throw ValidationError("reflection vector has wrong length");
        for (const F& entry : u)
            if (!FieldTraits<F>::is_ring_integer(entry))
                throw ValidationError("reflection vector must have ring-integer entries");
        const F value = phi.evaluate(u);
        if (value.is_zero())
            throw ValidationError("IsotropicVector: cannot reflect through a vector with "
                                  "Phi(v) = 0");
        // Column k is the image of the k-th basis vector.
        const std::vector<F> au = phi.matrix().apply(u);  // B(e_k, u) by symmetry
        exactnum::ExactMatrix<F> m = exactnum::ExactMatrix<F>::identity(phi.n());
        const F two = F::one() + F::one();
        for (std::size_t k = 0; k < phi.n(); ++k) {
            if (au[k].is_zero()) continue;
            const F factor = two * au[k] / value;
            for (std::size_t r = 0; r < phi.n(); ++r)
                if (!u[r].is_zero()) m(r, k) = m(r, k) - factor * u[r];
        }
        for (std::size_t r = 0; r < phi.n(); ++r)
            for (std::size_t k = 0; k < phi.n(); ++k)
                if (!FieldTraits<F>::is_ring_integer(m(r, k)))
                    throw ValidationError("NonIntegral: reflection does not preserve the "
                                          "standard lattice");
        return m;
    };
    return certify_member(reflection(v) * reflection(w), phi, std::string("reflection_pair"));
}

// Exhaustive search for members supported on one coordinate plane: 2x2 blocks
// [[alpha, beta], [gamma, delta]] padded by the identity, with coefficients
// a + b*sqrt2 ranging over |a|, |b| <= height.  Requires the two diagonal
// form coefficients of the plane to be nonzero.  Hits are certified and
// returned sorted by entry height, then lexicographically, so the output is
// independent of how the box was scanned (and of `workers`).
std::vector<OrthogonalElement<exactnum::QuadElement>> plane_rotation_search(
    const QuadraticForm<exactnum::QuadElement>& phi, std::size_t i, std::size_t j, long height,
    unsigned workers = 1);

// Full generator sweep used by the forge pipeline: plane rotations for every
// coordinate plane plus the coordinate reflection pairs, deduplicated and
// deterministically ordered.  The identity is never included.
GeneratorSet<exactnum::QuadElement> search_generators(
    const QuadraticForm<exactnum::QuadElement>& phi, long height, unsigned workers = 1);

}  // namespace folrig::qform
