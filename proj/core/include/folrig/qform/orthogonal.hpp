#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "folrig/errors.hpp"
#include "folrig/exactnum/matrix.hpp"
#include "folrig/qform/form.hpp"

namespace folrig::qform {

// Outcome of the three exact membership checks for the special orthogonal
// group of a form over the ring of integers.  All flags true means member.
struct MembershipCheck {
    bool congruence = false;        // M^T A M = A
    bool unit_determinant = false;  // det M = 1
    bool integral = false;          // every entry lies in the ring of integers

    bool ok() const { return congruence && unit_determinant && integral; }

    std::string failure_summary() const {
        std::string out;
        auto add = [&](const char* what) {
            if (!out.empty()) out += ", ";
            out += what;
        };
        if (!congruence) add("congruence M^T A M = A fails");
        if (!unit_determinant) add("determinant is not 1");
        if (!integral) add("entries leave the ring of integers");
        return out.empty() ? "ok" : out;
    }
};

// A certified element of SO_Phi(O): the exact matrix, an optional provenance
// word describing how it was found, and the checks it passed.  Instances are
// produced by certify_member and the search routines, never assembled by
// hand, so the certificate is always all-true.
template <typename F>
struct OrthogonalElement {
    exactnum::ExactMatrix<F> matrix;
    std::optional<std::string> word;
    MembershipCheck certificate;
};

template <typename F>
MembershipCheck check_membership(const exactnum::ExactMatrix<F>& m, const QuadraticForm<F>& phi) {
    MembershipCheck out;
    if (m.rows() != phi.n() || m.cols() != phi.n())
        throw ValidationError("membership check needs a " + std::to_string(phi.n()) + "x" +
                              std::to_string(phi.n()) + " matrix");
    out.congruence = (m.transpose() * phi.matrix() * m == phi.matrix());
    out.unit_determinant = exact_det(m).is_one();
    out.integral = true;
    for (std::size_t i = 0; i < m.rows() && out.integral; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!FieldTraits<F>::is_ring_integer(m(i, j))) {
                out.integral = false;
                break;
            }
    return out;
}

template <typename F>
OrthogonalElement<F> certify_member(exactnum::ExactMatrix<F> m, const QuadraticForm<F>& phi,
                                    std::optional<std::string> word = std::nullopt) {
    MembershipCheck check = check_membership(m, phi);
    if (!check.ok()) throw ValidationError("rejected: " + check.failure_summary());
    return OrthogonalElement<F>{std::move(m), std::move(word), check};
}

// Exact inverse without elimination: the congruence gives M^{-1} = A^{-1} M^T A
// for any member.  The result is certified again (the group is closed under
// inversion, so this cannot fail for genuine members).
template <typename F>
OrthogonalElement<F> orthogonal_inverse(const OrthogonalElement<F>& g,
                                        const QuadraticForm<F>& phi) {
    exactnum::ExactMatrix<F> inv =
        exact_inverse(phi.matrix()) * g.matrix.transpose() * phi.matrix();
    std::optional<std::string> word;
    if (g.word) word = "inv(" + *g.word + ")";
    return certify_member(std::move(inv), phi, std::move(word));
}

template <typename F>
OrthogonalElement<F> member_product(const OrthogonalElement<F>& g, const OrthogonalElement<F>& h,
                                    const QuadraticForm<F>& phi) {
    std::optional<std::string> word;
    if (g.word && h.word) word = *g.word + "*" + *h.word;
    return certify_member(g.matrix * h.matrix, phi, std::move(word));
}

// Generators found by search, with a note recording which searches produced
// them.  Every element passed certification when it was constructed.
template <typename F>
struct GeneratorSet {
    std::vector<OrthogonalElement<F>> elements;
    std::string closure_note;
};

}  // namespace folrig::qform
