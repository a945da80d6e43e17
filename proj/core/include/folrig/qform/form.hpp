#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "folrig/errors.hpp"
#include "folrig/exactnum/cubic.hpp"
#include "folrig/exactnum/matrix.hpp"
#include "folrig/exactnum/quadratic.hpp"

namespace folrig::qform {

// Archimedean data of the coefficient field: how many embeddings into C there
// are, which of them are real, and how to evaluate exact signs under the real
// ones.  Embedding ids are 1-based; id 1 is always the identity embedding.
template <typename F>
struct FieldTraits;

template <>
struct FieldTraits<exactnum::QuadElement> {
    static constexpr const char* name = "Q(sqrt2)";
    static constexpr int embedding_count = 2;
    static bool is_real(int id) { return id == 1 || id == 2; }

    // The embeddings are field automorphisms here, so conjugated elements
    // stay inside the field.
    static exactnum::QuadElement apply(const exactnum::QuadElement& x, int id) {
        check(id);
        return id == 1 ? x : x.conjugate();
    }
    static int sign_at(const exactnum::QuadElement& x, int id) {
        check(id);
        return id == 1 ? x.sign() : x.conjugate().sign();
    }
    static bool is_ring_integer(const exactnum::QuadElement& x) { return x.is_integral(); }

private:
    static void check(int id) {
        if (id < 1 || id > embedding_count)
            throw ValidationError("Q(sqrt2) has embeddings 1 and 2, got id " + std::to_string(id));
    }
};

template <>
struct FieldTraits<exactnum::CubicElement> {
    static constexpr const char* name = "Q(cbrt2)";
    static constexpr int embedding_count = 3;  // one real, one complex pair
    static bool is_real(int id) { return id == 1; }

    static exactnum::CubicElement apply(const exactnum::CubicElement& x, int id) {
        if (id == 1) return x;
        // The complex embeddings leave the field, so there is no conjugate
        // *form* over the same coefficients; numeric images live in the
        // embedding layer instead.
        throw ValidationError("embedding " + std::to_string(id) +
                              " of Q(cbrt2) is complex and does not preserve the field");
    }
    static int sign_at(const exactnum::CubicElement& x, int id) {
        if (id == 1) return exactnum::sign_at_real_root(x);
        throw ValidationError("sign under a complex embedding of Q(cbrt2) is undefined");
    }
    static bool is_ring_integer(const exactnum::CubicElement& x) { return x.is_integral(); }
};

// Nondegenerate quadratic form in n variables with coefficients in K, held as
// the symmetric Gram matrix.  Construction validates symmetry and checks the
// determinant exactly, so a live instance is always a genuine form.
template <typename F>
class QuadraticForm {
public:
    explicit QuadraticForm(exactnum::ExactMatrix<F> matrix) : a_(std::move(matrix)) {
        if (a_.rows() != a_.cols()) throw ValidationError("form matrix must be square");
        if (a_.rows() == 0) throw ValidationError("form needs at least one variable");
        for (std::size_t i = 0; i < a_.rows(); ++i)
            for (std::size_t j = i + 1; j < a_.cols(); ++j)
                if (a_(i, j) != a_(j, i))
                    throw ValidationError("form matrix is not symmetric at (" + std::to_string(i) +
                                          ", " + std::to_string(j) + ")");
        if (exact_det(a_).is_zero()) throw ValidationError("degenerate form: determinant is zero");
    }

    static QuadraticForm diagonal(const std::vector<F>& entries) {
        exactnum::ExactMatrix<F> m(entries.size(), entries.size());
        for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
        return QuadraticForm(std::move(m));
    }

    std::size_t n() const { return a_.rows(); }
    const exactnum::ExactMatrix<F>& matrix() const { return a_; }
    static constexpr const char* field_tag() { return FieldTraits<F>::name; }

    // Polar form B(x, y) = x^T A y; B(x, x) is the value of the form.
    F bilinear(const std::vector<F>& x, const std::vector<F>& y) const {
        if (x.size() != n() || y.size() != n())
            throw ValidationError("form evaluation with wrong vector length");
        const std::vector<F> ay = a_.apply(y);
        F acc{};
        for (std::size_t i = 0; i < x.size(); ++i)
            if (!x[i].is_zero() && !ay[i].is_zero()) acc += x[i] * ay[i];
        return acc;
    }
    F evaluate(const std::vector<F>& x) const { return bilinear(x, x); }

private:
    exactnum::ExactMatrix<F> a_;
};

namespace detail {

// Symmetric congruence reduction over the coefficient field.  Returns the
// diagonal of a form congruent to the input; degenerate directions surface as
// zero entries.  All steps are exact row+column operations, so the diagonal
// is exact field data ready for per-embedding sign evaluation.
template <typename F>
std::vector<F> congruent_diagonal(exactnum::ExactMatrix<F> a) {
    const std::size_t n = a.rows();
    auto swap_rows_cols = [&](std::size_t x, std::size_t y) {
        for (std::size_t t = 0; t < n; ++t) std::swap(a(x, t), a(y, t));
        for (std::size_t t = 0; t < n; ++t) std::swap(a(t, x), a(t, y));
    };
    for (std::size_t k = 0; k < n; ++k) {
        if (a(k, k).is_zero()) {
            std::size_t l = k + 1;
            while (l < n && a(l, l).is_zero()) ++l;
            if (l < n) {
                swap_rows_cols(k, l);
            } else {
                // Whole remaining diagonal is zero; a nonzero off-diagonal
                // entry can be folded onto the diagonal (row_i += row_j and
                // col_i += col_j turns a(i,i) into 2 a(i,j)).
                std::size_t pi = n, pj = n;
                for (std::size_t i = k; i < n && pi == n; ++i)
                    for (std::size_t j = i + 1; j < n; ++j)
                        if (!a(i, j).is_zero()) {
                            pi = i;
                            pj = j;
                            break;
                        }
                if (pi == n) break;  // remaining block is identically zero
                for (std::size_t t = 0; t < n; ++t) a(pi, t) += a(pj, t);
                for (std::size_t t = 0; t < n; ++t) a(t, pi) += a(t, pj);
                if (pi != k) swap_rows_cols(k, pi);
            }
        }
        const F pivot = a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a(i, k).is_zero()) continue;
            const F f = a(i, k) / pivot;
            for (std::size_t t = k; t < n; ++t) a(i, t) = a(i, t) - f * a(k, t);
            for (std::size_t t = k; t < n; ++t) a(t, i) = a(t, i) - f * a(t, k);
        }
    }
    std::vector<F> diag(n);
    for (std::size_t k = 0; k < n; ++k) diag[k] = a(k, k);
    return diag;
}

}  // namespace detail

// Entrywise Galois conjugate of the form.  Only meaningful for embeddings
// that map the field to itself (both embeddings of Q(sqrt2); only the
// identity for Q(cbrt2)).
template <typename F>
QuadraticForm<F> conjugate_form(const QuadraticForm<F>& phi, int embedding_id) {
    exactnum::ExactMatrix<F> m(phi.n(), phi.n());
    for (std::size_t i = 0; i < phi.n(); ++i)
        for (std::size_t j = 0; j < phi.n(); ++j)
            m(i, j) = FieldTraits<F>::apply(phi.matrix()(i, j), embedding_id);
    return QuadraticForm<F>(std::move(m));
}

// Signature (p, q) of the real symmetric matrix obtained by pushing the form
// through a real embedding.  Diagonalize by congruence over the field first,
// then read exact signs of the diagonal under the embedding; no floating
// point is involved, so values squeezed against zero cannot be misread.
template <typename F>
std::pair<std::size_t, std::size_t> real_signature(const QuadraticForm<F>& phi, int embedding_id) {
    if (!FieldTraits<F>::is_real(embedding_id))
        throw ValidationError("real_signature requires a real embedding, got id " +
                              std::to_string(embedding_id));
    const std::vector<F> diag = detail::congruent_diagonal(phi.matrix());
    std::size_t p = 0, q = 0;
    for (const F& d : diag) {
        const int s = FieldTraits<F>::sign_at(d, embedding_id);
        if (s > 0)
            ++p;
        else if (s < 0)
            ++q;
    }
    if (p + q < phi.n())
        throw ValidationError("degenerate form: zero pivot after symmetric reduction");
    return {p, q};
}

struct EmbeddingInfo {
    int id = 1;
    bool real = true;
    // Signature under the embedding; meaningful only when real.
    std::size_t positive = 0;
    std::size_t negative = 0;
    bool definite = false;
};

// The three sets driving the arithmetic-group construction: every embedding,
// the ones whose real conjugate form is (positive or negative) definite, and
// the user's working selection, which must contain all non-definite ones.
struct EmbeddingClassification {
    std::vector<EmbeddingInfo> all_embeddings;
    std::vector<int> definite_set;
    std::vector<int> chosen_set;
};

template <typename F>
EmbeddingClassification classify_embeddings(const QuadraticForm<F>& phi,
                                            std::vector<int> chosen = {}) {
    EmbeddingClassification out;
    for (int id = 1; id <= FieldTraits<F>::embedding_count; ++id) {
        EmbeddingInfo info;
        info.id = id;
        info.real = FieldTraits<F>::is_real(id);
        if (info.real) {
            const auto [p, q] = real_signature(phi, id);
            info.positive = p;
            info.negative = q;
            info.definite = (p == 0 || q == 0);
        }
        if (info.definite) out.definite_set.push_back(id);
        out.all_embeddings.push_back(info);
    }

    std::vector<int> required;  // embeddings that any selection must keep
    for (const EmbeddingInfo& e : out.all_embeddings)
        if (!e.definite) required.push_back(e.id);

    if (chosen.empty()) {
        out.chosen_set = required;
        return out;
    }
    std::sort(chosen.begin(), chosen.end());
    chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
    for (int id : chosen)
        if (id < 1 || id > FieldTraits<F>::embedding_count)
            throw ValidationError("chosen embedding id " + std::to_string(id) + " does not exist");
    for (int id : required)
        if (!std::binary_search(chosen.begin(), chosen.end(), id))
            throw ValidationError("chosen embedding set must contain every non-definite "
                                  "embedding; missing id " +
                                  std::to_string(id));
    out.chosen_set = std::move(chosen);
    return out;
}

// Sufficient anisotropy certificate: if some real embedding makes the form
// definite, a nontrivial zero over the field would map to a nontrivial zero
// of a definite real form, which cannot exist.  A `false` answer is silent
// about isotropy; it only means this particular certificate is unavailable.
template <typename F>
bool anisotropy_by_conjugate_definiteness(const QuadraticForm<F>& phi) {
    for (int id = 1; id <= FieldTraits<F>::embedding_count; ++id) {
        if (!FieldTraits<F>::is_real(id)) continue;
        const auto [p, q] = real_signature(phi, id);
        if (p == 0 || q == 0) return true;
    }
    return false;
}

// Determinant of the Gram matrix.  Plumbing for square-class inspection; no
// normalization by sign or squares is applied.
template <typename F>
F discriminant(const QuadraticForm<F>& phi) {
    return exact_det(phi.matrix());
}

}  // namespace folrig::qform
