#include "folrig/qform/search.hpp"

#include <algorithm>
#include <thread>
#include <utility>

namespace folrig::qform {

using exactnum::ExactMatrix;
using exactnum::QuadElement;
using exactnum::Rational;

namespace {

using Element = OrthogonalElement<QuadElement>;

Rational coefficient_height(const QuadElement& x) {
    const Rational a = x.a().abs(), b = x.b().abs();
    return a > b ? a : b;
}

Rational element_height(const Element& e) {
    Rational h;
    for (std::size_t i = 0; i < e.matrix.rows(); ++i)
        for (std::size_t j = 0; j < e.matrix.cols(); ++j) {
            Rational c = coefficient_height(e.matrix(i, j));
            if (c > h) h = std::move(c);
        }
    return h;
}

// Total order: height, then row-major coefficient tuples, then provenance
// word.  Content-based, so merged multi-worker output sorts identically to
// serial output; the word tiebreak keeps deduplication deterministic when
// different searches produce the same matrix.
bool element_less(const Element& x, const Element& y) {
    const Rational hx = element_height(x), hy = element_height(y);
    if (hx != hy) return hx < hy;
    for (std::size_t i = 0; i < x.matrix.rows(); ++i)
        for (std::size_t j = 0; j < x.matrix.cols(); ++j) {
            const QuadElement &a = x.matrix(i, j), &b = y.matrix(i, j);
            if (a.a() != b.a()) return a.a() < b.a();
            if (a.b() != b.b()) return a.b() < b.b();
        }
    return x.word.value_or("") < y.word.value_or("");
}

}  // namespace

std::vector<Element> plane_rotation_search(const QuadraticForm<QuadElement>& phi, std::size_t i,
                                           std::size_t j, long height, unsigned workers) {
    if (i == j) throw ValidationError("plane search needs two distinct indices");
    if (i >= phi.n() || j >= phi.n()) throw ValidationError("plane index out of range");
    if (height < 0) throw ValidationError("negative height bound");
    const QuadElement qii = phi.matrix()(i, i), qjj = phi.matrix()(j, j);
    if (qii.is_zero() || qjj.is_zero())
        throw ValidationError("plane search requires nonzero diagonal coefficients in the "
                              "chosen plane");

    // Solutions of the three plane-congruence equations plus det = 1 are
    // parametrized by (alpha, gamma) alone: given the first equation
    // q_ii a^2 + q_jj g^2 = q_ii, the zero-product and determinant equations
    // form a linear system in (beta, delta) with determinant q_ii != 0, so
    //   beta = -(q_jj / q_ii) gamma,  delta = alpha
    // are forced, and the second congruence equation follows identically.
    // Scanning (alpha, gamma) therefore loses no solutions of the full box
    // scan; beta is only checked against the same height box afterwards.
    const long span = 2 * height + 1;
    const long alpha_combos = span * span;
    const Rational bound(height);
    const QuadElement ratio = qjj / qii;

    const auto scan = [&](long lo, long hi, std::vector<Element>& out) {
        for (long ai = lo; ai < hi; ++ai) {
            const QuadElement alpha(ai / span - height, ai % span - height);
            const QuadElement lhs_alpha = qii * alpha * alpha;
            for (long gc = -height; gc <= height; ++gc)
                for (long gd = -height; gd <= height; ++gd) {
                    const QuadElement gamma(gc, gd);
                    if (lhs_alpha + qjj * gamma * gamma != qii) continue;
                    const QuadElement beta = -(ratio * gamma);
                    if (coefficient_height(beta) > bound) continue;
                    ExactMatrix<QuadElement> m = ExactMatrix<QuadElement>::identity(phi.n());
                    m(i, i) = alpha;
                    m(i, j) = beta;
                    m(j, i) = gamma;
                    m(j, j) = alpha;
                    MembershipCheck check = check_membership(m, phi);
                    if (!check.ok()) continue;
                    std::string word = "plane(" + std::to_string(i) + "," + std::to_string(j) +
                                       "):" + alpha.to_string() + "," + gamma.to_string();
                    out.push_back(Element{std::move(m), std::move(word), check});
                }
        }
    };

    const unsigned nworkers =
        std::max(1u, std::min(workers, static_cast<unsigned>(alpha_combos)));
    std::vector<std::vector<Element>> partial(nworkers);
    if (nworkers == 1) {
        scan(0, alpha_combos, partial[0]);
    } else {
        std::vector<std::thread> pool;
        const long chunk = (alpha_combos + nworkers - 1) / nworkers;
        for (unsigned w = 0; w < nworkers; ++w) {
            const long lo = w * chunk, hi = std::min<long>(alpha_combos, lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back([&, lo, hi, w] { scan(lo, hi, partial[w]); });
        }
        for (std::thread& t : pool) t.join();
    }

    std::vector<Element> hits;
    for (std::vector<Element>& p : partial)
        for (Element& e : p) hits.push_back(std::move(e));
    std::sort(hits.begin(), hits.end(), element_less);
    return hits;
}

GeneratorSet<QuadElement> search_generators(const QuadraticForm<QuadElement>& phi, long height,
                                            unsigned workers) {
    const std::size_t n = phi.n();
    std::vector<Element> found;

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (phi.matrix()(i, i).is_zero() || phi.matrix()(j, j).is_zero()) continue;
            std::vector<Element> hits = plane_rotation_search(phi, i, j, height, workers);
            for (Element& e : hits) found.push_back(std::move(e));
        }

    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            std::vector<QuadElement> va(n), vb(n);
            va[a] = QuadElement::one();
            vb[b] = QuadElement::one();
            try {
                Element e = reflection_pair(phi, va, vb);
                e.word = "refl(e" + std::to_string(a) + ",e" + std::to_string(b) + ")";
                found.push_back(std::move(e));
            } catch (const ValidationError&) {
                // Isotropic or non-integral basis directions simply
                // contribute nothing to the sweep.
            }
        }

    std::sort(found.begin(), found.end(), element_less);
    const ExactMatrix<QuadElement> id = ExactMatrix<QuadElement>::identity(n);
    std::vector<Element> elements;
    for (Element& e : found) {
        if (e.matrix == id) continue;
        if (!elements.empty() && elements.back().matrix == e.matrix) continue;
        elements.push_back(std::move(e));
    }

    GeneratorSet<QuadElement> out;
    out.elements = std::move(elements);
    out.closure_note = "plane rotations on all coordinate planes (height <= " +
                       std::to_string(height) + ") and coordinate reflection pairs";
    return out;
}

}  // namespace folrig::qform
