#include "folrig/liealg/decomposition.hpp"

#include <algorithm>
#include <deque>

#include "folrig/errors.hpp"

namespace folrig::liealg {

using exactnum::exact_kernel;
using exactnum::exact_rank;
using exactnum::exact_solve;

Subspace ideal_closure(const LieAlgebra& g, const std::vector<std::vector<Rational>>& seeds) {
    const std::size_t n = g.dim();
    std::vector<std::vector<Rational>> span = seeds;
    Subspace current(n, span);
    for (;;) {
        std::vector<std::vector<Rational>> grown;
        for (std::size_t c = 0; c < current.dim(); ++c) grown.push_back(current.basis_vector(c));
        std::vector<Rational> ei(n);
        for (std::size_t i = 0; i < n; ++i) {
            ei.assign(n, Rational());
            ei[i] = Rational::one();
            for (std::size_t c = 0; c < current.dim(); ++c)
                grown.push_back(g.bracket(ei, current.basis_vector(c)));
        }
        Subspace next(n, grown);
        if (next.dim() == current.dim()) return current;
        current = std::move(next);
    }
}

namespace {

// Matrix of ad(e_i) restricted to an ideal, in the ideal's basis.
ExactMatrix<Rational> restricted_ad(const LieAlgebra& g, const Subspace& s, std::size_t i) {
    const std::size_t r = s.dim();
    ExactMatrix<Rational> out(r, r);
    std::vector<Rational> ei(g.dim());
    ei[i] = Rational::one();
    for (std::size_t c = 0; c < r; ++c) {
        const auto img = g.bracket(ei, s.basis_vector(c));
        const auto coords = s.coordinates(img);
        if (!coords) throw ValidationError("subspace is not an ideal: bracket escapes it");
        for (std::size_t k = 0; k < r; ++k) out(k, c) = (*coords)[k];
    }
    return out;
}

// Basis of { X : X A_i = A_i X for all i } as r x r matrices.
std::vector<ExactMatrix<Rational>> commutant_basis(const std::vector<ExactMatrix<Rational>>& as) {
    const std::size_t r = as.empty() ? 0 : as[0].rows();
    ExactMatrix<Rational> sys(as.size() * r * r, r * r);
    std::size_t row = 0;
    for (const auto& a : as) {
        // (X A - A X)_{pq} = sum_m X_{pm} A_{mq} - A_{pm} X_{mq}
        for (std::size_t p = 0; p < r; ++p)
            for (std::size_t q = 0; q < r; ++q) {
                for (std::size_t m = 0; m < r; ++m) {
                    sys(row, p * r + m) += a(m, q);
                    sys(row, m * r + q) -= a(p, m);
                }
                ++row;
            }
    }
    std::vector<ExactMatrix<Rational>> basis;
    for (const auto& v : exact_kernel(sys)) {
        ExactMatrix<Rational> x(r, r);
        for (std::size_t p = 0; p < r; ++p)
            for (std::size_t q = 0; q < r; ++q) x(p, q) = v[p * r + q];
        basis.push_back(std::move(x));
    }
    return basis;
}

bool is_scalar_matrix(const ExactMatrix<Rational>& x) {
    const std::size_t r = x.rows();
    for (std::size_t p = 0; p < r; ++p)
        for (std::size_t q = 0; q < r; ++q) {
            if (p != q && !x(p, q).is_zero()) return false;
            if (p != q) continue;
            if (!(x(p, p) == x(0, 0))) return false;
        }
    return true;
}

// Monic minimal polynomial of X via Krylov iteration on vec(X^k);
// coefficients returned low degree first, excluding the leading 1.
std::vector<Rational> minimal_polynomial(const ExactMatrix<Rational>& x) {
    const std::size_t r = x.rows();
    std::vector<std::vector<Rational>> powers;  // vec(X^0), vec(X^1), ...
    ExactMatrix<Rational> p = ExactMatrix<Rational>::identity(r);
    for (std::size_t deg = 0; deg <= r * r; ++deg) {
        std::vector<Rational> v(r * r);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) v[i * r + j] = p(i, j);
        ExactMatrix<Rational> prev(r * r, powers.size());
        for (std::size_t c = 0; c < powers.size(); ++c)
            for (std::size_t k = 0; k < r * r; ++k) prev(k, c) = powers[c][k];
        if (auto sol = exact_solve(prev, v)) return *sol;
        powers.push_back(std::move(v));
        p = p * x;
    }
    throw ValidationError("minimal polynomial iteration failed to terminate");
}

// All rational roots of the monic polynomial t^d - sum c_k t^k (coefficients
// as produced by minimal_polynomial).  Clears denominators and trial-divides
// the constant and leading coefficients; candidate lists are capped, which is
// harmless — a missed root only delays splitting to another commutant element.
std::vector<Rational> rational_roots(const std::vector<Rational>& lowcoeffs) {
    std::vector<Rational> poly = lowcoeffs;  // p(t) = t^d - sum lowcoeffs[k] t^k
    for (Rational& c : poly) c = -c;
    poly.push_back(Rational::one());

    auto eval = [&poly](const Rational& t) {
        Rational acc;
        for (std::size_t k = poly.size(); k-- > 0;) acc = acc * t + poly[k];
        return acc;
    };

    std::vector<Rational> roots;
    auto try_candidate = [&](const Rational& cand) {
        if (eval(cand).is_zero() &&
            std::find(roots.begin(), roots.end(), cand) == roots.end())
            roots.push_back(cand);
    };

    // Root at zero first, then strip it so the constant term is nonzero.
    std::size_t low = 0;
    while (low < poly.size() - 1 && poly[low].is_zero()) ++low;
    if (low > 0) roots.push_back(Rational());

    // Common denominator D: integer polynomial coefficients are
    // poly[k] * D; rational roots are p/q with p | a0, q | ad.
    mpz_class den(1);
    for (std::size_t k = low; k < poly.size(); ++k)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), poly[k].denominator().get_mpz_t());
    mpz_class a0 = poly[low].numerator() * (den / poly[low].denominator());
    mpz_class ad = poly.back().numerator() * (den / poly.back().denominator());

    auto divisors = [](mpz_class v) {
        std::vector<mpz_class> divs;
        v = abs(v);
        if (v == 0) return divs;
        mpz_class bound = sqrt(v) + 1;
        const long cap = 2'000'000;
        for (mpz_class d = 1; d <= bound && d <= cap; ++d) {
            if (v % d == 0) {
                divs.push_back(d);
                divs.push_back(v / d);
            }
        }
        return divs;
    };

    for (const mpz_class& p : divisors(a0))
        for (const mpz_class& q : divisors(ad)) {
            Rational cand{mpq_class(p, q)};
            try_candidate(cand);
            try_candidate(-cand);
        }
    std::sort(roots.begin(), roots.end());
    return roots;
}

Subspace map_to_ambient(const Subspace& s, const std::vector<std::vector<Rational>>& coords) {
    std::vector<std::vector<Rational>> vecs;
    for (const auto& c : coords) {
        std::vector<Rational> v(s.ambient_dim());
        for (std::size_t k = 0; k < c.size(); ++k) {
            if (c[k].is_zero()) continue;
            for (std::size_t i = 0; i < s.ambient_dim(); ++i) v[i] += c[k] * s.basis()(i, k);
        }
        vecs.push_back(std::move(v));
    }
    return Subspace(s.ambient_dim(), vecs);
}

// Killing-orthogonal complement of sub inside s (both ideals of g).
Subspace killing_complement_within(const ExactMatrix<Rational>& kappa, const Subspace& s,
                                   const Subspace& sub) {
    // Rows: one per basis vector of sub; columns: s-coordinates.
    ExactMatrix<Rational> sys(sub.dim(), s.dim());
    for (std::size_t a = 0; a < sub.dim(); ++a)
        for (std::size_t b = 0; b < s.dim(); ++b) {
            Rational acc;
            for (std::size_t i = 0; i < kappa.rows(); ++i) {
                if (sub.basis()(i, a).is_zero()) continue;
                for (std::size_t j = 0; j < kappa.cols(); ++j) {
                    if (kappa(i, j).is_zero() || s.basis()(j, b).is_zero()) continue;
                    acc += sub.basis()(i, a) * kappa(i, j) * s.basis()(j, b);
                }
            }
            sys(a, b) = std::move(acc);
        }
    return map_to_ambient(s, exact_kernel(sys));
}

}  // namespace

IdealDecomposition simple_decomposition(const LieAlgebra& g) {
    const ExactMatrix<Rational> kappa = killing_form(g);
    if (exact_rank(kappa) != g.dim())
        throw ValidationError("NotSemisimple: Killing form is degenerate");

    IdealDecomposition out;
    std::deque<Subspace> work;
    {
        std::vector<std::vector<Rational>> full;
        for (std::size_t i = 0; i < g.dim(); ++i) {
            std::vector<Rational> e(g.dim());
            e[i] = Rational::one();
            full.push_back(std::move(e));
        }
        work.emplace_back(g.dim(), full);
    }

    while (!work.empty()) {
        Subspace s = std::move(work.front());
        work.pop_front();
        if (s.dim() == 0) continue;

        // Cheap path: an ideal generated by a single basis vector of s that
        // does not already exhaust s gives a proper split.
        bool split = false;
        for (std::size_t c = 0; c < s.dim() && !split; ++c) {
            Subspace closure = ideal_closure(g, {s.basis_vector(c)});
            if (closure.dim() < s.dim()) {
                work.push_back(killing_complement_within(kappa, s, closure));
                work.push_back(std::move(closure));
                split = true;
            }
        }
        if (split) continue;

        // Basis seeds exhaust s (e.g. so(4) in the antisymmetric-matrix
        // basis).  Split along eigenspaces of non-scalar commutant elements:
        // any polynomial kernel of a module endomorphism is again an ideal.
        std::vector<ExactMatrix<Rational>> restricted;
        for (std::size_t i = 0; i < g.dim(); ++i) restricted.push_back(restricted_ad(g, s, i));
        const auto comm = commutant_basis(restricted);

        for (const auto& x : comm) {
            if (is_scalar_matrix(x)) continue;
            for (const Rational& lambda : rational_roots(minimal_polynomial(x))) {
                ExactMatrix<Rational> shifted = x;
                for (std::size_t d = 0; d < shifted.rows(); ++d)
                    shifted(d, d) -= lambda;
                auto ker = exact_kernel(shifted);
                if (!ker.empty() && ker.size() < s.dim()) {
                    Subspace eigen = map_to_ambient(s, ker);
                    work.push_back(killing_complement_within(kappa, s, eigen));
                    work.push_back(std::move(eigen));
                    split = true;
                    break;
                }
            }
            if (split) break;
        }
        if (split) continue;

        // Minimal over Q.  Commutant dimension 1 certifies absolute
        // simplicity; larger commutants are (conjugate sums of) simple
        // factors glued by an irrational field of degree endo_degree.
        IdealInfo info{.ideal = s,
                       .dimension = s.dim(),
                       .compact_type = false,
                       .endo_degree = comm.size(),
                       .is_so3 = false};
        ExactMatrix<Rational> restr(s.dim(), s.dim());
        for (std::size_t a = 0; a < s.dim(); ++a)
            for (std::size_t b = 0; b < s.dim(); ++b) {
                Rational acc;
                for (std::size_t i = 0; i < g.dim(); ++i)
                    for (std::size_t j = 0; j < g.dim(); ++j) {
                        if (s.basis()(i, a).is_zero() || kappa(i, j).is_zero() ||
                            s.basis()(j, b).is_zero())
                            continue;
                        acc += s.basis()(i, a) * kappa(i, j) * s.basis()(j, b);
                    }
                restr(a, b) = std::move(acc);
            }
        info.compact_type = is_negative_definite(restr);
        info.is_so3 = info.compact_type && info.dimension == 3 * info.endo_degree;
        if (info.endo_degree != 1) out.split_complete = false;
        out.ideals.push_back(std::move(info));
    }

    std::stable_sort(out.ideals.begin(), out.ideals.end(),
                     [](const IdealInfo& a, const IdealInfo& b) { return a.dimension < b.dimension; });
    return out;
}

bool detect_so3_factor(const LieAlgebra& g) {
    if (!is_compact_type(g))
        throw ValidationError("detect_so3_factor requires a compact-type (hence semisimple) algebra");
    const auto dec = simple_decomposition(g);
    return std::any_of(dec.ideals.begin(), dec.ideals.end(),
                       [](const IdealInfo& i) { return i.is_so3; });
}

Quotient quotient_by_ideal(const LieAlgebra& g, const Subspace& h) {
    const std::size_t n = g.dim();
    if (h.ambient_dim() != n) throw ValidationError("ideal lives in a different ambient space");

    // Ideal check: [e_i, h] inside h, exactly.
    std::vector<Rational> ei(n);
    for (std::size_t i = 0; i < n; ++i) {
        ei.assign(n, Rational());
        ei[i] = Rational::one();
        for (std::size_t c = 0; c < h.dim(); ++c)
            if (!h.contains(g.bracket(ei, h.basis_vector(c))))
                throw ValidationError("NotAnIdeal: [e_" + std::to_string(i + 1) +
                                      ", h] escapes the subspace");
    }

    // Greedy complement out of coordinate vectors.
    std::vector<std::size_t> reps;
    {
        std::vector<std::vector<Rational>> span;
        for (std::size_t c = 0; c < h.dim(); ++c) span.push_back(h.basis_vector(c));
        std::size_t cur = h.dim();
        for (std::size_t k = 0; k < n && cur < n; ++k) {
            std::vector<Rational> e(n);
            e[k] = Rational::one();
            span.push_back(e);
            Subspace trial(n, span);
            if (trial.dim() > cur) {
                reps.push_back(k);
                cur = trial.dim();
            } else {
                span.pop_back();
            }
        }
    }
    const std::size_t q = reps.size();

    // Projection: solve [H | E_reps] gamma = x; the complement block of the
    // inverse is the projection matrix.
    ExactMatrix<Rational> m(n, n);
    for (std::size_t c = 0; c < h.dim(); ++c)
        for (std::size_t i = 0; i < n; ++i) m(i, c) = h.basis()(i, c);
    for (std::size_t t = 0; t < q; ++t) m(reps[t], h.dim() + t) = Rational::one();
    const ExactMatrix<Rational> minv = exactnum::exact_inverse(m);
    ExactMatrix<Rational> proj(q, n);
    for (std::size_t t = 0; t < q; ++t)
        for (std::size_t j = 0; j < n; ++j) proj(t, j) = minv(h.dim() + t, j);

    // Quotient structure constants from projected brackets of coset reps.
    std::vector<BracketEntry> entries;
    for (std::size_t a = 0; a < q; ++a)
        for (std::size_t b = a + 1; b < q; ++b) {
            const auto br = proj.apply(g.bracket_basis(reps[a], reps[b]));
            for (std::size_t k = 0; k < q; ++k)
                if (!br[k].is_zero()) entries.push_back({a, b, k, br[k]});
        }
    LieAlgebra quotient(q, entries);

    // Homomorphism property on every ambient basis pair.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto lhs = proj.apply(g.bracket_basis(i, j));
            std::vector<Rational> pi(q), pj(q);
            for (std::size_t t = 0; t < q; ++t) {
                pi[t] = proj(t, i);
                pj[t] = proj(t, j);
            }
            const auto rhs = quotient.bracket(pi, pj);
            if (lhs != rhs)
                throw ValidationError("quotient projection is not a Lie homomorphism at pair (" +
                                      std::to_string(i) + ", " + std::to_string(j) + ")");
        }

    return Quotient{std::move(quotient), std::move(proj), std::move(reps)};
}

}  // namespace folrig::liealg
