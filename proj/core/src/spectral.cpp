#include "folrig/dynamics/spectral.hpp"

#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>

#include "folrig/errors.hpp"
#include "folrig/exactnum/matrix.hpp"

namespace folrig::dynamics {
namespace {

// ---- polynomial substitution -------------------------------------------
//
// The action on polynomials is (pi(g) p)(x) = p(g^{-1} x) = p(g^T x), so a
// variable substitutes as x_i -> sum_j g(j, i) x_j.  Polynomials are maps
// from exponent vectors to coefficients; the engine is shared between the
// exact and the float path through the scalar template parameter.

inline bool scalar_zero(const Rational& x) { return x.is_zero(); }
inline bool scalar_zero(double x) { return x == 0.0; }

template <typename S>
using Poly = std::map<std::vector<std::size_t>, S>;

template <typename S>
Poly<S> multiply_linear(const Poly<S>& p, const std::vector<S>& row) {
    Poly<S> out;
    for (const auto& term : p) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (scalar_zero(row[j])) continue;
            std::vector<std::size_t> expo = term.first;
            ++expo[j];
            S add = term.second * row[j];
            auto it = out.find(expo);
            if (it == out.end())
                out.emplace(std::move(expo), std::move(add));
            else
                it->second += add;
        }
    }
    return out;
}

// Image of the monomial x^expo under x_i -> linear form with coefficients
// srows[i].  Expanding one linear factor at a time keeps every intermediate
// inside the span of monomials of the degrees we already enumerate.
template <typename S>
Poly<S> substitute_monomial(const std::vector<std::size_t>& expo,
                            const std::vector<std::vector<S>>& srows, const S& one_val) {
    Poly<S> acc;
    acc.emplace(std::vector<std::size_t>(srows.size(), 0), one_val);
    for (std::size_t i = 0; i < expo.size(); ++i)
        for (std::size_t k = 0; k < expo[i]; ++k) acc = multiply_linear(acc, srows[i]);
    return acc;
}

std::map<std::vector<std::size_t>, std::size_t> monomial_index(const HarmonicSpace& space) {
    std::map<std::vector<std::size_t>, std::size_t> index;
    for (std::size_t a = 0; a < space.monomials.size(); ++a) index.emplace(space.monomials[a], a);
    return index;
}

Eigen::MatrixXd basis_as_double(const HarmonicSpace& space) {
    const std::size_t rows = space.monomials.size(), cols = space.dimension();
    Eigen::MatrixXd b(rows, cols);
    for (std::size_t j = 0; j < cols; ++j)
        for (std::size_t a = 0; a < rows; ++a)
            b(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(j)) =
                space.basis[j][a].to_double();
    return b;
}

double orthogonality_defect(const Eigen::MatrixXd& g) {
    const Eigen::MatrixXd gram = g.transpose() * g;
    return (gram - Eigen::MatrixXd::Identity(g.rows(), g.cols())).cwiseAbs().maxCoeff();
}

}  // namespace

ExactMatrix<Rational> harmonic_action_exact(const HarmonicSpace& space,
                                            const ExactMatrix<Rational>& g) {
    const std::size_t n = space.n;
    if (g.rows() != n || g.cols() != n)
        throw ValidationError("harmonic action: rotation matrix size does not match the space");
    if (g.transpose() * g != ExactMatrix<Rational>::identity(n))
        throw ValidationError("harmonic action: exact matrix is not orthogonal");

    const std::size_t num_mono = space.monomials.size();
    const std::size_t dim = space.dimension();
    const auto index = monomial_index(space);

    std::vector<std::vector<Rational>> srows(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) srows[i][j] = g(j, i);

    // Images of all basis harmonics, still in monomial coordinates.
    ExactMatrix<Rational> images(num_mono, dim);
    for (std::size_t a = 0; a < num_mono; ++a) {
        bool used = false;
        for (std::size_t j = 0; j < dim && !used; ++j) used = !space.basis[j][a].is_zero();
        if (!used) continue;
        const Poly<Rational> sub =
            substitute_monomial(space.monomials[a], srows, Rational::one());
        for (const auto& term : sub) {
            const auto it = index.find(term.first);
            if (it == index.end())
                throw std::logic_error("harmonic action: substitution left the degree span");
            for (std::size_t j = 0; j < dim; ++j) {
                const Rational& c = space.basis[j][a];
                if (!c.is_zero()) images(it->second, j) += c * term.second;
            }
        }
    }

    // Solve  basis * X = images  for all columns in one elimination pass.
    // The basis columns are independent, so the pivots of the augmented
    // matrix occupy exactly the first `dim` columns; an extra pivot would
    // mean some image escaped the harmonic span, which orthogonality rules
    // out.
    ExactMatrix<Rational> aug(num_mono, 2 * dim);
    for (std::size_t a = 0; a < num_mono; ++a) {
        for (std::size_t j = 0; j < dim; ++j) {
            aug(a, j) = space.basis[j][a];
            aug(a, dim + j) = images(a, j);
        }
    }
    const auto ech = exactnum::exact_rref(aug);
    if (ech.pivot_cols.size() != dim)
        throw std::logic_error("harmonic action: rotation image escaped the harmonic span");

    ExactMatrix<Rational> out(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) out(i, j) = ech.mat(i, dim + j);
    return out;
}

Eigen::MatrixXd harmonic_action(const HarmonicSpace& space, const Eigen::MatrixXd& g) {
    const auto n = static_cast<Eigen::Index>(space.n);
    if (g.rows() != n || g.cols() != n)
        throw ValidationError("harmonic action: rotation matrix size does not match the space");
    if (orthogonality_defect(g) > 1e-10)
        throw ValidationError("harmonic action: matrix is not orthogonal within 1e-10");

    const std::size_t num_mono = space.monomials.size();
    const auto index = monomial_index(space);

    std::vector<std::vector<double>> srows(space.n, std::vector<double>(space.n));
    for (std::size_t i = 0; i < space.n; ++i)
        for (std::size_t j = 0; j < space.n; ++j)
            srows[i][j] = g(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i));

    // Substitution matrix on the full monomial space, then restricted to the
    // harmonic columns by least squares (the images stay in the span up to
    // the orthogonality defect of g, which the residual check enforces).
    Eigen::MatrixXd mono_action = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(num_mono),
                                                        static_cast<Eigen::Index>(num_mono));
    for (std::size_t a = 0; a < num_mono; ++a) {
        const Poly<double> sub = substitute_monomial(space.monomials[a], srows, 1.0);
        for (const auto& term : sub) {
            const auto it = index.find(term.first);
            if (it == index.end())
                throw std::logic_error("harmonic action: substitution left the degree span");
            mono_action(static_cast<Eigen::Index>(it->second), static_cast<Eigen::Index>(a)) +=
                term.second;
        }
    }

    const Eigen::MatrixXd basis = basis_as_double(space);
    const Eigen::MatrixXd images = mono_action * basis;
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(basis);
    Eigen::MatrixXd action = qr.solve(images);

    const double residual = (basis * action - images).cwiseAbs().maxCoeff();
    const double scale = std::max(1.0, images.cwiseAbs().maxCoeff());
    if (residual > 1e-6 * scale)
        throw ValidationError("harmonic action: rotated harmonics leave the harmonic span "
                              "(least-squares residual " +
                              std::to_string(residual) + ")");
    return action;
}

Eigen::MatrixXd representation_matrix(const HarmonicSpace& space, const Eigen::MatrixXd& g) {
    return space.orthonormalizer * harmonic_action(space, g) * space.orthonormalizer_inv;
}

GapEstimate averaging_operator_norm(const std::vector<Eigen::MatrixXd>& gens,
                                    const HarmonicSpace& space, double tol,
                                    std::size_t max_iters,
                                    const std::vector<ExactMatrix<Rational>>* exact_generators) {
    if (gens.empty()) throw ValidationError("averaging operator: empty generator list");
    if (tol <= 0.0) throw ValidationError("averaging operator: tolerance must be positive");
    const auto n = static_cast<Eigen::Index>(space.n);
    for (const auto& g : gens) {
        if (g.rows() != n || g.cols() != n)
            throw ValidationError("averaging operator: generator size does not match the space");
        if (orthogonality_defect(g) > 1e-10)
            throw ValidationError("averaging operator: generator is not orthogonal within 1e-10");
    }
    // The averaging operator is self-adjoint only for a symmetrized set, and
    // the gap reading depends on that, so reject sets missing a transpose.
    for (const auto& g : gens) {
        const Eigen::MatrixXd gt = g.transpose();
        bool found = false;
        for (const auto& h : gens)
            if ((gt - h).cwiseAbs().maxCoeff() <= 1e-8) {
                found = true;
                break;
            }
        if (!found)
            throw ValidationError(
                "averaging operator: generator set is not symmetrized (missing a transpose)");
    }
    if (exact_generators != nullptr) {
        if (exact_generators->size() != gens.size())
            throw ValidationError("averaging operator: exact generator list length mismatch");
        for (std::size_t k = 0; k < gens.size(); ++k)
            for (std::size_t i = 0; i < space.n; ++i)
                for (std::size_t j = 0; j < space.n; ++j) {
                    const double d = (*exact_generators)[k](i, j).to_double() -
                                     gens[k](static_cast<Eigen::Index>(i),
                                             static_cast<Eigen::Index>(j));
                    if (std::abs(d) > 1e-8)
                        throw ValidationError(
                            "averaging operator: exact and float generators disagree");
                }
    }

    const auto m = static_cast<Eigen::Index>(space.dimension());
    std::vector<Eigen::MatrixXd> reps;
    reps.reserve(gens.size());
    Eigen::MatrixXd average = Eigen::MatrixXd::Zero(m, m);
    for (const auto& g : gens) {
        reps.push_back(representation_matrix(space, g));
        average += reps.back();
    }
    average /= static_cast<double>(gens.size());

    GapEstimate out;
    out.degree = space.degree;
    out.tolerance = tol;
    out.invariant_space_exact = exact_generators != nullptr;

    // Invariant subspace of the generator set, as orthonormal columns in the
    // orthonormalized coordinates.
    Eigen::MatrixXd invariant;  // m x r
    Eigen::Index r = 0;
    if (exact_generators != nullptr) {
        ExactMatrix<Rational> stacked(gens.size() * space.dimension(), space.dimension());
        for (std::size_t k = 0; k < exact_generators->size(); ++k) {
            const ExactMatrix<Rational> pi = harmonic_action_exact(space, (*exact_generators)[k]);
            for (std::size_t i = 0; i < space.dimension(); ++i)
                for (std::size_t j = 0; j < space.dimension(); ++j)
                    stacked(k * space.dimension() + i, j) =
                        (i == j) ? pi(i, j) - Rational::one() : pi(i, j);
        }
        const auto kernel = exactnum::exact_kernel(stacked);
        r = static_cast<Eigen::Index>(kernel.size());
        if (r > 0) {
            // Kernel vectors live in raw harmonic coordinates; map them to
            // the orthonormal frame before orthonormalizing.
            Eigen::MatrixXd raw(m, r);
            for (Eigen::Index j = 0; j < r; ++j)
                for (Eigen::Index i = 0; i < m; ++i)
                    raw(i, j) = kernel[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]
                                    .to_double();
            const Eigen::MatrixXd mapped = space.orthonormalizer * raw;
            Eigen::HouseholderQR<Eigen::MatrixXd> qr(mapped);
            invariant = qr.householderQ() * Eigen::MatrixXd::Identity(m, r);
        }
    } else {
        Eigen::MatrixXd stacked(static_cast<Eigen::Index>(gens.size()) * m, m);
        for (std::size_t k = 0; k < reps.size(); ++k)
            stacked.middleRows(static_cast<Eigen::Index>(k) * m, m) =
                reps[k] - Eigen::MatrixXd::Identity(m, m);
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(stacked, Eigen::ComputeThinV);
        const auto& sv = svd.singularValues();
        for (Eigen::Index i = 0; i < sv.size(); ++i)
            if (sv(i) < 1e-8) ++r;
        if (r > 0) invariant = svd.matrixV().rightCols(r);  // singular values sort decreasing
    }
    out.invariant_dimension = static_cast<std::size_t>(r);

    if (r == m) {
        // Nothing outside the invariant vectors: the restricted operator is
        // empty and there is no norm to estimate.
        out.empty_invariant_free = true;
        out.converged = true;
        return out;
    }

    Eigen::MatrixXd complement;
    if (r == 0) {
        complement = Eigen::MatrixXd::Identity(m, m);
    } else {
        Eigen::HouseholderQR<Eigen::MatrixXd> qr(invariant);
        const Eigen::MatrixXd q = qr.householderQ();
        complement = q.rightCols(m - r);
    }

    const Eigen::MatrixXd restricted = complement.transpose() * average * complement;
    const Eigen::MatrixXd normal = restricted.transpose() * restricted;

    // Power iteration on the (PSD) normal matrix, deterministic start so
    // repeated runs report identical iteration counts.
    const Eigen::Index q_dim = m - r;
    std::mt19937_64 rng(0x517cc1b727220a95ULL);
    Eigen::VectorXd x(q_dim);
    for (Eigen::Index i = 0; i < q_dim; ++i)
        x(i) = (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53 - 0.5;
    if (x.norm() == 0.0) x.setOnes();
    x.normalize();

    double rho = 0.0, prev = -1.0;
    bool converged = false;
    std::size_t iters = 0;
    for (std::size_t t = 1; t <= max_iters; ++t) {
        const Eigen::VectorXd y = normal * x;
        rho = std::max(0.0, x.dot(y));
        iters = t;
        if (t >= 2 && std::abs(rho - prev) <= tol * std::max(rho, 1e-300)) {
            converged = true;
            break;
        }
        const double len = y.norm();
        if (len == 0.0) {
            rho = 0.0;
            converged = true;
            break;
        }
        x = y / len;
        prev = rho;
    }
    if (!converged)
        throw NotConverged("averaging operator: power iteration still moving after " +
                           std::to_string(max_iters) + " iterations");

    out.iterations = iters;
    out.converged = true;
    out.estimate = std::sqrt(rho);
    out.gap = 1.0 - *out.estimate;
    return out;
}

double weyl_deviation(const WordBall& ball, const HarmonicSpace& space) {
    if (ball.elements.empty()) throw ValidationError("weyl deviation: empty word ball");
    const auto n = static_cast<Eigen::Index>(space.n);
    if (ball.elements[0].matrix.rows() != n)
        throw ValidationError("weyl deviation: ball dimension does not match the space");

    const auto m = static_cast<Eigen::Index>(space.dimension());
    std::vector<Eigen::MatrixXd> letter_rep;
    letter_rep.reserve(ball.generators.size());
    for (const auto& g : ball.generators) letter_rep.push_back(representation_matrix(space, g));

    // Walk the ball layer by layer; each element's representation is its
    // parent's times one letter, so only two layers of matrices are alive at
    // any point.
    const std::vector<std::size_t> offsets = ball.layer_offsets();
    Eigen::MatrixXd sum = Eigen::MatrixXd::Identity(m, m);
    std::vector<Eigen::MatrixXd> prev_layer{Eigen::MatrixXd::Identity(m, m)};
    for (std::size_t len = 1; len + 1 < offsets.size(); ++len) {
        const std::size_t begin = offsets[len], end = offsets[len + 1];
        if (begin == end) break;
        const std::size_t parent_begin = offsets[len - 1];
        std::vector<Eigen::MatrixXd> layer;
        layer.reserve(end - begin);
        for (std::size_t idx = begin; idx < end; ++idx) {
            const WordBallElement& el = ball.elements[idx];
            const std::size_t slot = static_cast<std::size_t>(el.parent) - parent_begin;
            layer.push_back(prev_layer[slot] * letter_rep[static_cast<std::size_t>(el.letter)]);
            sum += layer.back();
        }
        prev_layer = std::move(layer);
    }

    sum /= static_cast<double>(ball.elements.size());
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(sum);
    return svd.singularValues()(0);
}

}  // namespace folrig::dynamics
