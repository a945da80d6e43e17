#include "folrig/groupcoh/fox.hpp"

#include <cmath>
#include <cstdlib>
#include <exception>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>

#include "folrig/dynamics/harmonic.hpp"
#include "folrig/dynamics/spectral.hpp"
#include "folrig/errors.hpp"

namespace folrig::groupcoh {
namespace {

constexpr double kRankTol = 1e-8;

// Rank and kernel basis under the shared float threshold.  A matrix with no
// rows (or an empty representation) constrains nothing, so the kernel is
// everything.
std::pair<std::size_t, Eigen::MatrixXd> svd_kernel(const Eigen::MatrixXd& m) {
    const Eigen::Index cols = m.cols();
    if (m.rows() == 0 || cols == 0)
        return {0, Eigen::MatrixXd::Identity(cols, cols)};
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    Eigen::Index rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) >= kRankTol) ++rank;
    return {static_cast<std::size_t>(rank), svd.matrixV().rightCols(cols - rank)};
}

}  // namespace

ExactMatrix<Rational> fox_matrix(const Presentation& pres, const MatrixRep& rep) {
    validate_representation(pres, rep);
    if (!rep.is_exact())
        throw ValidationError("fox matrix: exact path called with a float representation");

    const std::size_t dim = rep.dimension;
    const std::size_t gens = pres.generators.size();
    ExactMatrix<Rational> fox(pres.relators.size() * dim, gens * dim);

    std::vector<ExactMatrix<Rational>> inverses(gens);
    std::vector<bool> have(gens, false);
    for (std::size_t ri = 0; ri < pres.relators.size(); ++ri) {
        ExactMatrix<Rational> prefix = ExactMatrix<Rational>::identity(dim);
        for (int s : pres.relators[ri]) {
            const auto g = static_cast<std::size_t>(std::abs(s)) - 1;
            if (s > 0) {
                for (std::size_t i = 0; i < dim; ++i)
                    for (std::size_t j = 0; j < dim; ++j)
                        fox(ri * dim + i, g * dim + j) += prefix(i, j);
                prefix = prefix * rep.exact_images[g];
            } else {
                if (!have[g]) {
                    inverses[g] = exactnum::exact_inverse(rep.exact_images[g]);
                    have[g] = true;
                }
                prefix = prefix * inverses[g];
                for (std::size_t i = 0; i < dim; ++i)
                    for (std::size_t j = 0; j < dim; ++j)
                        fox(ri * dim + i, g * dim + j) -= prefix(i, j);
            }
        }
    }
    return fox;
}

Eigen::MatrixXd fox_matrix_float(const Presentation& pres, const MatrixRep& rep) {
    validate_representation(pres, rep);
    if (rep.is_exact())
        throw ValidationError("fox matrix: float path called with a rational representation");

    const auto dim = static_cast<Eigen::Index>(rep.dimension);
    const auto gens = static_cast<Eigen::Index>(pres.generators.size());
    Eigen::MatrixXd fox = Eigen::MatrixXd::Zero(
        static_cast<Eigen::Index>(pres.relators.size()) * dim, gens * dim);

    std::vector<Eigen::MatrixXd> inverses(pres.generators.size());
    std::vector<bool> have(pres.generators.size(), false);
    for (std::size_t ri = 0; ri < pres.relators.size(); ++ri) {
        Eigen::MatrixXd prefix = Eigen::MatrixXd::Identity(dim, dim);
        for (int s : pres.relators[ri]) {
            const auto g = static_cast<std::size_t>(std::abs(s)) - 1;
            const auto col = static_cast<Eigen::Index>(g) * dim;
            const auto row = static_cast<Eigen::Index>(ri) * dim;
            if (s > 0) {
                fox.block(row, col, dim, dim) += prefix;
                prefix = prefix * rep.float_images[g];
            } else {
                if (!have[g]) {
                    inverses[g] = rep.float_images[g].inverse();
                    have[g] = true;
                }
                prefix = prefix * inverses[g];
                fox.block(row, col, dim, dim) -= prefix;
            }
        }
    }
    return fox;
}

CocycleSpaceReport h1_dimension(const Presentation& pres, const MatrixRep& rep) {
    const std::size_t dim = rep.dimension;
    const std::size_t gens = pres.generators.size();

    CocycleSpaceReport out;
    out.exact_path = rep.is_exact();
    std::size_t fixed = 0;
    if (rep.is_exact()) {
        const auto kernel = exactnum::exact_kernel(fox_matrix(pres, rep));
        out.z1 = kernel.size();
        for (const auto& v : kernel) {
            std::vector<std::vector<Rational>> values(gens, std::vector<Rational>(dim));
            for (std::size_t g = 0; g < gens; ++g)
                for (std::size_t c = 0; c < dim; ++c) values[g][c] = v[g * dim + c];
            out.exact_cocycles.push_back(std::move(values));
        }

        ExactMatrix<Rational> stacked(gens * dim, dim);
        for (std::size_t g = 0; g < gens; ++g)
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t j = 0; j < dim; ++j)
                    stacked(g * dim + i, j) = (i == j)
                                                  ? rep.exact_images[g](i, j) - Rational::one()
                                                  : rep.exact_images[g](i, j);
        fixed = exactnum::exact_kernel(stacked).size();
    } else {
        const auto dimi = static_cast<Eigen::Index>(dim);
        const auto [fox_rank, kernel] = svd_kernel(fox_matrix_float(pres, rep));
        static_cast<void>(fox_rank);
        out.z1 = static_cast<std::size_t>(kernel.cols());
        for (Eigen::Index k = 0; k < kernel.cols(); ++k) {
            std::vector<Eigen::VectorXd> values;
            values.reserve(gens);
            for (std::size_t g = 0; g < gens; ++g)
                values.push_back(kernel.col(k).segment(static_cast<Eigen::Index>(g) * dimi, dimi));
            out.float_cocycles.push_back(std::move(values));
        }

        Eigen::MatrixXd stacked(static_cast<Eigen::Index>(gens) * dimi, dimi);
        for (std::size_t g = 0; g < gens; ++g)
            stacked.middleRows(static_cast<Eigen::Index>(g) * dimi, dimi) =
                rep.float_images[g] - Eigen::MatrixXd::Identity(dimi, dimi);
        fixed = static_cast<std::size_t>(svd_kernel(stacked).second.cols());
    }

    out.b1 = dim - fixed;
    if (out.z1 < out.b1)
        throw std::logic_error("cocycle space smaller than coboundary space: rank decisions "
                               "are inconsistent");
    out.h1 = out.z1 - out.b1;
    return out;
}

std::vector<TruncatedRigidityReport> truncated_rigidity_check(
    const Presentation& pres, const std::vector<Eigen::MatrixXd>& images,
    const std::vector<std::size_t>& degrees, std::size_t budget, unsigned workers) {
    validate_presentation(pres);
    if (pres.generators.empty())
        throw ValidationError("truncated rigidity: the presentation needs a generator");
    if (images.size() != pres.generators.size())
        throw ValidationError("truncated rigidity: one rotation image per generator required");

    const Eigen::Index n = images[0].rows();
    for (const auto& m : images) {
        if (m.rows() != n || m.cols() != n)
            throw ValidationError("truncated rigidity: generator images differ in size");
        const Eigen::MatrixXd gram = m.transpose() * m;
        if ((gram - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff() > 1e-10)
            throw ValidationError("truncated rigidity: image is not orthogonal within 1e-10");
        if (m.determinant() < 0.0)
            throw ValidationError("truncated rigidity: image has negative determinant");
    }
    // Relator residuals at the rotation-group level; the harmonic
    // representations are re-validated per degree by h1_dimension.
    MatrixRep base;
    base.dimension = static_cast<std::size_t>(n);
    base.float_images = images;
    validate_representation(pres, base);

    std::vector<TruncatedRigidityReport> out(degrees.size());
    std::vector<std::exception_ptr> errors(degrees.size());
    auto run_one = [&](std::size_t k) {
        try {
            const dynamics::HarmonicSpace space =
                dynamics::harmonic_space(static_cast<std::size_t>(n), degrees[k], budget);
            MatrixRep rep;
            rep.dimension = space.dimension();
            rep.float_images.reserve(images.size());
            for (const auto& g : images)
                rep.float_images.push_back(dynamics::representation_matrix(space, g));
            out[k].degree = degrees[k];
            out[k].harmonic_dimension = space.dimension();
            out[k].cocycles = h1_dimension(pres, rep);
        } catch (...) {
            errors[k] = std::current_exception();
        }
    };

    if (workers <= 1 || degrees.size() <= 1) {
        for (std::size_t k = 0; k < degrees.size(); ++k) run_one(k);
    } else {
        std::vector<std::thread> pool;
        const unsigned used = std::min<unsigned>(workers, degrees.size());
        for (unsigned w = 0; w < used; ++w)
            pool.emplace_back([&, w] {
                for (std::size_t k = w; k < degrees.size(); k += used) run_one(k);
            });
        for (auto& t : pool) t.join();
    }
    // First failure by degree position, so the surfaced error does not
    // depend on thread timing.
    for (std::size_t k = 0; k < degrees.size(); ++k)
        if (errors[k]) std::rethrow_exception(errors[k]);
    return out;
}

}  // namespace folrig::groupcoh
