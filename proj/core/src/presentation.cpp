#include "folrig/groupcoh/presentation.hpp"

#include <Eigen/LU>

#include <cmath>
#include <cstdlib>
#include <set>
#include <string>

#include "folrig/errors.hpp"

namespace folrig::groupcoh {

void validate_presentation(const Presentation& pres) {
    std::set<std::string> seen;
    for (const std::string& name : pres.generators) {
        if (name.empty()) throw ValidationError("presentation: empty generator name");
        if (!seen.insert(name).second)
            throw ValidationError("presentation: duplicate generator name '" + name + "'");
    }
    const int count = static_cast<int>(pres.generators.size());
    for (std::size_t ri = 0; ri < pres.relators.size(); ++ri)
        for (int s : pres.relators[ri])
            if (s == 0 || std::abs(s) > count)
                throw ValidationError("presentation: relator " + std::to_string(ri) +
                                      " uses symbol " + std::to_string(s) +
                                      " outside the declared generators");
}

ExactMatrix<Rational> evaluate_word_exact(const MatrixRep& rep, const std::vector<int>& word) {
    ExactMatrix<Rational> acc = ExactMatrix<Rational>::identity(rep.dimension);
    std::vector<ExactMatrix<Rational>> inverses(rep.exact_images.size());
    std::vector<bool> have(rep.exact_images.size(), false);
    for (int s : word) {
        const auto g = static_cast<std::size_t>(std::abs(s)) - 1;
        if (g >= rep.exact_images.size())
            throw ValidationError("word evaluation: symbol outside the representation");
        if (s > 0) {
            acc = acc * rep.exact_images[g];
        } else {
            if (!have[g]) {
                inverses[g] = exactnum::exact_inverse(rep.exact_images[g]);
                have[g] = true;
            }
            acc = acc * inverses[g];
        }
    }
    return acc;
}

Eigen::MatrixXd evaluate_word_float(const MatrixRep& rep, const std::vector<int>& word) {
    const auto dim = static_cast<Eigen::Index>(rep.dimension);
    Eigen::MatrixXd acc = Eigen::MatrixXd::Identity(dim, dim);
    std::vector<Eigen::MatrixXd> inverses(rep.float_images.size());
    std::vector<bool> have(rep.float_images.size(), false);
    for (int s : word) {
        const auto g = static_cast<std::size_t>(std::abs(s)) - 1;
        if (g >= rep.float_images.size())
            throw ValidationError("word evaluation: symbol outside the representation");
        if (s > 0) {
            acc = acc * rep.float_images[g];
        } else {
            if (!have[g]) {
                inverses[g] = rep.float_images[g].inverse();
                have[g] = true;
            }
            acc = acc * inverses[g];
        }
    }
    return acc;
}

void validate_representation(const Presentation& pres, const MatrixRep& rep) {
    validate_presentation(pres);
    if (rep.dimension == 0)
        throw ValidationError("representation: dimension must be at least 1");
    if (rep.exact_images.empty() == rep.float_images.empty())
        throw ValidationError(
            "representation: exactly one of the exact/float image lists must be populated");

    const std::size_t gens = pres.generators.size();
    const auto dim = static_cast<Eigen::Index>(rep.dimension);
    if (rep.is_exact()) {
        if (rep.exact_images.size() != gens)
            throw ValidationError("representation: expected one matrix per generator");
        for (std::size_t g = 0; g < gens; ++g) {
            const auto& m = rep.exact_images[g];
            if (m.rows() != rep.dimension || m.cols() != rep.dimension)
                throw ValidationError("representation: image of '" + pres.generators[g] +
                                      "' has the wrong shape");
            if (exactnum::exact_det(m).is_zero())
                throw ValidationError("representation: image of '" + pres.generators[g] +
                                      "' is singular");
        }
        for (std::size_t ri = 0; ri < pres.relators.size(); ++ri)
            if (evaluate_word_exact(rep, pres.relators[ri]) !=
                ExactMatrix<Rational>::identity(rep.dimension))
                throw ValidationError("representation: relator " + std::to_string(ri) +
                                      " does not evaluate to the identity");
    } else {
        if (rep.float_images.size() != gens)
            throw ValidationError("representation: expected one matrix per generator");
        for (std::size_t g = 0; g < gens; ++g) {
            const auto& m = rep.float_images[g];
            if (m.rows() != dim || m.cols() != dim)
                throw ValidationError("representation: image of '" + pres.generators[g] +
                                      "' has the wrong shape");
            Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
            if (!lu.isInvertible())
                throw ValidationError("representation: image of '" + pres.generators[g] +
                                      "' is singular");
        }
        for (std::size_t ri = 0; ri < pres.relators.size(); ++ri) {
            const Eigen::MatrixXd value = evaluate_word_float(rep, pres.relators[ri]);
            const double residual =
                (value - Eigen::MatrixXd::Identity(dim, dim)).cwiseAbs().maxCoeff();
            if (residual > 1e-9)
                throw ValidationError("representation: relator " + std::to_string(ri) +
                                      " misses the identity by " + std::to_string(residual));
        }
    }
}

}  // namespace folrig::groupcoh
