#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <string>
#include <vector>

#include "folrig/exactnum/matrix.hpp"
#include "folrig/exactnum/rational.hpp"

namespace folrig::groupcoh {

using exactnum::ExactMatrix;
using exactnum::Rational;

// Finitely presented group.  Relator words use signed 1-based symbols:
// +k is generator k-1, -k is its formal inverse, so <a,b | aba^-1b^-1>
// reads {{1, 2, -1, -2}}.
struct Presentation {
    std::vector<std::string> generators;
    std::vector<std::vector<int>> relators;
};

// Generator names must be distinct and nonempty; every relator letter must
// name a declared generator.
void validate_presentation(const Presentation& pres);

// Finite-dimensional representation of the presented group: one invertible
// matrix per generator, either all rational or all float (exactly one of
// the image lists is populated).  Relators must evaluate to the identity --
// exactly on the rational path, within 1e-9 max-entry residual on the float
// path.
struct MatrixRep {
    std::size_t dimension = 0;
    std::vector<ExactMatrix<Rational>> exact_images;
    std::vector<Eigen::MatrixXd> float_images;

    bool is_exact() const { return float_images.empty(); }
};

ExactMatrix<Rational> evaluate_word_exact(const MatrixRep& rep, const std::vector<int>& word);
Eigen::MatrixXd evaluate_word_float(const MatrixRep& rep, const std::vector<int>& word);

// Shape, invertibility, and relator-identity checks; ValidationError names
// the first offending relator.
void validate_representation(const Presentation& pres, const MatrixRep& rep);

}  // namespace folrig::groupcoh
