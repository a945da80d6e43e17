#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <vector>

#include "folrig/exactnum/matrix.hpp"
#include "folrig/exactnum/rational.hpp"

namespace folrig::dynamics {

using exactnum::ExactMatrix;
using exactnum::Rational;

// Exponent multi-indices of the degree-d monomials in n variables, in a fixed
// deterministic order (first exponent decreasing, then recursively).  This
// order is the coordinate convention for every polynomial vector below.
std::vector<std::vector<std::size_t>> degree_monomials(std::size_t n, std::size_t d);

// Matrix of the Laplacian, mapping degree-d coefficient vectors to
// degree-(d-2) ones: x^a contributes a_i (a_i - 1) x^(a - 2 e_i) per
// variable.  For d < 2 the codomain is empty and the matrix has no rows.
ExactMatrix<Rational> laplacian_matrix(std::size_t n, std::size_t d);

// Normalized sphere average of a monomial: zero unless every exponent is
// even, otherwise prod_i (a_i - 1)!! / (n (n+2) ... (n + |a| - 2)).
Rational sphere_integral(std::size_t n, const std::vector<std::size_t>& exponents);

/// Degree-d harmonic polynomials on R^n: the exact kernel of the Laplacian
// matrix, together with the L2(S^{n-1}) Gram data needed to make the
// rotation action orthogonal in float coordinates.
struct HarmonicSpace {
    std::size_t n = 0;
    std::size_t degree = 0;
    std::vector<std::vector<std::size_t>> monomials;  // degree-d exponent list
    std::vector<std::vector<Rational>> basis;         // harmonic basis, monomial coords
    ExactMatrix<Rational> gram;                       // exact Gram of the basis
    // u = orthonormalizer * (basis coords) has unit L2(S^{n-1}) Gram; the
    // factor is the float Cholesky transpose of the exact Gram.
    Eigen::MatrixXd orthonormalizer;
    Eigen::MatrixXd orthonormalizer_inv;

    std::size_t dimension() const { return basis.size(); }
};

// Construction enforces the dimension identity
// C(n+d-1, d) - C(n+d-3, d-2) and refuses monomial bases larger than
// `budget` (BudgetExceeded) rather than grinding on huge degrees.
HarmonicSpace harmonic_space(std::size_t n, std::size_t d, std::size_t budget = 10000);

}  // namespace folrig::dynamics
