#ifndef FOLRIG_LIEALG_LIE_ALGEBRA_HPP
#define FOLRIG_LIEALG_LIE_ALGEBRA_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "folrig/exactnum/matrix.hpp"
#include "folrig/exactnum/rational.hpp"

namespace folrig::liealg {

using exactnum::ExactMatrix;
using exactnum::Rational;

struct BracketEntry {
    std::size_t i = 0, j = 0, k = 0;
    Rational coeff;
};

// Finite-dimensional Lie algebra over Q, presented by structure constants
// c_{ij}^k for i < j (antisymmetry fills in the rest).  Construction
// validates antisymmetry bookkeeping and the Jacobi identity exactly; an
// instance that exists is a genuine Lie algebra.
class LieAlgebra {
public:
    LieAlgebra(std::size_t dim, const std::vector<BracketEntry>& entries,
               std::vector<std::string> basis_names = {});

    // Full-tensor construction; antisymmetry c_{ij}^k = -c_{ji}^k is checked
    // rather than implied.  table[i][j][k] indexes [e_i, e_j] coefficients.
    static LieAlgebra from_table(const std::vector<std::vector<std::vector<Rational>>>& table,
                                 std::vector<std::string> basis_names = {});

    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& basis_names() const { return basis_names_; }

    // c_{ij}^k with signs handled for any index order.
    Rational bracket_coeff(std::size_t i, std::size_t j, std::size_t k) const;

    // [e_i, e_j] as a coordinate vector.
    std::vector<Rational> bracket_basis(std::size_t i, std::size_t j) const;

    // [x, y] for coordinate vectors.
    std::vector<Rational> bracket(const std::vector<Rational>& x,
                                  const std::vector<Rational>& y) const;

    // ad(e_i) with (ad e_i)_{kj} = c_{ij}^k.
    ExactMatrix<Rational> ad_matrix(std::size_t i) const;

    // ad(x) for a coordinate vector.
    ExactMatrix<Rational> ad(const std::vector<Rational>& x) const;

    // The i < j constants in deterministic (i, j, k) order; zero entries
    // omitted.  This is the canonical serialization payload.
    std::vector<BracketEntry> sparse_entries() const;

private:
    LieAlgebra() = default;
    std::size_t pair_index(std::size_t i, std::size_t j) const {
        return i * dim_ - i * (i + 1) / 2 + (j - i - 1);
    }
    void validate_jacobi() const;

    std::size_t dim_ = 0;
    std::vector<std::string> basis_names_;
    std::vector<std::vector<Rational>> table_;  // per i<j pair, length-dim vector
};

}  // namespace folrig::liealg

#endif
