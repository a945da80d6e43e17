#include "folrig/liealg/lie_algebra.hpp"

#include <array>
#include <set>

#include "folrig/errors.hpp"

namespace folrig::liealg {

namespace {
std::string entry_name(std::size_t i, std::size_t j, std::size_t k) {
    return "[" + std::to_string(i) + ", " + std::to_string(j) + ", " + std::to_string(k) + "]";
}
}  // namespace

LieAlgebra::LieAlgebra(std::size_t dim, const std::vector<BracketEntry>& entries,
                       std::vector<std::string> basis_names) {
    dim_ = dim;
    if (basis_names.empty()) {
        for (std::size_t i = 1; i <= dim; ++i) basis_names.push_back("e" + std::to_string(i));
    } else if (basis_names.size() != dim) {
        throw ValidationError("basis_names length " + std::to_string(basis_names.size()) +
                              " does not match dim " + std::to_string(dim));
    }
    basis_names_ = std::move(basis_names);
    table_.assign(dim * (dim ? dim - 1 : 0) / 2, std::vector<Rational>(dim));

    std::set<std::array<std::size_t, 3>> seen;
    for (const BracketEntry& e : entries) {
        const std::string where = "bracket entry " + entry_name(e.i, e.j, e.k);
        if (e.i >= dim || e.j >= dim || e.k >= dim)
            throw ValidationError(where + ": index out of range for dim " + std::to_string(dim));
        if (e.i == e.j)
            throw ValidationError(where + ": [x, x] = 0 is violated by a diagonal entry");
        if (e.i > e.j)
            throw ValidationError(where + ": constants must be stored with i < j "
                                          "(antisymmetry supplies the rest)");
        if (!seen.insert({e.i, e.j, e.k}).second)
            throw ValidationError(where + ": duplicate coefficient");
        table_[pair_index(e.i, e.j)][e.k] = e.coeff;
    }
    validate_jacobi();
}

LieAlgebra LieAlgebra::from_table(const std::vector<std::vector<std::vector<Rational>>>& table,
                                  std::vector<std::string> basis_names) {
    const std::size_t dim = table.size();
    std::vector<BracketEntry> entries;
    for (std::size_t i = 0; i < dim; ++i) {
        if (table[i].size() != dim)
            throw ValidationError("structure-constant table is not dim x dim x dim");
        for (std::size_t j = 0; j < dim; ++j) {
            if (table[i][j].size() != dim)
                throw ValidationError("structure-constant table is not dim x dim x dim");
            for (std::size_t k = 0; k < dim; ++k) {
                const Rational& c = table[i][j][k];
                if (i == j && !c.is_zero())
                    throw ValidationError("antisymmetry violated: nonzero c at " +
                                          entry_name(i, i, k));
                if (i < j) {
                    if (!(c == -table[j][i][k]))
                        throw ValidationError("antisymmetry violated between " +
                                              entry_name(i, j, k) + " and " + entry_name(j, i, k));
                    if (!c.is_zero()) entries.push_back({i, j, k, c});
                }
            }
        }
    }
    return LieAlgebra(dim, entries, std::move(basis_names));
}

Rational LieAlgebra::bracket_coeff(std::size_t i, std::size_t j, std::size_t k) const {
    if (i == j) return Rational();
    if (i < j) return table_[pair_index(i, j)][k];
    return -table_[pair_index(j, i)][k];
}

std::vector<Rational> LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
    if (i == j) return std::vector<Rational>(dim_);
    if (i < j) return table_[pair_index(i, j)];
    std::vector<Rational> v = table_[pair_index(j, i)];
    for (Rational& c : v) c = -c;
    return v;
}

std::vector<Rational> LieAlgebra::bracket(const std::vector<Rational>& x,
                                          const std::vector<Rational>& y) const {
    if (x.size() != dim_ || y.size() != dim_)
        throw ValidationError("bracket arguments must have length dim");
    std::vector<Rational> out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (y[j].is_zero() || i == j) continue;
            const Rational f = x[i] * y[j];
            const std::vector<Rational>& c =
                (i < j) ? table_[pair_index(i, j)] : table_[pair_index(j, i)];
            const bool flip = i > j;
            for (std::size_t k = 0; k < dim_; ++k) {
                if (c[k].is_zero()) continue;
                out[k] += flip ? -(f * c[k]) : f * c[k];
            }
        }
    }
    return out;
}

ExactMatrix<Rational> LieAlgebra::ad_matrix(std::size_t i) const {
    ExactMatrix<Rational> m(dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
        if (i == j) continue;
        for (std::size_t k = 0; k < dim_; ++k) m(k, j) = bracket_coeff(i, j, k);
    }
    return m;
}

ExactMatrix<Rational> LieAlgebra::ad(const std::vector<Rational>& x) const {
    if (x.size() != dim_) throw ValidationError("ad argument must have length dim");
    ExactMatrix<Rational> m(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (i == j) continue;
            for (std::size_t k = 0; k < dim_; ++k) {
                const Rational c = bracket_coeff(i, j, k);
                if (!c.is_zero()) m(k, j) += x[i] * c;
            }
        }
    }
    return m;
}

std::vector<BracketEntry> LieAlgebra::sparse_entries() const {
    std::vector<BracketEntry> out;
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i + 1; j < dim_; ++j) {
            const std::vector<Rational>& c = table_[pair_index(i, j)];
            for (std::size_t k = 0; k < dim_; ++k)
                if (!c[k].is_zero()) out.push_back({i, j, k, c[k]});
        }
    return out;
}

void LieAlgebra::validate_jacobi() const {
    // [[e_i,e_j],e_l] + [[e_j,e_l],e_i] + [[e_l,e_i],e_j] = 0, coefficient of
    // each e_k, for all i < j < l.  All sums exact.
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i + 1; j < dim_; ++j)
            for (std::size_t l = j + 1; l < dim_; ++l)
                for (std::size_t k = 0; k < dim_; ++k) {
                    Rational sum;
                    for (std::size_t m = 0; m < dim_; ++m) {
                        const Rational cij = bracket_coeff(i, j, m);
                        if (!cij.is_zero()) sum += cij * bracket_coeff(m, l, k);
                        const Rational cjl = bracket_coeff(j, l, m);
                        if (!cjl.is_zero()) sum += cjl * bracket_coeff(m, i, k);
                        const Rational cli = bracket_coeff(l, i, m);
                        if (!cli.is_zero()) sum += cli * bracket_coeff(m, j, k);
                    }
                    if (!sum.is_zero())
                        throw ValidationError(
                            "Jacobi identity fails on basis triple (" + std::to_string(i) + ", " +
                            std::to_string(j) + ", " + std::to_string(l) + ") at component " +
                            std::to_string(k));
                }
}

}  // namespace folrig::liealg
