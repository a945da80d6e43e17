#include "folrig/liealg/cohomology.hpp"

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>

#include "folrig/errors.hpp"
#include "folrig/liealg/invariants.hpp"

namespace folrig::liealg {

using exactnum::ExactMatrix;
using exactnum::Rational;

namespace {

mpz_class binomial(std::size_t n, std::size_t k) {
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

}  // namespace

std::vector<std::vector<std::size_t>> k_subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    if (k > n) return out;
    std::vector<std::size_t> cur(k);
    for (std::size_t i = 0; i < k; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        if (k == 0) break;
        // Advance to the lexicographic successor: bump the rightmost entry
        // that still has room, then reset everything after it.
        std::size_t i = k;
        while (i > 0 && cur[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) break;
        ++cur[i - 1];
        for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

ExactMatrix<Rational> ce_differential(const LieAlgebra& g, std::size_t k) {
    const std::size_t n = g.dim();
    const auto domain = k_subsets(n, k);
    const auto codomain = k_subsets(n, k + 1);

    std::map<std::vector<std::size_t>, std::size_t> domain_rank;
    for (std::size_t s = 0; s < domain.size(); ++s) domain_rank.emplace(domain[s], s);

    ExactMatrix<Rational> d(codomain.size(), domain.size());
    std::vector<std::size_t> rest(k >= 1 ? k - 1 : 0);
    std::vector<std::size_t> source(k);
    for (std::size_t row = 0; row < codomain.size(); ++row) {
        const auto& tuple = codomain[row];
        for (std::size_t i = 0; i + 1 < tuple.size(); ++i) {
            for (std::size_t j = i + 1; j < tuple.size(); ++j) {
                rest.clear();
                for (std::size_t p = 0; p < tuple.size(); ++p)
                    if (p != i && p != j) rest.push_back(tuple[p]);
                const int pair_sign = ((i + j) % 2 == 0) ? 1 : -1;
                const auto image = g.bracket_basis(tuple[i], tuple[j]);
                for (std::size_t m = 0; m < n; ++m) {
                    if (image[m].is_zero()) continue;
                    // A repeated argument kills the alternating evaluation.
                    std::size_t pos = 0;
                    bool repeated = false;
                    for (std::size_t r : rest) {
                        if (r == m) {
                            repeated = true;
                            break;
                        }
                        if (r < m) ++pos;
                    }
                    if (repeated) continue;
                    source.assign(rest.begin(), rest.end());
                    source.insert(source.begin() + static_cast<std::ptrdiff_t>(pos), m);
                    const int shuffle_sign = (pos % 2 == 0) ? 1 : -1;
                    Rational term = image[m];
                    if (pair_sign * shuffle_sign < 0) term = -term;
                    d(row, domain_rank.at(source)) += term;
                }
            }
        }
    }
    return d;
}

CohomologyReport ce_cohomology(const LieAlgebra& g, std::size_t k, std::size_t budget) {
    const std::size_t n = g.dim();
    const mpz_class largest = std::max(binomial(n, k), binomial(n, k + 1));
    if (largest > static_cast<unsigned long>(budget)) {
        throw BudgetExceeded("cochain basis of size " + largest.get_str() +
                             " exceeds the budget of " + std::to_string(budget) +
                             " (dimension " + std::to_string(n) + ", degree " + std::to_string(k) +
                             ")");
    }

    const ExactMatrix<Rational> d_k = ce_differential(g, k);
    const auto cocycles = exactnum::exact_kernel(d_k);

    std::vector<std::vector<Rational>> boundary_basis;
    if (k >= 1) {
        const ExactMatrix<Rational> d_prev = ce_differential(g, k - 1);
        boundary_basis = exactnum::column_space_basis(d_prev);
    }

    // Stack coboundaries then cocycles as columns; the pivot columns landing
    // in the cocycle block are exactly the representatives we want, since a
    // pivot column is independent of everything to its left.
    const std::size_t space_dim = d_k.cols();
    ExactMatrix<Rational> stacked(space_dim, boundary_basis.size() + cocycles.size());
    for (std::size_t c = 0; c < boundary_basis.size(); ++c)
        for (std::size_t r = 0; r < space_dim; ++r) stacked(r, c) = boundary_basis[c][r];
    for (std::size_t c = 0; c < cocycles.size(); ++c)
        for (std::size_t r = 0; r < space_dim; ++r)
            stacked(r, boundary_basis.size() + c) = cocycles[c][r];

    CohomologyReport report;
    report.degree = k;
    const auto echelon = exactnum::bareiss_echelon(stacked);
    for (std::size_t col : echelon.pivot_cols) {
        if (col < boundary_basis.size()) continue;
        report.representatives.push_back(cocycles[col - boundary_basis.size()]);
    }
    report.dimension = report.representatives.size();

    if (k == 1) {
        // Independent count for degree one: closed 1-forms are exactly the
        // functionals vanishing on brackets, and nothing is exact, so the
        // dimension must equal the codimension of the derived subalgebra.
        const std::size_t expected = n - derived_subalgebra(g).dim();
        if (report.dimension != expected) {
            throw std::logic_error("degree-1 cohomology disagrees with the derived-subalgebra "
                                   "codimension: got " +
                                   std::to_string(report.dimension) + ", expected " +
                                   std::to_string(expected));
        }
    }
    return report;
}

}  // namespace folrig::liealg
