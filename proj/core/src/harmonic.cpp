#include "folrig/dynamics/harmonic.hpp"

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>

#include "folrig/errors.hpp"

namespace folrig::dynamics {

namespace {

mpz_class binomial(std::size_t n, std::size_t k) {
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

void enumerate_monomials(std::size_t vars_left, std::size_t degree_left,
                         std::vector<std::size_t>& current,
                         std::vector<std::vector<std::size_t>>& out) {
    if (vars_left == 1) {
        current.push_back(degree_left);
        out.push_back(current);
        current.pop_back();
        return;
    }
    for (std::size_t e = degree_left + 1; e-- > 0;) {
        current.push_back(e);
        enumerate_monomials(vars_left - 1, degree_left - e, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<std::vector<std::size_t>> degree_monomials(std::size_t n, std::size_t d) {
    if (n == 0) throw ValidationError("monomials need at least one variable");
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> current;
    enumerate_monomials(n, d, current, out);
    return out;
}

ExactMatrix<Rational> laplacian_matrix(std::size_t n, std::size_t d) {
    const auto domain = degree_monomials(n, d);
    const auto codomain = d >= 2 ? degree_monomials(n, d - 2) : std::vector<std::vector<std::size_t>>{};
    std::map<std::vector<std::size_t>, std::size_t> codomain_rank;
    for (std::size_t r = 0; r < codomain.size(); ++r) codomain_rank.emplace(codomain[r], r);

    ExactMatrix<Rational> lap(codomain.size(), domain.size());
    std::vector<std::size_t> reduced;
    for (std::size_t c = 0; c < domain.size(); ++c) {
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t e = domain[c][i];
            if (e < 2) continue;
            reduced = domain[c];
            reduced[i] -= 2;
            lap(codomain_rank.at(reduced), c) += Rational(static_cast<long>(e * (e - 1)));
        }
    }
    return lap;
}

Rational sphere_integral(std::size_t n, const std::vector<std::size_t>& exponents) {
    std::size_t total = 0;
    for (std::size_t e : exponents) {
        if (e % 2 != 0) return Rational();
        total += e;
    }
    // prod (e_i - 1)!!  over  n (n+2) ... (n + total - 2).
    mpz_class num = 1;
    for (std::size_t e : exponents)
        for (std::size_t f = e; f >= 2; f -= 2) num *= static_cast<unsigned long>(f - 1);
    mpz_class den = 1;
    for (std::size_t k = 0; 2 * k < total; ++k) den *= static_cast<unsigned long>(n + 2 * k);
    mpq_class q(num, den);
    q.canonicalize();
    return Rational(q);
}

HarmonicSpace harmonic_space(std::size_t n, std::size_t d, std::size_t budget) {
    if (n < 2) throw ValidationError("harmonic spaces need dimension n >= 2");
    const mpz_class monomial_count = binomial(n + d - 1, d);
    if (monomial_count > static_cast<unsigned long>(budget))
        throw BudgetExceeded("monomial basis of size " + monomial_count.get_str() +
                             " exceeds the budget of " + std::to_string(budget));

    HarmonicSpace space;
    space.n = n;
    space.degree = d;
    space.monomials = degree_monomials(n, d);
    space.basis = exact_kernel(laplacian_matrix(n, d));

    // The kernel rank is forced by the classical dimension count; anything
    // else means the Laplacian matrix itself is wrong.
    const mpz_class expected =
        monomial_count - (d >= 2 ? binomial(n + d - 3, d - 2) : mpz_class(0));
    if (mpz_class(static_cast<unsigned long>(space.basis.size())) != expected)
        throw std::logic_error("harmonic dimension mismatch: kernel rank " +
                               std::to_string(space.basis.size()) + ", expected " +
                               expected.get_str());

    // Exact Gram of the harmonic basis via monomial sphere averages.
    const std::size_t monos = space.monomials.size(), dim = space.basis.size();
    ExactMatrix<Rational> mono_gram(monos, monos);
    std::vector<std::size_t> merged(n);
    for (std::size_t a = 0; a < monos; ++a)
        for (std::size_t b = a; b < monos; ++b) {
            for (std::size_t i = 0; i < n; ++i)
                merged[i] = space.monomials[a][i] + space.monomials[b][i];
            Rational v = sphere_integral(n, merged);
            mono_gram(a, b) = v;
            mono_gram(b, a) = std::move(v);
        }
    ExactMatrix<Rational> basis_mat(monos, dim);
    for (std::size_t j = 0; j < dim; ++j)
        for (std::size_t i = 0; i < monos; ++i) basis_mat(i, j) = space.basis[j][i];
    space.gram = basis_mat.transpose() * mono_gram * basis_mat;

    Eigen::MatrixXd gram_f(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) gram_f(i, j) = space.gram(i, j).to_double();
    const Eigen::LLT<Eigen::MatrixXd> llt(gram_f);
    if (llt.info() != Eigen::Success)
        throw NotConverged("harmonic Gram matrix failed float factorization");
    space.orthonormalizer = Eigen::MatrixXd(llt.matrixL()).transpose();
    space.orthonormalizer_inv = space.orthonormalizer.triangularView<Eigen::Upper>().solve(
        Eigen::MatrixXd::Identity(dim, dim));
    return space;
}

}  // namespace folrig::dynamics
