#include "folrig/liealg/builtin.hpp"

#include <string>
#include <vector>

#include "folrig/errors.hpp"
#include "folrig/exactnum/rational.hpp"

namespace folrig::liealg {

using exactnum::Rational;

namespace {

// Dense integer matrix just big enough for commutators of the E_ab - E_ba
// generators; avoids dragging the exact-matrix machinery into a computation
// whose entries are only ever -2..2.
using IntMat = std::vector<std::vector<long>>;

IntMat antisym_generator(std::size_t n, std::size_t a, std::size_t b) {
    IntMat m(n, std::vector<long>(n, 0));
    m[a][b] = 1;
    m[b][a] = -1;
    return m;
}

IntMat commutator(const IntMat& x, const IntMat& y) {
    const std::size_t n = x.size();
    IntMat out(n, std::vector<long>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            long acc = 0;
            for (std::size_t j = 0; j < n; ++j) acc += x[i][j] * y[j][k] - y[i][j] * x[j][k];
            out[i][k] = acc;
        }
    return out;
}

}  // namespace

LieAlgebra special_orthogonal(std::size_t n) {
    if (n < 3 || n > 7)
        throw ValidationError("special_orthogonal supports 3 <= n <= 7, got " + std::to_string(n));

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<std::string> names;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            pairs.emplace_back(a, b);
            names.push_back("L" + std::to_string(a) + std::to_string(b));
        }

    const std::size_t dim = pairs.size();
    std::vector<BracketEntry> entries;
    for (std::size_t i = 0; i < dim; ++i) {
        const IntMat mi = antisym_generator(n, pairs[i].first, pairs[i].second);
        for (std::size_t j = i + 1; j < dim; ++j) {
            const IntMat mj = antisym_generator(n, pairs[j].first, pairs[j].second);
            const IntMat c = commutator(mi, mj);
            // The commutator of antisymmetric matrices is antisymmetric, so
            // its upper triangle is its coordinate vector in the L_ab basis.
            for (std::size_t k = 0; k < dim; ++k) {
                const long coeff = c[pairs[k].first][pairs[k].second];
                if (coeff != 0) entries.push_back({i, j, k, Rational(coeff)});
            }
        }
    }
    return LieAlgebra(dim, entries, names);
}

LieAlgebra heisenberg() {
    return LieAlgebra(3, {{0, 1, 2, Rational(1)}}, {"x", "y", "z"});
}

LieAlgebra abelian(std::size_t n) { return LieAlgebra(n, {}); }

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
    const std::size_t off = a.dim();
    std::vector<BracketEntry> entries = a.sparse_entries();
    for (BracketEntry e : b.sparse_entries()) {
        e.i += off;
        e.j += off;
        e.k += off;
        entries.push_back(e);
    }

    std::vector<std::string> names;
    if (!a.basis_names().empty() || !b.basis_names().empty()) {
        const auto block = [&](const LieAlgebra& g, const char* tag) {
            for (std::size_t i = 0; i < g.dim(); ++i) {
                const std::string base =
                    g.basis_names().empty() ? "e" + std::to_string(i) : g.basis_names()[i];
                names.push_back(base + "." + tag);
            }
        };
        block(a, "1");
        block(b, "2");
    }
    return LieAlgebra(off + b.dim(), entries, names);
}

}  // namespace folrig::liealg
