#pragma once

// Reference validity check for structure-constant tables.  Deliberately kept
// apart from the library: dense GMP tensor, textbook Jacobi sum, no shared
// code.  Tests compare the library's accept/reject decisions against this.

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <set>
#include <vector>

namespace oracle {

struct RawBracket {
    std::size_t i = 0, j = 0, k = 0;
    mpq_class coeff;
};

// Storage contract mirrored from the on-disk format: indices in range,
// strictly i < j, no duplicate (i, j, k).
inline bool storage_ok(std::size_t dim, const std::vector<RawBracket>& entries) {
    std::set<std::array<std::size_t, 3>> seen;
    for (const RawBracket& e : entries) {
        if (e.i >= dim || e.j >= dim || e.k >= dim) return false;
        if (e.i >= e.j) return false;
        if (!seen.insert({e.i, e.j, e.k}).second) return false;
    }
    return true;
}

// [[e_x, e_y], e_z] + [[e_y, e_z], e_x] + [[e_z, e_x], e_y] = 0 for all
// x < y < z, checked component by component on the dense antisymmetric
// tensor.  Assumes storage_ok.
inline bool jacobi_ok(std::size_t dim, const std::vector<RawBracket>& entries) {
    std::vector<std::vector<std::vector<mpq_class>>> c(
        dim, std::vector<std::vector<mpq_class>>(dim, std::vector<mpq_class>(dim, 0)));
    for (const RawBracket& e : entries) {
        c[e.i][e.j][e.k] += e.coeff;
        c[e.j][e.i][e.k] -= e.coeff;
    }
    auto term = [&](std::size_t x, std::size_t y, std::size_t z, std::size_t l) {
        // [[e_x, e_y], e_z]_l = sum_m c_{xy}^m c_{mz}^l
        mpq_class acc = 0;
        for (std::size_t m = 0; m < dim; ++m)
            if (c[x][y][m] != 0 && m != z) acc += c[x][y][m] * c[m][z][l];
        return acc;
    };
    for (std::size_t x = 0; x < dim; ++x)
        for (std::size_t y = x + 1; y < dim; ++y)
            for (std::size_t z = y + 1; z < dim; ++z)
                for (std::size_t l = 0; l < dim; ++l)
                    if (term(x, y, z, l) + term(y, z, x, l) + term(z, x, y, l) != 0) return false;
    return true;
}

inline bool table_valid(std::size_t dim, const std::vector<RawBracket>& entries) {
    return storage_ok(dim, entries) && jacobi_ok(dim, entries);
}

}  // namespace oracle
