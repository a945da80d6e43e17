#ifndef FOLRIG_EXACTNUM_MATRIX_HPP
#define FOLRIG_EXACTNUM_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "folrig/errors.hpp"

namespace folrig::exactnum {

// Dense matrix over an exact field (Rational, QuadElement, CubicElement).
// The field type needs: default ctor == zero, static one(), +, -, *, /,
// unary -, ==, is_zero().
template <typename F>
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static ExactMatrix identity(std::size_t n) {
        ExactMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = F::one();
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    F& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const F& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    ExactMatrix transpose() const {
        ExactMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    bool is_zero() const {
        for (const F& x : data_)
            if (!x.is_zero()) return false;
        return true;
    }

    friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
        a.require_same_shape(b, "+");
        ExactMatrix r(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.data_.size(); ++k) r.data_[k] = a.data_[k] + b.data_[k];
        return r;
    }
    friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
        a.require_same_shape(b, "-");
        ExactMatrix r(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.data_.size(); ++k) r.data_[k] = a.data_[k] - b.data_[k];
        return r;
    }
    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
        if (a.cols_ != b.rows_)
            throw ValidationError("matrix product with mismatched inner dimensions");
        ExactMatrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const F& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    if (b(k, j).is_zero()) continue;
                    r(i, j) += aik * b(k, j);
                }
            }
        return r;
    }
    friend ExactMatrix operator*(const F& s, const ExactMatrix& a) {
        ExactMatrix r(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.data_.size(); ++k) r.data_[k] = s * a.data_[k];
        return r;
    }
    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) { return !(a == b); }

    std::vector<F> apply(const std::vector<F>& v) const {
        if (v.size() != cols_) throw ValidationError("matrix-vector size mismatch");
        std::vector<F> out(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!(*this)(i, j).is_zero() && !v[j].is_zero()) out[i] += (*this)(i, j) * v[j];
        return out;
    }

private:
    void require_same_shape(const ExactMatrix& o, const char* op) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw ValidationError(std::string("matrix shapes differ for operator ") + op);
    }

    std::size_t rows_ = 0, cols_ = 0;
    std::vector<F> data_;
};

/*
 * Fraction-free (Bareiss) forward elimination.
 *
 * One-step Bareiss replaces the Gaussian update a_ij <- a_ij - a_ik a_kj / a_kk
 * by  a_ij <- (a_ij * pivot - a_ik * a_kj) / prev_pivot,  where prev_pivot is
 * the pivot of the previous stage (1 initially).  The division is exact (the
 * result is again a minor of the original matrix), which caps the coefficient
 * growth that makes naive exact elimination explode.  Pivoting is first
 * nonzero in column order, so results are deterministic.
 */
template <typename F>
struct Echelon {
    ExactMatrix<F> mat;                   // row echelon form (not normalized)
    std::vector<std::size_t> pivot_cols;  // one entry per pivot row
    int swap_sign = 1;                    // parity of row swaps
};

template <typename F>
Echelon<F> bareiss_echelon(ExactMatrix<F> m) {
    Echelon<F> out;
    const std::size_t rows = m.rows(), cols = m.cols();
    F prev = F::one();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t piv = row;
        while (piv < rows && m(piv, col).is_zero()) ++piv;
        if (piv == rows) continue;
        if (piv != row) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(row, j), m(piv, j));
            out.swap_sign = -out.swap_sign;
        }
        const F pivot = m(row, col);
        for (std::size_t i = row + 1; i < rows; ++i) {
            const F lead = m(i, col);
            for (std::size_t j = col + 1; j < cols; ++j)
                m(i, j) = (m(i, j) * pivot - lead * m(row, j)) / prev;
            m(i, col) = F();
        }
        prev = pivot;
        out.pivot_cols.push_back(col);
        ++row;
    }
    out.mat = std::move(m);
    return out;
}

template <typename F>
std::size_t exact_rank(const ExactMatrix<F>& m) {
    return bareiss_echelon(m).pivot_cols.size();
}

// Reduced row echelon form computed on top of the Bareiss echelon
// (normalization and back-substitution are plain field operations on
// already-contained entries).
template <typename F>
Echelon<F> exact_rref(const ExactMatrix<F>& m) {
    Echelon<F> e = bareiss_echelon(m);
    ExactMatrix<F>& a = e.mat;
    const std::size_t cols = a.cols();
    for (std::size_t r = e.pivot_cols.size(); r-- > 0;) {
        const std::size_t pc = e.pivot_cols[r];
        const F pv = a(r, pc);
        for (std::size_t j = pc; j < cols; ++j) a(r, j) = a(r, j) / pv;
        for (std::size_t i = 0; i < r; ++i) {
            const F f = a(i, pc);
            if (f.is_zero()) continue;
            for (std::size_t j = pc; j < cols; ++j) a(i, j) = a(i, j) - f * a(r, j);
        }
    }
    return e;
}

// Basis of the right null space, one column vector per free column.
// exact_rank + number of returned vectors = cols, always.
template <typename F>
std::vector<std::vector<F>> exact_kernel(const ExactMatrix<F>& m) {
    Echelon<F> e = exact_rref(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t pc : e.pivot_cols) is_pivot[pc] = true;

    std::vector<std::vector<F>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<F> v(cols);
        v[f] = F::one();
        for (std::size_t r = 0; r < e.pivot_cols.size(); ++r)
            v[e.pivot_cols[r]] = -e.mat(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Solves A x = b; empty optional when inconsistent.  Free variables are set
// to zero, so the answer is deterministic.
template <typename F>
std::optional<std::vector<F>> exact_solve(const ExactMatrix<F>& a, const std::vector<F>& b) {
    if (b.size() != a.rows()) throw ValidationError("solve: rhs length mismatch");
    ExactMatrix<F> aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    Echelon<F> e = exact_rref(aug);
    for (std::size_t pc : e.pivot_cols)
        if (pc == a.cols()) return std::nullopt;  // pivot in the rhs column
    std::vector<F> x(a.cols());
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) x[e.pivot_cols[r]] = e.mat(r, a.cols());
    return x;
}

template <typename F>
F exact_det(const ExactMatrix<F>& m) {
    if (m.rows() != m.cols()) throw ValidationError("determinant of non-square matrix");
    if (m.rows() == 0) return F::one();
    Echelon<F> e = bareiss_echelon(m);
    if (e.pivot_cols.size() < m.rows()) return F();
    // With full rank and no skipped columns the last Bareiss pivot *is* the
    // determinant, up to the row-swap parity.
    F d = e.mat(m.rows() - 1, m.cols() - 1);
    return e.swap_sign < 0 ? -d : d;
}

template <typename F>
ExactMatrix<F> exact_inverse(const ExactMatrix<F>& m) {
    if (m.rows() != m.cols()) throw ValidationError("inverse of non-square matrix");
    const std::size_t n = m.rows();
    ExactMatrix<F> aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = F::one();
    }
    Echelon<F> e = exact_rref(aug);
    if (e.pivot_cols.size() < n || e.pivot_cols[n - 1] != n - 1)
        throw ValidationError("matrix is singular");
    ExactMatrix<F> inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.mat(i, n + j);
    return inv;
}

// Column-space basis: the columns of m whose indices are Bareiss pivots.
template <typename F>
std::vector<std::vector<F>> column_space_basis(const ExactMatrix<F>& m) {
    Echelon<F> e = bareiss_echelon(m);
    std::vector<std::vector<F>> basis;
    for (std::size_t pc : e.pivot_cols) {
        std::vector<F> v(m.rows());
        for (std::size_t i = 0; i < m.rows(); ++i) v[i] = m(i, pc);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace folrig::exactnum

#endif
