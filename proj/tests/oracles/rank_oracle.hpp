#pragma once

// Floating-point rank/kernel reference, used to cross-check the exact
// fraction-free elimination from the outside.  SVD with a relative singular
// threshold; nothing here touches the library's elimination code.

#include <Eigen/Dense>

#include <cstddef>

namespace oracle {

inline std::size_t float_rank(const Eigen::MatrixXd& m, double rel_tol = 1e-9) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    const Eigen::VectorXd& s = svd.singularValues();
    if (s.size() == 0) return 0;
    const double cut = rel_tol * std::max(1.0, s(0));
    std::size_t r = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i)
        if (s(i) > cut) ++r;
    return r;
}

inline std::size_t float_kernel_dim(const Eigen::MatrixXd& m, double rel_tol = 1e-9) {
    return static_cast<std::size_t>(m.cols()) - float_rank(m, rel_tol);
}

}  // namespace oracle
