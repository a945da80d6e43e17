#include "folrig/qform/embed.hpp"

#include <cmath>
#include <string>

#include "folrig/errors.hpp"
#include "folrig/exactnum/embedding.hpp"

namespace folrig::qform {

using exactnum::QuadElement;

namespace {

using LongMatrix = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;

LongMatrix embed_matrix(const exactnum::ExactMatrix<QuadElement>& m, int embedding_id) {
    LongMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                exactnum::quad_embed(m(i, j), embedding_id).real_part;
    return out;
}

}  // namespace

EmbeddedElement galois_embed_element(const OrthogonalElement<QuadElement>& g,
                                     const QuadraticForm<QuadElement>& phi, int embedding_id,
                                     double residual_tol) {
    const LongMatrix m = embed_matrix(g.matrix, embedding_id);
    const LongMatrix a = embed_matrix(phi.matrix(), embedding_id);
    const long double defect = (m.transpose() * a * m - a).cwiseAbs().maxCoeff();
    if (!(defect <= static_cast<long double>(residual_tol)))
        throw NotConverged("embedding residual " + std::to_string(static_cast<double>(defect)) +
                           " exceeds " + std::to_string(residual_tol) +
                           "; float precision exhausted for this element");
    EmbeddedElement out;
    out.matrix = m.cast<double>();
    out.residual = static_cast<double>(defect);
    out.embedding_id = embedding_id;
    return out;
}

Eigen::MatrixXd orthonormalized_embedding(const OrthogonalElement<QuadElement>& g,
                                          const QuadraticForm<QuadElement>& phi, int embedding_id,
                                          double tol) {
    const EmbeddedElement img = galois_embed_element(g, phi, embedding_id);
    const Eigen::MatrixXd a = embed_matrix(phi.matrix(), embedding_id).cast<double>();

    const Eigen::LLT<Eigen::MatrixXd> llt(a);
    if (llt.info() != Eigen::Success)
        throw ValidationError("form is not positive definite under embedding " +
                              std::to_string(embedding_id) +
                              "; cannot move its symmetries into the orthogonal group");
    const Eigen::MatrixXd lt = Eigen::MatrixXd(llt.matrixL()).transpose();
    const Eigen::MatrixXd lt_inv = lt.triangularView<Eigen::Upper>().solve(
        Eigen::MatrixXd::Identity(a.rows(), a.cols()));

    const Eigen::MatrixXd n = lt * img.matrix * lt_inv;
    const double defect =
        (n.transpose() * n - Eigen::MatrixXd::Identity(a.rows(), a.cols())).cwiseAbs().maxCoeff();
    if (!(defect <= tol))
        throw NotConverged("orthonormalized image defect " + std::to_string(defect) +
                           " exceeds " + std::to_string(tol));
    return n;
}

}  // namespace folrig::qform
