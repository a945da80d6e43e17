#include "folrig/dynamics/word_ball.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "folrig/errors.hpp"

namespace folrig::dynamics {

namespace {

// Near-duplicate index over enumerated matrices.  Matrices are bucketed by
// their quantized entry sum; since |sum(A) - sum(B)| <= n * ||A - B||_F, a
// candidate within dedup_tol of a stored matrix lives in one of the three
// adjacent buckets, so lookups check a handful of full Frobenius distances
// instead of the whole ball.
class DedupIndex {
public:
    DedupIndex(double tol, Eigen::Index n) : tol_sq_(tol * tol), cell_(tol * static_cast<double>(n)) {}

    // Index of a stored matrix within tolerance, or -1.
    std::int64_t find(const Eigen::MatrixXd& m, const std::vector<WordBallElement>& elements) const {
        const long long key = quantize(m.sum());
        for (long long k = key - 1; k <= key + 1; ++k) {
            const auto it = buckets_.find(k);
            if (it == buckets_.end()) continue;
            for (const std::size_t idx : it->second)
                if ((elements[idx].matrix - m).squaredNorm() < tol_sq_)
                    return static_cast<std::int64_t>(idx);
        }
        return -1;
    }

    void insert(const Eigen::MatrixXd& m, std::size_t index) {
        buckets_[quantize(m.sum())].push_back(index);
    }

private:
    long long quantize(double sum) const { return static_cast<long long>(std::floor(sum / cell_)); }

    double tol_sq_;
    double cell_;
    std::map<long long, std::vector<std::size_t>> buckets_;
};

}  // namespace

std::vector<int> WordBall::word_of(std::size_t index) const {
    std::vector<int> word;
    std::int64_t at = static_cast<std::int64_t>(index);
    while (at >= 0 && elements[static_cast<std::size_t>(at)].letter >= 0) {
        word.push_back(elements[static_cast<std::size_t>(at)].letter);
        at = elements[static_cast<std::size_t>(at)].parent;
    }
    std::reverse(word.begin(), word.end());
    return word;
}

std::vector<std::size_t> WordBall::layer_offsets() const {
    // Elements are stored in nondecreasing length order, so each layer is a
    // contiguous run: offsets[r] is the first index of length >= r, and the
    // final entry is the past-the-end sentinel.
    std::vector<std::size_t> offsets(radius + 2, 0);
    std::size_t i = 0;
    for (std::size_t r = 0; r < offsets.size(); ++r) {
        while (i < elements.size() && elements[i].length < r) ++i;
        offsets[r] = i;
    }
    return offsets;
}

WordBall enumerate_ball(const std::vector<Eigen::MatrixXd>& generators, std::size_t radius,
                        double dedup_tol, std::size_t element_cap) {
    if (generators.empty()) throw ValidationError("empty generator list");
    if (!(dedup_tol > 0)) throw ValidationError("dedup tolerance must be positive");
    const Eigen::Index n = generators.front().rows();
    for (const Eigen::MatrixXd& g : generators) {
        if (g.rows() != n || g.cols() != n)
            throw ValidationError("generators must be square matrices of one size");
        const double defect =
            (g.transpose() * g - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff();
        if (!(defect <= 1e-10))
            throw ValidationError("generator fails orthogonality within 1e-10 (defect " +
                                  std::to_string(defect) + ")");
    }

    WordBall ball;
    ball.radius = radius;
    ball.dedup_tol = dedup_tol;
    ball.generators = generators;
    // Append missing inverses; for orthogonal matrices the inverse is the
    // transpose.  Comparison against the running list keeps the result
    // deterministic and free of duplicates.
    const double tol_sq = dedup_tol * dedup_tol;
    for (const Eigen::MatrixXd& g : generators) {
        const Eigen::MatrixXd inv = g.transpose();
        bool present = false;
        for (const Eigen::MatrixXd& h : ball.generators)
            if ((h - inv).squaredNorm() < tol_sq) {
                present = true;
                break;
            }
        if (!present) ball.generators.push_back(inv);
    }

    DedupIndex seen(dedup_tol, n);
    ball.elements.push_back(WordBallElement{Eigen::MatrixXd::Identity(n, n), -1, -1, 0});
    seen.insert(ball.elements[0].matrix, 0);

    std::size_t frontier_begin = 0, frontier_end = 1;
    for (std::size_t len = 1; len <= radius; ++len) {
        for (std::size_t p = frontier_begin; p < frontier_end; ++p) {
            for (int gi = 0; gi < static_cast<int>(ball.generators.size()); ++gi) {
                Eigen::MatrixXd cand = ball.elements[p].matrix * ball.generators[gi];
                if (seen.find(cand, ball.elements) >= 0) continue;
                if (ball.elements.size() >= element_cap)
                    throw BudgetExceeded("word ball exceeds the element cap of " +
                                         std::to_string(element_cap) + " at radius " +
                                         std::to_string(len));
                ball.elements.push_back(
                    WordBallElement{std::move(cand), static_cast<std::int64_t>(p), gi, len});
                seen.insert(ball.elements.back().matrix, ball.elements.size() - 1);
            }
        }
        if (ball.elements.size() == frontier_end) {
            ball.closed = true;  // nothing new: the group is exhausted
            break;
        }
        frontier_begin = frontier_end;
        frontier_end = ball.elements.size();
    }
    return ball;
}

}  // namespace folrig::dynamics
