#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <cstdint>
#include <vector>

namespace folrig::dynamics {

// One enumerated product.  Instead of storing the whole word per element,
// each element keeps a breadcrumb — the index of its parent and the generator
// letter appended last — from which the representative word is rebuilt on
// demand.  BFS order makes the breadcrumb word the shortest, lexicographically
// first representative automatically.
struct WordBallElement {
    Eigen::MatrixXd matrix;
    std::int64_t parent = -1;  // -1 only for the identity
    int letter = -1;           // index into WordBall::generators, -1 for the identity
    std::size_t length = 0;    // word length
};

struct WordBall {
    // The generator list actually used for expansion: the input matrices in
    // their given order, then any inverses (transposes) that were not already
    // present within dedup_tol.
    std::vector<Eigen::MatrixXd> generators;
    std::size_t radius = 0;
    double dedup_tol = 0.0;
    // Deterministic order: word length first, then lexicographic word.  The
    // identity (empty word) is always element 0.  For any r <= radius the
    // prefix of elements with length <= r is exactly the radius-r ball.
    std::vector<WordBallElement> elements;
    // Set when some frontier produced nothing new before the radius was
    // reached: the ball is the entire generated group.
    bool closed = false;

    std::vector<int> word_of(std::size_t index) const;
    // Index of the first element of each length 0..radius (and one past-the-
    // end sentinel): elements[layer_begin[r] .. layer_begin[r+1]) have word
    // length exactly r.
    std::vector<std::size_t> layer_offsets() const;
};

// Breadth-first product closure up to the given word length.  Generators must
// be square, of equal size, and orthogonal within 1e-10; inverses are
// appended automatically when missing.  Two products are identified when
// their Frobenius distance is below dedup_tol, and the first (shortest, then
// lexicographically first) word is kept.  Exceeding element_cap throws
// BudgetExceeded.
WordBall enumerate_ball(const std::vector<Eigen::MatrixXd>& generators, std::size_t radius,
                        double dedup_tol = 1e-9, std::size_t element_cap = 1'000'000);

}  // namespace folrig::dynamics
