#pragma once

#include <Eigen/Dense>

#include <optional>
#include <string>
#include <vector>

#include "folrig/dynamics/word_ball.hpp"
#include "folrig/exactnum/cubic.hpp"
#include "folrig/exactnum/quadratic.hpp"
#include "folrig/groupcoh/presentation.hpp"
#include "folrig/liealg/lie_algebra.hpp"
#include "folrig/qform/form.hpp"
#include "folrig/suspension/finite_action.hpp"

// JSON loaders for the bundled input formats.  Exact coefficients are
// written as rational strings ("3", "-1/2") or plain integers; float data
// as JSON numbers.  Every loader validates through the owning module's
// constructor and prefixes diagnostics with the file path.
namespace folrig::io {

// {"dim": n, "basis_names": [...], "brackets": [[i, j, k, coeff], ...]}
liealg::LieAlgebra load_lie_algebra(const std::string& path);

// {"field": "Q(sqrt2)" | "Q(cbrt2)", "n": n,
//  "entries": [[i, j, [coeff components...]], ...]}
// with symmetric completion implied for off-diagonal entries.
struct FormFile {
    std::string field;
    std::optional<qform::QuadraticForm<exactnum::QuadElement>> sqrt2;
    std::optional<qform::QuadraticForm<exactnum::CubicElement>> cbrt2;
};
FormFile load_quadratic_form(const std::string& path);

// {"generators": [names], "relators": [[signed symbols], ...]}
groupcoh::Presentation load_presentation(const std::string& path);

// {"dimension": d, "images": {name: [[entries]], ...}} -- all entries
// rational strings for the exact path, or all JSON numbers for floats.
groupcoh::MatrixRep load_representation(const std::string& path,
                                        const groupcoh::Presentation& pres);

// {"generators": [names], "images": [[permutation], ...], "relators": [...]}
suspension::FiniteAction load_finite_action(const std::string& path);

// {"n": n, "matrices": [[[rows]], ...]} -- float matrices, e.g. rotation
// images driving the dynamics diagnostics.
std::vector<Eigen::MatrixXd> load_float_matrices(const std::string& path);

// Word-ball cache round-trip.  The file carries the BFS structure (word
// tree, lengths) next to the matrices plus an integrity tag; load returns
// nothing when the file is absent, was written for different parameters, or
// fails the integrity check.
void save_word_ball(const std::string& path, const dynamics::WordBall& ball);
std::optional<dynamics::WordBall> load_word_ball(const std::string& path,
                                                 const std::vector<Eigen::MatrixXd>& generators,
                                                 std::size_t radius, double dedup_tol);

}  // namespace folrig::io
