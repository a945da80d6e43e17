#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>

#include <cmath>
#include <random>
#include <vector>

#include "folrig/dynamics/haar.hpp"
#include "folrig/dynamics/harmonic.hpp"
#include "folrig/dynamics/spectral.hpp"
#include "folrig/dynamics/word_ball.hpp"
#include "folrig/errors.hpp"
#include "test_util.hpp"

using folrig::BudgetExceeded;
using folrig::NotConverged;
using folrig::ValidationError;
using folrig::exactnum::ExactMatrix;
using folrig::exactnum::Rational;
using namespace folrig::dynamics;

namespace {

Eigen::MatrixXd rotation2(double theta) {
    Eigen::MatrixXd r(2, 2);
    r << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
    return r;
}

double binom(std::size_t n, std::size_t k) {
    if (k > n) return 0.0;
    double v = 1.0;
    for (std::size_t i = 0; i < k; ++i) v = v * static_cast<double>(n - i) / static_cast<double>(i + 1);
    return v;
}

// Evaluate a polynomial given by coefficients against the space's monomial
// list at a concrete point.
double eval_poly(const HarmonicSpace& space, const Eigen::VectorXd& coeffs,
                 const Eigen::VectorXd& x) {
    double acc = 0.0;
    for (std::size_t m = 0; m < space.monomials.size(); ++m) {
        double term = coeffs(static_cast<Eigen::Index>(m));
        for (std::size_t v = 0; v < space.n; ++v)
            for (std::size_t p = 0; p < space.monomials[m][v]; ++p)
                term *= x(static_cast<Eigen::Index>(v));
        acc += term;
    }
    return acc;
}

// Coefficients of basis combination c in monomial coordinates.
Eigen::VectorXd monomial_coords(const HarmonicSpace& space, const Eigen::VectorXd& c) {
    Eigen::VectorXd out = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(space.monomials.size()));
    for (std::size_t b = 0; b < space.basis.size(); ++b)
        for (std::size_t m = 0; m < space.monomials.size(); ++m)
            out(static_cast<Eigen::Index>(m)) +=
                c(static_cast<Eigen::Index>(b)) * space.basis[b][m].to_double();
    return out;
}

}  // namespace

TEST_CASE("haar probes: pinned by seed, orthogonal, oriented") {
    const auto a = haar_probes(4, 10, 99);
    const auto b = haar_probes(4, 10, 99);
    const auto c = haar_probes(4, 10, 100);
    REQUIRE(a.size() == 10);
    for (std::size_t i = 0; i < 10; ++i) {
        CHECK((a[i] - b[i]).cwiseAbs().maxCoeff() == 0.0);  // bit-identical
        CHECK((a[i].transpose() * a[i] - Eigen::MatrixXd::Identity(4, 4)).cwiseAbs().maxCoeff() <
              1e-12);
        CHECK(a[i].determinant() == doctest::Approx(1.0).epsilon(1e-10));
    }
    CHECK((a[0] - c[0]).cwiseAbs().maxCoeff() > 1e-3);
}

TEST_CASE("word ball of a quarter turn closes at the cyclic group of order 4") {
    const auto ball = enumerate_ball({rotation2(M_PI / 2)}, 4);
    CHECK(ball.closed);
    CHECK(ball.elements.size() == 4);
    CHECK(ball.generators.size() == 2);  // the inverse was appended

    const auto offsets = ball.layer_offsets();
    REQUIRE(offsets.size() == 6);  // layers 0..4 plus sentinel
    CHECK(offsets[1] - offsets[0] == 1);  // identity
    CHECK(offsets[2] - offsets[1] == 2);  // the turn and its inverse
    CHECK(offsets[3] - offsets[2] == 1);  // the half turn
    CHECK(offsets[4] == offsets[3]);      // nothing new afterwards

    // breadcrumbs rebuild each element as a product of generator letters
    for (std::size_t idx = 0; idx < ball.elements.size(); ++idx) {
        const auto word = ball.word_of(idx);
        CHECK(word.size() == ball.elements[idx].length);
        Eigen::MatrixXd prod = Eigen::MatrixXd::Identity(2, 2);
        for (int letter : word) prod = prod * ball.generators[static_cast<std::size_t>(letter)];
        CHECK((prod - ball.elements[idx].matrix).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("word ball growth for an irrational rotation is linear and open") {
    const auto ball = enumerate_ball({rotation2(1.0)}, 8);
    CHECK(!ball.closed);
    CHECK(ball.elements.size() == 17);  // R^k for |k| <= 8
    const auto offsets = ball.layer_offsets();
    for (std::size_t r = 1; r <= 8; ++r) CHECK(offsets[r + 1] - offsets[r] == 2);
}

TEST_CASE("duplicate generator input does not change the enumeration") {
    const Eigen::MatrixXd r = rotation2(0.7);
    const auto once = enumerate_ball({r}, 5);
    const auto twice = enumerate_ball({r, r}, 5);
    REQUIRE(once.elements.size() == twice.elements.size());
    for (std::size_t i = 0; i < once.elements.size(); ++i)
        CHECK((once.elements[i].matrix - twice.elements[i].matrix).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("smaller balls are exact prefixes of larger ones") {
    const std::vector<Eigen::MatrixXd> gens = haar_probes(3, 2, 7);
    const auto small = enumerate_ball(gens, 2);
    const auto large = enumerate_ball(gens, 4);
    REQUIRE(large.elements.size() >= small.elements.size());
    for (std::size_t i = 0; i < small.elements.size(); ++i) {
        CHECK((small.elements[i].matrix - large.elements[i].matrix).cwiseAbs().maxCoeff() == 0.0);
        CHECK(small.elements[i].parent == large.elements[i].parent);
        CHECK(small.elements[i].letter == large.elements[i].letter);
        CHECK(small.elements[i].length == large.elements[i].length);
    }
}

TEST_CASE("ball enumeration enforces its inputs and its budget") {
    CHECK_THROWS_AS(enumerate_ball({}, 3), ValidationError);
    CHECK_THROWS_AS(enumerate_ball({2.0 * Eigen::MatrixXd::Identity(2, 2)}, 3), ValidationError);
    const std::vector<Eigen::MatrixXd> mixed = {rotation2(0.3),
                                                Eigen::MatrixXd::Identity(3, 3)};
    CHECK_THROWS_AS(enumerate_ball(mixed, 3), ValidationError);
    CHECK_THROWS_AS(enumerate_ball(haar_probes(3, 2, 7), 6, 1e-9, 10), BudgetExceeded);
}

TEST_CASE("covering radii match direct angle arithmetic on the circle") {
    // On SO(2), Frobenius distance is 2 sqrt2 |sin((a-b)/2)|; the covering
    // radius of a set of rotations can therefore be recomputed from angles
    // alone, entirely outside the library.
    const double step = 1.0;  // irrational fraction of the circle
    const auto ball = enumerate_ball({rotation2(step)}, 6);
    const std::size_t probes = 150;
    const std::uint64_t seed = 424242;

    const auto profile = covering_profile(ball, probes, seed);
    REQUIRE(profile.size() == 7);

    const auto probe_mats = haar_probes(2, probes, seed);
    for (std::size_t radius = 0; radius <= 6; ++radius) {
        double expect = 0.0;
        for (const auto& p : probe_mats) {
            const double theta = std::atan2(p(1, 0), p(0, 0));
            double best = 1e300;
            for (long k = -static_cast<long>(radius); k <= static_cast<long>(radius); ++k) {
                const double d =
                    2.0 * std::sqrt(2.0) * std::abs(std::sin((theta - step * k) / 2.0));
                best = std::min(best, d);
            }
            expect = std::max(expect, best);
        }
        CHECK(profile[radius].radius == radius);
        CHECK(profile[radius].covering_radius == doctest::Approx(expect).epsilon(1e-10));
        CHECK(profile[radius].probe_count == probes);
        CHECK(profile[radius].metric == "frobenius");
        CHECK(profile[radius].seed == seed);
    }

    // the documented aggregate equals the last profile entry
    const auto last = covering_radius(ball, probes, seed);
    CHECK(last.covering_radius == profile.back().covering_radius);
}

TEST_CASE("covering profile is weakly decreasing and worker-independent") {
    const auto gens = haar_probes(3, 2, 31);
    const auto ball = enumerate_ball(gens, 4);
    const auto one = covering_profile(ball, 100, 5, 1);
    const auto three = covering_profile(ball, 100, 5, 3);
    REQUIRE(one.size() == three.size());
    for (std::size_t r = 0; r < one.size(); ++r) {
        CHECK(one[r].covering_radius == three[r].covering_radius);  // byte-equal doubles
        if (r > 0) CHECK(one[r].covering_radius <= one[r - 1].covering_radius);
    }
}

TEST_CASE("harmonic spaces have the classical dimensions") {
    // dim = C(n+d-1, d) - C(n+d-3, d-2)
    for (std::size_t n = 2; n <= 5; ++n)
        for (std::size_t d = 1; d <= 4; ++d) {
            const auto space = harmonic_space(n, d);
            const double expect =
                binom(n + d - 1, d) - (d >= 2 ? binom(n + d - 3, d - 2) : 0.0);
            CHECK(space.dimension() == static_cast<std::size_t>(expect));
            CHECK(space.monomials.size() == static_cast<std::size_t>(binom(n + d - 1, d)));
        }
    // the S^4 ladder used by the spectral diagnostics
    CHECK(harmonic_space(5, 1).dimension() == 5);
    CHECK(harmonic_space(5, 2).dimension() == 14);
    CHECK(harmonic_space(5, 3).dimension() == 30);
    CHECK(harmonic_space(5, 4).dimension() == 55);

    CHECK_THROWS_AS(harmonic_space(8, 12, 100), BudgetExceeded);
}

TEST_CASE("every harmonic basis vector is annihilated by the Laplacian") {
    const auto space = harmonic_space(4, 3);
    const auto lap = laplacian_matrix(4, 3);
    for (const auto& b : space.basis)
        for (const Rational& r : lap.apply(b)) CHECK(r.is_zero());
    // and the kernel is the whole harmonic space: rank check
    CHECK(space.dimension() + exact_rank(lap) == space.monomials.size());
}

TEST_CASE("Laplacian matrix reproduces hand-computed derivatives") {
    // n = 2, d = 3: monomial order is x^3, x^2 y, x y^2, y^3 (first exponent
    // decreasing); Laplacian lands in x, y
    const auto lap = laplacian_matrix(2, 3);
    REQUIRE(lap.rows() == 2);
    REQUIRE(lap.cols() == 4);
    // Δ x^3 = 6x, Δ x^2 y = 2y, Δ x y^2 = 2x, Δ y^3 = 6y
    CHECK(lap(0, 0) == Rational(6));
    CHECK(lap(1, 1) == Rational(2));
    CHECK(lap(0, 2) == Rational(2));
    CHECK(lap(1, 3) == Rational(6));
    CHECK(lap(1, 0).is_zero());
    CHECK(lap(0, 3).is_zero());
}

TEST_CASE("sphere integrals of monomials: textbook values on S^2") {
    // average over the sphere: x^2 -> 1/3, x^4 -> 1/5, x^2 y^2 -> 1/15,
    // odd powers -> 0
    CHECK(sphere_integral(3, {2, 0, 0}) == Rational(1, 3));
    CHECK(sphere_integral(3, {4, 0, 0}) == Rational(1, 5));
    CHECK(sphere_integral(3, {2, 2, 0}) == Rational(1, 15));
    CHECK(sphere_integral(3, {1, 2, 0}).is_zero());
    CHECK(sphere_integral(3, {1, 1, 1}).is_zero());
}

TEST_CASE("gram data: exact symmetry and a consistent orthonormalizer") {
    const auto space = harmonic_space(3, 2);
    REQUIRE(space.dimension() == 5);
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(space.gram(i, i).sign() > 0);
        for (std::size_t j = 0; j < 5; ++j) CHECK(space.gram(i, j) == space.gram(j, i));
    }
    const Eigen::MatrixXd g_float = testutil::to_float(space.gram);
    CHECK((space.orthonormalizer.transpose() * space.orthonormalizer - g_float)
              .cwiseAbs()
              .maxCoeff() < 1e-12);
    CHECK((space.orthonormalizer * space.orthonormalizer_inv -
           Eigen::MatrixXd::Identity(5, 5))
              .cwiseAbs()
              .maxCoeff() < 1e-12);
}

TEST_CASE("harmonic action is the substitution action, verified pointwise") {
    const auto space = harmonic_space(3, 2);
    std::mt19937_64 rng(41);
    std::normal_distribution<double> gauss;
    const auto gs = haar_probes(3, 3, 17);
    for (const auto& g : gs) {
        const Eigen::MatrixXd action = harmonic_action(space, g);
        for (int t = 0; t < 5; ++t) {
            Eigen::VectorXd c(static_cast<Eigen::Index>(space.dimension()));
            Eigen::VectorXd x(3);
            for (Eigen::Index i = 0; i < c.size(); ++i) c(i) = gauss(rng);
            for (Eigen::Index i = 0; i < 3; ++i) x(i) = gauss(rng);

            // p_{Ac}(x) must equal p_c(g^{-1} x)
            const double lhs = eval_poly(space, monomial_coords(space, action * c), x);
            const double rhs =
                eval_poly(space, monomial_coords(space, c), g.transpose() * x);
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
        }
    }
}

TEST_CASE("exact and float action paths agree on signed permutations") {
    const auto space = harmonic_space(3, 2);

    // x -> y, y -> -x, z -> z: exactly orthogonal with rational entries
    ExactMatrix<Rational> p(3, 3);
    p(1, 0) = Rational(1);
    p(0, 1) = Rational(-1);
    p(2, 2) = Rational(1);

    ExactMatrix<Rational> swap(3, 3);
    swap(1, 0) = Rational(1);
    swap(0, 1) = Rational(1);
    swap(2, 2) = Rational(-1);  // determinant fix keeps it orthogonal

    const auto a_exact = harmonic_action_exact(space, p);
    const auto b_exact = harmonic_action_exact(space, swap);
    const Eigen::MatrixXd a_float = harmonic_action(space, testutil::to_float(p));
    CHECK((testutil::to_float(a_exact) - a_float).cwiseAbs().maxCoeff() < 1e-12);

    // homomorphism property holds exactly on the exact path
    const auto prod_action = harmonic_action_exact(space, p * swap);
    CHECK(prod_action == a_exact * b_exact);

    // a matrix that is not exactly orthogonal is refused on the exact path
    ExactMatrix<Rational> skew = ExactMatrix<Rational>::identity(3);
    skew(0, 1) = Rational(1);
    CHECK_THROWS_AS(harmonic_action_exact(space, skew), ValidationError);
}

TEST_CASE("representation matrices are orthogonal in L2 coordinates") {
    const auto space = harmonic_space(3, 2);
    for (const auto& g : haar_probes(3, 4, 23)) {
        const Eigen::MatrixXd rep = representation_matrix(space, g);
        CHECK((rep.transpose() * rep - Eigen::MatrixXd::Identity(5, 5)).cwiseAbs().maxCoeff() <
              1e-8);
    }
}

TEST_CASE("averaging norm of a single circle rotation is |cos theta|") {
    const auto space = harmonic_space(2, 1);  // linear polynomials on R^2
    for (const double alpha : {0.23, 0.05, 0.41}) {
        const double theta = 2.0 * M_PI * alpha;
        const std::vector<Eigen::MatrixXd> gens = {rotation2(theta),
                                                   rotation2(theta).transpose()};
        const auto gap = averaging_operator_norm(gens, space);
        CHECK(gap.converged);
        CHECK(gap.iterations <= 500);
        CHECK(!gap.empty_invariant_free);
        CHECK(gap.invariant_dimension == 0);
        REQUIRE(gap.estimate.has_value());
        CHECK(*gap.estimate == doctest::Approx(std::abs(std::cos(theta))).epsilon(1e-8));
        REQUIRE(gap.gap.has_value());
        CHECK(*gap.gap == doctest::Approx(1.0 - std::abs(std::cos(theta))).epsilon(1e-7));
    }
}

TEST_CASE("averaging over a full finite cyclic group is a character sum: zero") {
    // all six rotations by multiples of 60 degrees form a symmetric set; on
    // degree-1 harmonics their average is the zero operator
    std::vector<Eigen::MatrixXd> group;
    for (int k = 0; k < 6; ++k) group.push_back(rotation2(k * M_PI / 3.0));
    const auto space = harmonic_space(2, 1);
    const auto gap = averaging_operator_norm(group, space);
    CHECK(gap.converged);
    REQUIRE(gap.estimate.has_value());
    CHECK(*gap.estimate <= 1e-8);
    CHECK(gap.invariant_dimension == 0);
}

TEST_CASE("invariant vectors are split off before the norm is measured") {
    const auto space = harmonic_space(3, 2);
    // the coordinate swap x <-> y fixes a 3-dimensional harmonic subspace
    ExactMatrix<Rational> swap(3, 3);
    swap(1, 0) = Rational(1);
    swap(0, 1) = Rational(1);
    swap(2, 2) = Rational(-1);
    const std::vector<Eigen::MatrixXd> gens = {testutil::to_float(swap)};  // self-inverse
    const std::vector<ExactMatrix<Rational>> exact = {swap};

    const auto with_exact = averaging_operator_norm(gens, space, 1e-8, 500, &exact);
    CHECK(with_exact.invariant_space_exact);
    CHECK(with_exact.invariant_dimension == 3);
    REQUIRE(with_exact.estimate.has_value());
    CHECK(*with_exact.estimate == doctest::Approx(1.0).epsilon(1e-8));

    const auto with_float = averaging_operator_norm(gens, space);
    CHECK(!with_float.invariant_space_exact);
    CHECK(with_float.invariant_dimension == 3);
    CHECK(*with_float.estimate == doctest::Approx(*with_exact.estimate).epsilon(1e-8));
}

TEST_CASE("the identity alone fixes everything: nothing left to measure") {
    const auto space = harmonic_space(2, 2);
    const std::vector<Eigen::MatrixXd> gens = {Eigen::MatrixXd::Identity(2, 2)};
    const auto gap = averaging_operator_norm(gens, space);
    CHECK(gap.empty_invariant_free);
    CHECK(!gap.estimate.has_value());
    CHECK(gap.invariant_dimension == space.dimension());
}

TEST_CASE("averaging guards: symmetrization and iteration budget") {
    const auto space = harmonic_space(2, 1);
    CHECK_THROWS_AS(averaging_operator_norm({rotation2(1.0)}, space), ValidationError);
    const std::vector<Eigen::MatrixXd> gens = {rotation2(1.0), rotation2(-1.0)};
    CHECK_THROWS_AS(averaging_operator_norm(gens, space, 1e-8, 1), NotConverged);
}

TEST_CASE("weyl deviation: identity ball at one extreme, full group at zero") {
    const auto space = harmonic_space(2, 1);

    const auto tiny = enumerate_ball({rotation2(M_PI / 2)}, 0);
    CHECK(weyl_deviation(tiny, space) == doctest::Approx(1.0));  // only the identity

    const auto full = enumerate_ball({rotation2(M_PI / 2)}, 4);  // the whole C4
    CHECK(weyl_deviation(full, space) <= 1e-12);

    const auto open_ball = enumerate_ball({rotation2(1.0)}, 10);
    const double dev = weyl_deviation(open_ball, space);
    CHECK(dev >= 0.0);
    CHECK(dev <= 1.0 + 1e-12);
}
