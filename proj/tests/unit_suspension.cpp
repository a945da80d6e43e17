#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>

#include <random>
#include <vector>

#include "folrig/dynamics/haar.hpp"
#include "folrig/errors.hpp"
#include "folrig/liealg/builtin.hpp"
#include "folrig/liealg/decomposition.hpp"
#include "folrig/suspension/finite_action.hpp"
#include "folrig/suspension/maurer_cartan.hpp"
#include "folrig/suspension/pipeline.hpp"

using folrig::ValidationError;
using folrig::exactnum::ExactMatrix;
using folrig::exactnum::Rational;
using namespace folrig::liealg;
using namespace folrig::suspension;

namespace {

FiniteAction two_orbits() {
    // s cycles {0,1,2}, t swaps {3,4}; relators s^3 and t^2
    FiniteAction a;
    a.generators = {"s", "t"};
    a.images = {{1, 2, 0, 3, 4}, {0, 1, 2, 4, 3}};
    a.relators = {{1, 1, 1}, {2, 2}};
    return a;
}

std::vector<Rational> unit(std::size_t dim, std::size_t i) {
    std::vector<Rational> v(dim);
    v[i] = Rational(1);
    return v;
}

}  // namespace

TEST_CASE("finite action validation catches each malformation") {
    CHECK_NOTHROW(validate_action(two_orbits()));

    auto not_bijective = two_orbits();
    not_bijective.images[0] = {1, 1, 0, 3, 4};
    CHECK_THROWS_AS(validate_action(not_bijective), ValidationError);

    auto out_of_range = two_orbits();
    out_of_range.images[0] = {1, 2, 5, 3, 4};
    CHECK_THROWS_AS(validate_action(out_of_range), ValidationError);

    auto ragged = two_orbits();
    ragged.images[1] = {0, 1, 2};
    CHECK_THROWS_AS(validate_action(ragged), ValidationError);

    auto missing_image = two_orbits();
    missing_image.images.pop_back();
    CHECK_THROWS_AS(validate_action(missing_image), ValidationError);

    auto broken_relator = two_orbits();
    broken_relator.relators = {{1, 1}};  // s^2 is not the identity
    CHECK_THROWS_WITH_AS(validate_action(broken_relator), doctest::Contains("relator"),
                         ValidationError);

    auto bad_symbol = two_orbits();
    bad_symbol.relators = {{3}};
    CHECK_THROWS_AS(validate_action(bad_symbol), ValidationError);
}

TEST_CASE("orbit partition of the two-orbit example") {
    const auto report = orbits(two_orbits());
    CHECK(report.set_size == 5);
    REQUIRE(report.orbits.size() == 2);

    CHECK(report.orbits[0].members == std::vector<std::size_t>{0, 1, 2});
    CHECK(report.orbits[0].stabilizer_index == 3);
    CHECK(report.orbits[0].compact_leaf);

    CHECK(report.orbits[1].members == std::vector<std::size_t>{3, 4});
    CHECK(report.orbits[1].stabilizer_index == 2);
    CHECK(report.orbits[1].compact_leaf);
}

TEST_CASE("orbits are a partition, ordered by smallest member") {
    // one 5-cycle on a 7-point set plus a fixed pair swap
    FiniteAction a;
    a.generators = {"c", "w"};
    a.images = {{1, 2, 3, 4, 0, 5, 6}, {0, 1, 2, 3, 4, 6, 5}};
    const auto report = orbits(a);
    REQUIRE(report.orbits.size() == 2);
    std::vector<bool> covered(7, false);
    std::size_t previous_min = 0;
    for (std::size_t k = 0; k < report.orbits.size(); ++k) {
        const auto& orbit = report.orbits[k];
        CHECK(orbit.stabilizer_index == orbit.members.size());
        if (k > 0) CHECK(orbit.members.front() > previous_min);
        previous_min = orbit.members.front();
        for (std::size_t m : orbit.members) {
            CHECK(!covered[m]);
            covered[m] = true;
        }
    }
    for (bool c : covered) CHECK(c);

    // identity action: everything is a fixed point
    FiniteAction idle;
    idle.generators = {"e"};
    idle.images = {{0, 1, 2}};
    const auto fixed = orbits(idle);
    CHECK(fixed.orbits.size() == 3);
    for (const auto& orbit : fixed.orbits) CHECK(orbit.members.size() == 1);
}

TEST_CASE("rigidity pipeline verdicts across the stock algebras") {
    const auto so5 = rigidity_pipeline(special_orthogonal(5));
    CHECK(so5.dimension == 10);
    CHECK(so5.perfect);
    CHECK(so5.compact_type);
    CHECK(so5.semisimple);
    CHECK(!so5.so3_factor);
    CHECK(so5.full_criterion);
    CHECK(!so5.ideal_h1.has_value());

    const auto so4 = rigidity_pipeline(special_orthogonal(4));
    CHECK(so4.perfect);
    CHECK(so4.semisimple);
    CHECK(so4.so3_factor);
    CHECK(!so4.full_criterion);

    const auto heis = rigidity_pipeline(heisenberg());
    CHECK(!heis.perfect);
    CHECK(!heis.semisimple);
    CHECK(!heis.compact_type);
    CHECK(!heis.full_criterion);

    const auto flat = rigidity_pipeline(abelian(2));
    CHECK(!flat.perfect);
    CHECK(!flat.full_criterion);
}

TEST_CASE("pipeline with an ideal: reduction keeps rigidity iff the ideal is perfect") {
    const LieAlgebra so4 = special_orthogonal(4);
    const auto dec = simple_decomposition(so4);
    const auto report = rigidity_pipeline(so4, dec.ideals[0].ideal);
    REQUIRE(report.ideal_h1.has_value());
    CHECK(*report.ideal_h1 == 0);  // a simple ideal is perfect
    REQUIRE(report.reduction_preserves_rigidity.has_value());
    CHECK(*report.reduction_preserves_rigidity);

    // the Heisenberg center is abelian: H^1 = 1, reduction loses information
    const LieAlgebra heis = heisenberg();
    const auto center = rigidity_pipeline(heis, Subspace(3, {unit(3, 2)}));
    REQUIRE(center.ideal_h1.has_value());
    CHECK(*center.ideal_h1 == 1);
    CHECK(!*center.reduction_preserves_rigidity);

    // a subspace that is not an ideal is refused
    CHECK_THROWS_AS(rigidity_pipeline(special_orthogonal(3), Subspace(3, {unit(3, 0), unit(3, 1)})),
                    ValidationError);
    // ambient dimension mismatch is refused
    CHECK_THROWS_AS(rigidity_pipeline(heis, Subspace(4, {unit(4, 0)})), ValidationError);
}

TEST_CASE("pipeline verdicts are invariant under a rational change of basis") {
    const LieAlgebra so5 = special_orthogonal(5);
    const auto baseline = rigidity_pipeline(so5);

    std::mt19937_64 rng(61);
    std::uniform_int_distribution<long> c(-2, 2);
    ExactMatrix<Rational> p(10, 10);
    do {
        for (std::size_t i = 0; i < 10; ++i)
            for (std::size_t j = 0; j < 10; ++j) p(i, j) = Rational(c(rng));
    } while (exact_det(p).is_zero());
    const auto p_inv = exact_inverse(p);

    std::vector tbl(10, std::vector(10, std::vector<Rational>(10)));
    for (std::size_t i = 0; i < 10; ++i)
        for (std::size_t j = 0; j < 10; ++j) {
            std::vector<Rational> x(10), y(10);
            for (std::size_t r = 0; r < 10; ++r) {
                x[r] = p(r, i);
                y[r] = p(r, j);
            }
            tbl[i][j] = p_inv.apply(so5.bracket(x, y));
        }
    const auto moved = rigidity_pipeline(LieAlgebra::from_table(tbl));
    CHECK(moved.perfect == baseline.perfect);
    CHECK(moved.compact_type == baseline.compact_type);
    CHECK(moved.semisimple == baseline.semisimple);
    CHECK(moved.so3_factor == baseline.so3_factor);
    CHECK(moved.full_criterion == baseline.full_criterion);
}

TEST_CASE("rotation charts: seeded grid, orthogonal samples, fixed ladder") {
    const auto chart = so_chart(3, 5, 77);
    CHECK(chart.n == 3);
    REQUIRE(chart.grid.size() == 5);
    CHECK(chart.steps == std::vector<double>{1e-2, 5e-3, 2.5e-3});
    for (const auto& g : chart.grid)
        CHECK((g.transpose() * g - Eigen::MatrixXd::Identity(3, 3)).cwiseAbs().maxCoeff() <
              1e-10);

    const auto again = so_chart(3, 5, 77);
    for (std::size_t i = 0; i < 5; ++i)
        CHECK((chart.grid[i] - again.grid[i]).cwiseAbs().maxCoeff() == 0.0);

    CHECK_THROWS_AS(so_chart(1, 5, 77), ValidationError);
    CHECK_THROWS_AS(so_chart(3, 0, 77), ValidationError);
}

TEST_CASE("flatness defect decays at second order on SO(3)") {
    const auto chart = so_chart(3, 6, 20260816);
    const auto report = mc_residual(chart);
    REQUIRE(report.step_sizes == chart.steps);
    REQUIRE(report.residuals.size() == 3);
    for (std::size_t i = 0; i + 1 < report.residuals.size(); ++i) {
        CHECK(report.residuals[i] > 0.0);
        CHECK(report.residuals[i + 1] < report.residuals[i]);
    }
    REQUIRE(report.order.has_value());
    CHECK(*report.order > 1.7);
    CHECK(*report.order < 2.3);
    CHECK(report.pair_orders.size() == 2);
}

TEST_CASE("abelian SO(2) charts are flat to machine precision") {
    const auto chart = so_chart(2, 6, 4);
    const auto report = mc_residual(chart);
    for (double r : report.residuals) CHECK(r <= 1e-13);
    // flat ladders yield no observable order
    CHECK(!report.order.has_value());
}

TEST_CASE("a constant reference form has exactly zero defect") {
    auto chart = so_chart(3, 3, 9);
    Eigen::MatrixXd fixed(3, 3);
    fixed << 0, 1, 0, -1, 0, 0, 0, 0, 0;
    chart.constant_form = fixed;
    const auto report = mc_residual(chart);
    for (double r : report.residuals) CHECK(r == 0.0);
    CHECK(!report.order.has_value());
}

TEST_CASE("left invariance of the logarithmic derivative") {
    const auto chart = so_chart(3, 5, 123);
    const auto translations = folrig::dynamics::haar_probes(3, 20, 456);
    for (const auto& gamma : translations) CHECK(invariance_residual(chart, gamma) <= 1e-10);

    CHECK_THROWS_AS(invariance_residual(chart, Eigen::MatrixXd::Zero(3, 3)), ValidationError);
    CHECK_THROWS_AS(invariance_residual(chart, Eigen::MatrixXd::Identity(4, 4)), ValidationError);
}

TEST_CASE("chart validation: singularity and ladder monotonicity") {
    auto chart = so_chart(3, 3, 5);
    chart.grid[1] = Eigen::MatrixXd::Zero(3, 3);
    CHECK_THROWS_WITH_AS(mc_residual(chart), doctest::Contains("singular"), ValidationError);

    auto bad_ladder = so_chart(3, 3, 5);
    bad_ladder.steps = {1e-2, 1e-2, 5e-3};
    CHECK_THROWS_AS(mc_residual(bad_ladder), ValidationError);

    auto short_ladder = so_chart(3, 3, 5);
    short_ladder.steps = {1e-2, 5e-3};
    CHECK_THROWS_AS(mc_residual(short_ladder), ValidationError);

    auto empty_grid = so_chart(3, 3, 5);
    empty_grid.grid.clear();
    CHECK_THROWS_AS(mc_residual(empty_grid), ValidationError);
}
