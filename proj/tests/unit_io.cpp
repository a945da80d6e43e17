#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>

#include <cstdint>
#include <fstream>
#include <string>
#include <vector>

#include "folrig/dynamics/word_ball.hpp"
#include "folrig/errors.hpp"
#include "folrig/io/files.hpp"
#include "folrig/io/hash.hpp"
#include "folrig/io/reports.hpp"
#include "folrig/liealg/builtin.hpp"
#include "folrig/qform/form.hpp"

#include "test_util.hpp"

using folrig::ValidationError;
using folrig::exactnum::QuadElement;
using folrig::exactnum::Rational;
using namespace folrig::io;

namespace {

// FNV-1a written out from the published constants, as a cross-check that the
// library did not drift from the reference algorithm.
std::uint64_t fnv_reference(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace

TEST_CASE("bundled structure constants match the built-in algebras") {
    const auto so3 = load_lie_algebra("data/so3.json");
    const auto builtin = folrig::liealg::special_orthogonal(3);
    REQUIRE(so3.dim() == builtin.dim());
    CHECK(so3.basis_names() == builtin.basis_names());
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t k = 0; k < 3; ++k)
                CHECK(so3.bracket_coeff(i, j, k) == builtin.bracket_coeff(i, j, k));

    const auto heis = load_lie_algebra("data/heisenberg.json");
    const auto heis_builtin = folrig::liealg::heisenberg();
    REQUIRE(heis.dim() == 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t k = 0; k < 3; ++k)
                CHECK(heis.bracket_coeff(i, j, k) == heis_builtin.bracket_coeff(i, j, k));

    CHECK(load_lie_algebra("data/so4.json").dim() == 6);
    CHECK(load_lie_algebra("data/so5.json").dim() == 10);
    CHECK(load_lie_algebra("data/abelian3.json").sparse_entries().empty());
}

TEST_CASE("lie algebra loader diagnostics carry the path and offending entry") {
    testutil::TempDir tmp("io-alg");
    const std::string broken = tmp.file("broken.json");

    testutil::write_file(broken, "{ this is not json");
    CHECK_THROWS_WITH_AS(load_lie_algebra(broken), doctest::Contains(broken.c_str()), ValidationError);

    testutil::write_file(broken, "{\"dim\": 3, \"brackets\": [[0, 1, 2]]}");
    CHECK_THROWS_WITH_AS(load_lie_algebra(broken), doctest::Contains("brackets[0]"),
                         ValidationError);

    testutil::write_file(broken, "{\"dim\": 3, \"brackets\": [[0, 1, 2, 0.5]]}");
    CHECK_THROWS_WITH_AS(load_lie_algebra(broken), doctest::Contains("floats are lossy"),
                         ValidationError);

    testutil::write_file(broken, "{\"brackets\": []}");
    CHECK_THROWS_WITH_AS(load_lie_algebra(broken), doctest::Contains("dim"), ValidationError);

    // a structurally sound file with a Jacobi violation is refused by the
    // algebra constructor, and the loader keeps the path in the message
    testutil::write_file(broken,
                         "{\"dim\": 4, \"brackets\": [[0, 1, 2, 1], [0, 2, 3, 1], "
                         "[1, 2, 0, 1], [0, 3, 1, 1]]}");
    CHECK_THROWS_WITH_AS(load_lie_algebra(broken), doctest::Contains(broken.c_str()), ValidationError);

    CHECK_THROWS_AS(load_lie_algebra(tmp.file("absent.json")), ValidationError);
}

TEST_CASE("quadratic form loader: bundled showcase form and symmetric completion") {
    const auto file = load_quadratic_form("data/form-sig32.json");
    CHECK(file.field == "Q(sqrt2)");
    REQUIRE(file.sqrt2.has_value());
    REQUIRE(!file.cbrt2.has_value());
    const auto& phi = *file.sqrt2;
    REQUIRE(phi.n() == 5);
    for (std::size_t i = 0; i < 5; ++i) {
        const QuadElement expect =
            i < 3 ? QuadElement(1) : QuadElement(Rational(0), Rational(-1));
        CHECK(phi.matrix()(i, i) == expect);
        for (std::size_t j = 0; j < 5; ++j)
            if (i != j) CHECK(phi.matrix()(i, j).is_zero());
    }

    CHECK(load_quadratic_form("data/form-isotropic.json").sqrt2.has_value());
    CHECK(load_quadratic_form("data/form-definite-rational.json").sqrt2.has_value());

    testutil::TempDir tmp("io-form");
    const std::string path = tmp.file("form.json");

    // one triangle is enough; the mirrored cell is implied
    testutil::write_file(path,
                         "{\"field\": \"Q(sqrt2)\", \"n\": 2, \"entries\": ["
                         "[0, 0, [\"1\", \"0\"]], [1, 1, [\"1\", \"0\"]], "
                         "[0, 1, [\"0\", \"1\"]]]}");
    const auto completed = load_quadratic_form(path);
    REQUIRE(completed.sqrt2.has_value());
    CHECK(completed.sqrt2->matrix()(1, 0) == QuadElement::sqrt2());

    // restating the mirror cell with a different value is a conflict
    testutil::write_file(path,
                         "{\"field\": \"Q(sqrt2)\", \"n\": 2, \"entries\": ["
                         "[0, 0, [\"1\", \"0\"]], [1, 1, [\"1\", \"0\"]], "
                         "[0, 1, [\"0\", \"1\"]], [1, 0, [\"2\", \"0\"]]]}");
    CHECK_THROWS_WITH_AS(load_quadratic_form(path),
                         doctest::Contains("conflicts with an earlier entry"), ValidationError);

    testutil::write_file(path, "{\"field\": \"Q(sqrt5)\", \"n\": 1, \"entries\": []}");
    CHECK_THROWS_WITH_AS(load_quadratic_form(path), doctest::Contains("unknown field tag"),
                         ValidationError);

    testutil::write_file(path,
                         "{\"field\": \"Q(sqrt2)\", \"n\": 2, \"entries\": ["
                         "[0, 0, [\"1\"]]]}");
    CHECK_THROWS_WITH_AS(load_quadratic_form(path),
                         doctest::Contains("2 coefficient components"), ValidationError);

    // degenerate matrix: caught by the form constructor, path preserved
    testutil::write_file(path, "{\"field\": \"Q(sqrt2)\", \"n\": 2, \"entries\": []}");
    CHECK_THROWS_WITH_AS(load_quadratic_form(path), doctest::Contains(path.c_str()), ValidationError);
}

TEST_CASE("presentation and representation loaders agree with their validators") {
    const auto f2 = load_presentation("data/presentation-f2.json");
    CHECK(f2.generators == std::vector<std::string>{"a", "b"});
    CHECK(f2.relators.empty());

    const auto dihedral = load_presentation("data/presentation-dihedral.json");
    CHECK(dihedral.relators.size() == 2);

    const auto quarter = load_representation("data/rep-f2-quarter.json", f2);
    CHECK(quarter.dimension == 3);
    CHECK(quarter.is_exact());
    REQUIRE(quarter.exact_images.size() == 2);
    CHECK(quarter.exact_images[0](1, 0) == Rational(1));

    const auto rotation = load_representation("data/rep-free-rotation.json",
                                              load_presentation("data/presentation-free.json"));
    CHECK(!rotation.is_exact());
    REQUIRE(rotation.float_images.size() == 1);

    testutil::TempDir tmp("io-rep");
    const std::string path = tmp.file("rep.json");

    testutil::write_file(path,
                         "{\"dimension\": 1, \"images\": {\"a\": [[\"1\"]], \"b\": [[1.0]]}}");
    CHECK_THROWS_WITH_AS(load_representation(path, f2),
                         doctest::Contains("mixed exact and float"), ValidationError);

    testutil::write_file(path, "{\"dimension\": 1, \"images\": {\"a\": [[\"1\"]]}}");
    CHECK_THROWS_WITH_AS(load_representation(path, f2),
                         doctest::Contains("missing image for generator 'b'"), ValidationError);

    testutil::write_file(path,
                         "{\"dimension\": 1, \"images\": {\"a\": [[\"1\"]], \"b\": [[\"1\"]], "
                         "\"c\": [[\"1\"]]}}");
    CHECK_THROWS_WITH_AS(load_representation(path, f2),
                         doctest::Contains("undeclared generator 'c'"), ValidationError);

    // relator-violating image: validate_representation fires inside the loader
    testutil::write_file(path, "{\"dimension\": 1, \"images\": {\"a\": [[\"2\"]], "
                               "\"b\": [[\"1\"]]}}");
    CHECK_THROWS_AS(load_representation(path, dihedral), ValidationError);

    const auto action = load_finite_action("data/action-two-orbits.json");
    CHECK(action.generators.size() == 2);
    CHECK(folrig::suspension::orbits(action).orbits.size() == 2);
}

TEST_CASE("float matrix bundles reject shape defects") {
    const auto mats = load_float_matrices("data/matrices-so3.json");
    REQUIRE(!mats.empty());
    for (const auto& m : mats) {
        CHECK(m.rows() == 3);
        CHECK((m.transpose() * m - Eigen::MatrixXd::Identity(3, 3)).cwiseAbs().maxCoeff() <
              1e-9);
    }

    testutil::TempDir tmp("io-float");
    const std::string path = tmp.file("mats.json");
    testutil::write_file(path, "{\"n\": 2, \"matrices\": [[[1, 0], [0]]]}");
    CHECK_THROWS_WITH_AS(load_float_matrices(path), doctest::Contains("matrices[0]"),
                         ValidationError);
    testutil::write_file(path, "{\"n\": 2, \"matrices\": []}");
    CHECK_THROWS_AS(load_float_matrices(path), ValidationError);
    testutil::write_file(path, "{\"n\": 0, \"matrices\": [[[ ]]]}");
    CHECK_THROWS_AS(load_float_matrices(path), ValidationError);
}

TEST_CASE("word ball cache: round trip, parameter binding, integrity") {
    Eigen::MatrixXd r(2, 2);
    const double theta = 0.7;
    r << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
    const std::vector<Eigen::MatrixXd> gens = {r};
    const auto ball = folrig::dynamics::enumerate_ball(gens, 4, 1e-9);

    testutil::TempDir tmp("io-cache");
    const std::string path = tmp.file("ball.json");
    save_word_ball(path, ball);

    const auto loaded = load_word_ball(path, gens, 4, 1e-9);
    REQUIRE(loaded.has_value());
    CHECK(loaded->closed == ball.closed);
    CHECK(loaded->radius == ball.radius);
    REQUIRE(loaded->elements.size() == ball.elements.size());
    for (std::size_t i = 0; i < ball.elements.size(); ++i) {
        CHECK(loaded->elements[i].parent == ball.elements[i].parent);
        CHECK(loaded->elements[i].letter == ball.elements[i].letter);
        CHECK(loaded->elements[i].length == ball.elements[i].length);
        // bitwise: the cache must not perturb matrices through text
        CHECK((loaded->elements[i].matrix - ball.elements[i].matrix).cwiseAbs().maxCoeff() ==
              0.0);
    }
    REQUIRE(loaded->generators.size() == ball.generators.size());
    for (std::size_t i = 0; i < ball.generators.size(); ++i)
        CHECK((loaded->generators[i] - ball.generators[i]).cwiseAbs().maxCoeff() == 0.0);

    // the cache only answers for the exact parameters it was built with
    CHECK(!load_word_ball(path, gens, 5, 1e-9).has_value());
    CHECK(!load_word_ball(path, gens, 4, 1e-8).has_value());
    Eigen::MatrixXd other = Eigen::MatrixXd::Identity(2, 2);
    CHECK(!load_word_ball(path, {other}, 4, 1e-9).has_value());
    CHECK(!load_word_ball(tmp.file("missing.json"), gens, 4, 1e-9).has_value());

    // flip one character of the integrity tag: the file is rejected, not trusted
    std::string text = testutil::read_file(path);
    const auto pos = text.find("\"integrity\":\"");
    REQUIRE(pos != std::string::npos);
    const auto digit = pos + std::string("\"integrity\":\"").size();
    text[digit] = text[digit] == '0' ? '1' : '0';
    testutil::write_file(path, text);
    CHECK(!load_word_ball(path, gens, 4, 1e-9).has_value());

    // an undamaged resave reproduces the original bytes
    const std::string again = tmp.file("ball2.json");
    save_word_ball(again, ball);
    const std::string copy = tmp.file("ball3.json");
    const auto reloaded = load_word_ball(again, gens, 4, 1e-9);
    REQUIRE(reloaded.has_value());
    save_word_ball(copy, *reloaded);
    CHECK(testutil::read_file(again) == testutil::read_file(copy));
}

TEST_CASE("fingerprints follow the reference FNV-1a constants") {
    CHECK(fnv1a64_hex("") == "cbf29ce484222325");
    for (const std::string s : {std::string("a"), std::string("folrig"),
                                std::string("hello world"), std::string(1, '\0')}) {
        CHECK(fnv1a64(s) == fnv_reference(s));
    }
    CHECK(fnv1a64_hex("a") != fnv1a64_hex("b"));

    testutil::TempDir tmp("io-hash");
    const std::string path = tmp.file("probe.bin");
    testutil::write_file(path, std::string("abc\n\x01", 5));
    CHECK(hash_file(path) == fnv1a64_hex(std::string("abc\n\x01", 5)));
    CHECK_THROWS_AS(hash_file(tmp.file("nope")), ValidationError);
}

TEST_CASE("analytical reports are byte-stable across recomputation") {
    Eigen::MatrixXd r(2, 2);
    r << 0, -1, 1, 0;
    const auto ball_a = folrig::dynamics::enumerate_ball({r}, 3, 1e-9);
    const auto ball_b = folrig::dynamics::enumerate_ball({r}, 3, 1e-9);
    const auto profile_a = folrig::dynamics::covering_profile(ball_a, 40, 7);
    const auto profile_b = folrig::dynamics::covering_profile(ball_b, 40, 7);
    CHECK(density_json(profile_a) == density_json(profile_b));
    CHECK(density_csv(profile_a) == density_csv(profile_b));
    CHECK(density_json(profile_a).back() == '\n');

    const auto coh_a = folrig::liealg::ce_cohomology(folrig::liealg::special_orthogonal(3), 1);
    const auto coh_b = folrig::liealg::ce_cohomology(folrig::liealg::special_orthogonal(3), 1);
    CHECK(cohomology_json({coh_a}) == cohomology_json({coh_b}));

    RunManifest manifest;
    manifest.subcommand = "dynamics";
    manifest.tool_version = "0.1.0";
    manifest.seed = 42;
    manifest.options = {{"radius", "3"}};
    manifest.input_hashes = {{"data/so3.json", hash_file("data/so3.json")}};
    manifest.wall_seconds = 1.25;
    CHECK(manifest_json(manifest) == manifest_json(manifest));
    CHECK(manifest_json(manifest).find("dynamics") != std::string::npos);
}
