#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <gmpxx.h>

#include <cmath>
#include <random>
#include <vector>

#include "folrig/errors.hpp"
#include "folrig/exactnum/cubic.hpp"
#include "folrig/exactnum/embedding.hpp"
#include "folrig/exactnum/matrix.hpp"
#include "folrig/exactnum/quadratic.hpp"
#include "folrig/exactnum/rational.hpp"
#include "oracles/rank_oracle.hpp"
#include "test_util.hpp"

using folrig::ValidationError;
using folrig::exactnum::CubicElement;
using folrig::exactnum::ExactMatrix;
using folrig::exactnum::QuadElement;
using folrig::exactnum::Rational;

namespace {

Rational rnd_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-40, 40);
    std::uniform_int_distribution<long> den(1, 12);
    return Rational(num(rng), den(rng));
}

ExactMatrix<Rational> rnd_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    ExactMatrix<Rational> m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rnd_rational(rng);
    return m;
}

}  // namespace

TEST_CASE("rational literals round-trip and reject junk") {
    CHECK(Rational::from_string("3").to_string() == "3");
    CHECK(Rational::from_string("-7/2").to_string() == "-7/2");
    CHECK(Rational::from_string("4/6").to_string() == "2/3");  // canonicalized
    CHECK(Rational::from_string("+5").to_string() == "5");
    CHECK(Rational::from_string("0/9").is_zero());

    CHECK_THROWS_AS(Rational::from_string("1.5"), ValidationError);
    CHECK_THROWS_AS(Rational::from_string("oops"), ValidationError);
    CHECK_THROWS_AS(Rational::from_string(""), ValidationError);
    CHECK_THROWS_AS(Rational::from_string("3/0"), ValidationError);
    CHECK_THROWS_AS(Rational(1, 0), ValidationError);
}

TEST_CASE("rational arithmetic agrees with raw GMP") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> num(-50, 50);
    std::uniform_int_distribution<long> den(1, 9);
    for (int t = 0; t < 200; ++t) {
        const long an = num(rng), ad = den(rng), bn = num(rng), bd = den(rng);
        const Rational a(an, ad), b(bn, bd);
        mpq_class ga(an, ad), gb(bn, bd);
        ga.canonicalize();
        gb.canonicalize();
        CHECK((a + b).to_string() == mpq_class(ga + gb).get_str());
        CHECK((a - b).to_string() == mpq_class(ga - gb).get_str());
        CHECK((a * b).to_string() == mpq_class(ga * gb).get_str());
        if (!b.is_zero()) {
            mpq_class q = ga / gb;
            q.canonicalize();
            CHECK((a / b).to_string() == q.get_str());
        }
        CHECK(a.sign() == sgn(ga));
        CHECK((a < b) == (ga < gb));
        CHECK(a.abs().sign() >= 0);
    }
    CHECK_THROWS_AS(Rational(1) / Rational(0), ValidationError);
}

TEST_CASE("quadratic field arithmetic matches the symbolic expansion") {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 150; ++t) {
        const Rational a = rnd_rational(rng), b = rnd_rational(rng);
        const Rational c = rnd_rational(rng), d = rnd_rational(rng);
        const QuadElement x(a, b), y(c, d);

        // (a + b s)(c + d s) = (ac + 2bd) + (ad + bc) s with s^2 = 2
        const QuadElement prod = x * y;
        CHECK(prod.a() == a * c + Rational(2) * b * d);
        CHECK(prod.b() == a * d + b * c);

        // conjugation is a ring homomorphism
        CHECK((x * y).conjugate() == x.conjugate() * y.conjugate());
        CHECK((x + y).conjugate() == x.conjugate() + y.conjugate());

        // norm is multiplicative and rational
        CHECK(prod.norm() == x.norm() * y.norm());

        if (!y.is_zero()) {
            const QuadElement q = x / y;
            CHECK(q * y == x);
        }
    }
}

TEST_CASE("quadratic sign decisions match high-precision evaluation") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 200; ++t) {
        const QuadElement x(rnd_rational(rng), rnd_rational(rng));
        const double approx = x.a().to_double() + std::sqrt(2.0) * x.b().to_double();
        const int s = x.sign();
        if (std::abs(approx) > 1e-9) CHECK(s == (approx > 0 ? 1 : -1));
        CHECK((-x).sign() == -s);
        CHECK((s == 0) == x.is_zero());
    }
    // values squeezed close to zero still resolve exactly: 665857/470832 is a
    // continued-fraction convergent of sqrt2, off by about 1e-12
    const QuadElement tight(Rational(-665857, 470832), Rational(1));
    CHECK(tight.sign() == -1);
    CHECK(tight.conjugate().sign() == -1);
}

TEST_CASE("quadratic embeddings send sqrt2 to the two real roots") {
    using folrig::exactnum::quad_embed;
    const QuadElement x(Rational(3), Rational(-2));  // 3 - 2 sqrt2
    const long double r1 = quad_embed(x, 1).real_part;
    const long double r2 = quad_embed(x, 2).real_part;
    CHECK(std::abs(static_cast<double>(r1) - (3 - 2 * std::sqrt(2.0))) < 1e-15);
    CHECK(std::abs(static_cast<double>(r2) - (3 + 2 * std::sqrt(2.0))) < 1e-15);
    CHECK_THROWS_AS(quad_embed(x, 3), ValidationError);
    CHECK_THROWS_AS(quad_embed(x, 0), ValidationError);
}

TEST_CASE("cubic field arithmetic and the real-root sign") {
    std::mt19937_64 rng(14);
    const double t = std::cbrt(2.0);
    for (int k = 0; k < 150; ++k) {
        const CubicElement x(rnd_rational(rng), rnd_rational(rng), rnd_rational(rng));
        const CubicElement y(rnd_rational(rng), rnd_rational(rng), rnd_rational(rng));
        const auto value = [&](const CubicElement& z) {
            return z.a().to_double() + z.b().to_double() * t + z.c().to_double() * t * t;
        };
        // multiplication respects the numeric embedding
        CHECK(value(x * y) == doctest::Approx(value(x) * value(y)).epsilon(1e-9));
        const double v = value(x);
        if (std::abs(v) > 1e-9) CHECK(folrig::exactnum::sign_at_real_root(x) == (v > 0 ? 1 : -1));
        if (!y.is_zero()) CHECK((x / y) * y == x);
    }
    CHECK(folrig::exactnum::sign_at_real_root(CubicElement(Rational(0), Rational(0), Rational(0))) == 0);
    // t^3 = 2: (0,1,0)^3 evaluates to the rational 2
    const CubicElement root(Rational(0), Rational(1), Rational(0));
    const CubicElement cubed = root * root * root;
    CHECK(cubed.a() == Rational(2));
    CHECK(cubed.b().is_zero());
    CHECK(cubed.c().is_zero());
}

TEST_CASE("cubic embeddings: one real, one conjugate complex pair") {
    using folrig::exactnum::cubic_embed;
    const CubicElement x(Rational(1), Rational(1), Rational(0));  // 1 + t
    const auto e1 = cubic_embed(x, 1);
    const auto e2 = cubic_embed(x, 2);
    const auto e3 = cubic_embed(x, 3);
    CHECK(e1.is_real());
    CHECK(std::abs(static_cast<double>(e1.real_part) - (1 + std::cbrt(2.0))) < 1e-15);
    CHECK(!e2.is_real());
    CHECK(static_cast<double>(e2.real_part) == doctest::Approx(static_cast<double>(e3.real_part)));
    CHECK(static_cast<double>(e2.imag_part) == doctest::Approx(-static_cast<double>(e3.imag_part)));
}

TEST_CASE("exact determinant: hand values, multiplicativity, singularity") {
    ExactMatrix<Rational> m(3, 3);
    // | 1 2 3 ; 0 1 4 ; 5 6 0 | = 1*(0-24) - 2*(0-20) + 3*(0-5) = 1
    const long rows[3][3] = {{1, 2, 3}, {0, 1, 4}, {5, 6, 0}};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) m(i, j) = Rational(rows[i][j]);
    CHECK(exact_det(m) == Rational(1));

    std::mt19937_64 rng(15);
    for (int t = 0; t < 30; ++t) {
        const auto a = rnd_matrix(rng, 4, 4);
        const auto b = rnd_matrix(rng, 4, 4);
        CHECK(exact_det(a * b) == exact_det(a) * exact_det(b));
        CHECK(exact_det(a.transpose()) == exact_det(a));
    }

    // duplicate a row: determinant must be exactly zero and inversion must throw
    ExactMatrix<Rational> sing = rnd_matrix(rng, 3, 3);
    for (std::size_t j = 0; j < 3; ++j) sing(2, j) = sing(0, j);
    CHECK(exact_det(sing).is_zero());
    CHECK_THROWS_AS(exact_inverse(sing), ValidationError);
}

TEST_CASE("exact inverse and solve") {
    std::mt19937_64 rng(16);
    for (int t = 0; t < 25; ++t) {
        auto a = rnd_matrix(rng, 4, 4);
        if (exact_det(a).is_zero()) continue;
        const auto inv = exact_inverse(a);
        CHECK(a * inv == ExactMatrix<Rational>::identity(4));
        CHECK(inv * a == ExactMatrix<Rational>::identity(4));

        std::vector<Rational> b(4);
        for (auto& x : b) x = rnd_rational(rng);
        const auto x = exact_solve(a, b);
        REQUIRE(x.has_value());
        const auto ax = a.apply(*x);
        for (std::size_t i = 0; i < 4; ++i) CHECK(ax[i] == b[i]);
    }
    // inconsistent system: x + y = 0 and x + y = 1
    ExactMatrix<Rational> flat(2, 2);
    flat(0, 0) = flat(0, 1) = flat(1, 0) = flat(1, 1) = Rational(1);
    CHECK(!exact_solve(flat, {Rational(0), Rational(1)}).has_value());
}

TEST_CASE("exact rank and kernel agree with the float oracle") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 40; ++t) {
        std::uniform_int_distribution<std::size_t> dim(1, 6);
        const std::size_t rows = dim(rng), cols = dim(rng);
        auto m = rnd_matrix(rng, rows, cols);
        // plant rank deficiencies half the time
        if (t % 2 == 0 && rows >= 2)
            for (std::size_t j = 0; j < cols; ++j) m(rows - 1, j) = m(0, j) + m(0, j);

        const std::size_t r = exact_rank(m);
        CHECK(r == oracle::float_rank(testutil::to_float(m)));

        const auto kernel = exact_kernel(m);
        CHECK(kernel.size() == cols - r);
        for (const auto& v : kernel) {
            const auto mv = m.apply(v);
            for (const auto& entry : mv) CHECK(entry.is_zero());
        }
    }
}

TEST_CASE("reduced echelon form is a projection with unit pivots") {
    std::mt19937_64 rng(18);
    const auto m = rnd_matrix(rng, 4, 6);
    const auto e = exact_rref(m);
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) {
        CHECK(e.mat(r, e.pivot_cols[r]).is_one());
        for (std::size_t i = 0; i < e.mat.rows(); ++i)
            if (i != r) CHECK(e.mat(i, e.pivot_cols[r]).is_zero());
    }
    // reducing again changes nothing
    const auto e2 = exact_rref(e.mat);
    CHECK(e2.mat == e.mat);
    CHECK(e2.pivot_cols == e.pivot_cols);
}

TEST_CASE("elimination works verbatim over the quadratic field") {
    // det(I + sqrt2 J) on a 2x2 with J the flip: (1)(1) - (s)(s) = -1
    ExactMatrix<QuadElement> m(2, 2);
    m(0, 0) = QuadElement(1);
    m(1, 1) = QuadElement(1);
    m(0, 1) = QuadElement::sqrt2();
    m(1, 0) = QuadElement::sqrt2();
    CHECK(exact_det(m) == QuadElement(-1));
    const auto inv = exact_inverse(m);
    CHECK(m * inv == ExactMatrix<QuadElement>::identity(2));
    CHECK(exact_rank(m) == 2);
}
