#include "folrig/exactnum/embedding.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cstddef>

namespace folrig::exactnum {
namespace {

// RAII wrapper for a single mpfr value at a given working precision.
class Real {
public:
    explicit Real(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
    ~Real() { mpfr_clear(v_); }
    Real(const Real&) = delete;
    Real& operator=(const Real&) = delete;
    mpfr_ptr get() { return v_; }

private:
    mpfr_t v_;
};

mpfr_prec_t operand_bits(const Rational& r) {
    return static_cast<mpfr_prec_t>(
        mpz_sizeinbase(r.numerator().get_mpz_t(), 2) +
        mpz_sizeinbase(r.denominator().get_mpz_t(), 2));
}

// Evaluates a + b*root + c*root^2 where root is an exact algebraic real
// given by fill_root, retrying at doubled precision until the result is
// known to at least 80 significant bits.  Exact zeros must be screened off
// by the caller: a nonzero value has some finite exponent, so the loop
// terminates once the working precision exceeds the cancellation depth.
template <typename FillRoot>
long double eval_poly_at_root(const Rational& a, const Rational& b, const Rational& c,
                              FillRoot fill_root) {
    const mpfr_prec_t base =
        std::max<mpfr_prec_t>({operand_bits(a), operand_bits(b), operand_bits(c), 64});
    for (mpfr_prec_t prec = base + 128;; prec *= 2) {
        Real root(prec), term(prec), acc(prec);
        fill_root(root.get(), prec);
        mpfr_set_q(acc.get(), a.raw().get_mpq_t(), MPFR_RNDN);
        mpfr_set_q(term.get(), b.raw().get_mpq_t(), MPFR_RNDN);
        mpfr_mul(term.get(), term.get(), root.get(), MPFR_RNDN);
        mpfr_add(acc.get(), acc.get(), term.get(), MPFR_RNDN);
        if (!c.is_zero()) {
            mpfr_sqr(term.get(), root.get(), MPFR_RNDN);
            Real cc(prec);
            mpfr_set_q(cc.get(), c.raw().get_mpq_t(), MPFR_RNDN);
            mpfr_mul(term.get(), term.get(), cc.get(), MPFR_RNDN);
            mpfr_add(acc.get(), acc.get(), term.get(), MPFR_RNDN);
        }
        if (mpfr_zero_p(acc.get())) continue;  // cancellation swallowed everything; retry wider
        // Rounding errors total a few ulps of the largest intermediate,
        // i.e. magnitude <= 2^(base_exp + 4 - prec) with base_exp bounding
        // the operand exponents.  Accept once the result clears that noise
        // floor by 80 bits.
        const mpfr_exp_t noise = static_cast<mpfr_exp_t>(base) + 4 - static_cast<mpfr_exp_t>(prec);
        if (mpfr_get_exp(acc.get()) > noise + 80) return mpfr_get_ld(acc.get(), MPFR_RNDN);
    }
}

void fill_sqrt2(mpfr_ptr out, mpfr_prec_t) { mpfr_sqrt_ui(out, 2, MPFR_RNDN); }
void fill_cbrt2(mpfr_ptr out, mpfr_prec_t) {
    mpfr_set_ui(out, 2, MPFR_RNDN);
    mpfr_cbrt(out, out, MPFR_RNDN);
}

}  // namespace

long double rational_to_long_double(const Rational& x) {
    if (x.is_zero()) return 0.0L;
    Real v(128);
    mpfr_set_q(v.get(), x.raw().get_mpq_t(), MPFR_RNDN);
    return mpfr_get_ld(v.get(), MPFR_RNDN);
}

EmbeddingImage quad_embed(const QuadElement& x, int embedding_id) {
    if (embedding_id != 1 && embedding_id != 2)
        throw ValidationError("Q(sqrt2) has embeddings 1 and 2, got id " +
                              std::to_string(embedding_id));
    EmbeddingImage img;
    img.embedding_id = embedding_id;
    if (x.is_zero()) return img;
    const Rational b = (embedding_id == 1) ? x.b() : -x.b();
    if (b.is_zero()) {
        img.real_part = rational_to_long_double(x.a());
        return img;
    }
    img.real_part = eval_poly_at_root(x.a(), b, Rational::zero(), fill_sqrt2);
    return img;
}

EmbeddingImage cubic_embed(const CubicElement& x, int embedding_id) {
    if (embedding_id < 1 || embedding_id > 3)
        throw ValidationError("Q(cbrt2) has embeddings 1..3, got id " +
                              std::to_string(embedding_id));
    EmbeddingImage img;
    img.embedding_id = embedding_id;
    if (x.is_zero()) return img;
    if (embedding_id == 1) {
        if (x.b().is_zero() && x.c().is_zero())
            img.real_part = rational_to_long_double(x.a());
        else
            img.real_part = eval_poly_at_root(x.a(), x.b(), x.c(), fill_cbrt2);
        return img;
    }
    // Embeddings 2 and 3 send t to t*w and t*w^2 with w = e^(2*pi*i/3),
    // so with u = b*t and v = c*t^2 (both real):
    //   real = a - u/2 - v/2,  imag = +/- (sqrt(3)/2) * (u - v).
    // Each combination is again of the "rational polynomial in cbrt2" shape
    // (up to the sqrt3 factor), so it gets the same precision treatment.
    const Rational half(1, 2);
    long double re;
    if (x.b().is_zero() && x.c().is_zero())
        re = rational_to_long_double(x.a());
    else
        re = eval_poly_at_root(x.a(), -half * x.b(), -half * x.c(), fill_cbrt2);
    long double im = 0.0L;
    // u - v = b*t - c*t^2 vanishes only when b = c = 0 (1, t, t^2 are
    // linearly independent over Q).
    if (!x.b().is_zero() || !x.c().is_zero()) {
        long double diff = eval_poly_at_root(Rational::zero(), x.b(), -x.c(), fill_cbrt2);
        Real s3(128);
        mpfr_sqrt_ui(s3.get(), 3, MPFR_RNDN);
        im = mpfr_get_ld(s3.get(), MPFR_RNDN) / 2.0L * diff;
    }
    img.real_part = re;
    img.imag_part = (embedding_id == 2) ? im : -im;
    return img;
}

}  // namespace folrig::exactnum
