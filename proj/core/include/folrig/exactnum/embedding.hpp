#ifndef FOLRIG_EXACTNUM_EMBEDDING_HPP
#define FOLRIG_EXACTNUM_EMBEDDING_HPP

#include "folrig/exactnum/cubic.hpp"
#include "folrig/exactnum/quadratic.hpp"
#include "folrig/exactnum/rational.hpp"

namespace folrig::exactnum {

// Image of a field element under one archimedean embedding.  Carried as
// long double (x86 extended precision, 64-bit mantissa) but *computed* at
// whatever working precision the coefficient sizes demand, so the stored
// value is correct to the carrier's last bit even when the exact value is a
// tiny difference of enormous terms.
struct EmbeddingImage {
    long double real_part = 0.0L;
    long double imag_part = 0.0L;
    int embedding_id = 1;

    bool is_real() const { return imag_part == 0.0L; }
};

// Q(sqrt2): embedding 1 sends sqrt2 to +1.414..., embedding 2 to -1.414...
// Both are real.  Invalid ids throw.
EmbeddingImage quad_embed(const QuadElement& x, int embedding_id);

// Q(cbrt2): embedding 1 is real (t = 2^(1/3)); embedding 2 sends t to
// 2^(1/3) * e^(2*pi*i/3); embedding 3 is the complex conjugate of 2.
EmbeddingImage cubic_embed(const CubicElement& x, int embedding_id);

// Correctly rounded long double image of an exact rational.
long double rational_to_long_double(const Rational& x);

// Convenience: identity-embedding value as double (used by float pipelines).
inline double quad_to_double(const QuadElement& x, int embedding_id = 1) {
    return static_cast<double>(quad_embed(x, embedding_id).real_part);
}

}  // namespace folrig::exactnum

#endif
