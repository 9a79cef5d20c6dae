#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace lucastrig {

// Exact arbitrary-precision rational. All arithmetic in the project is
// exact; doubles appear only in the floating trig verifier.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline bool is_even_integer(const Rational& r) {
    return is_integer(r) && mpz_even_p(r.get_num().get_mpz_t());
}

inline bool is_odd_integer(const Rational& r) {
    return is_integer(r) && mpz_odd_p(r.get_num().get_mpz_t());
}

// floor(r / 2) as an integer, exact for any rational r.
inline Integer floor_half(const Rational& r) {
    Integer q;
    Integer den2 = r.get_den() * 2;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), den2.get_mpz_t());
    return q;
}

// r^e for integer e (e may be negative; r must be nonzero then).
Rational pow_rational(const Rational& r, long e);

// Renders without spaces, e.g. "3", "-1/2".
std::string to_string(const Rational& r);

long to_long(const Integer& z);

}  // namespace lucastrig
