#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lucastrig/lucas_eval.hpp"

using namespace lucastrig;

TEST_CASE("Jacobsthal golden rows") {
    LucasEvaluator ev({1, -2});
    const long u_row[] = {0, 1, 1, 3, 5, 11, 21};
    const long v_row[] = {2, 1, 5, 7, 17, 31, 65};
    for (long n = 0; n <= 6; ++n) {
        CHECK(ev.value(SeqKind::U, n) == u_row[n]);
        CHECK(ev.value(SeqKind::V, n) == v_row[n]);
    }
    // V_n^2 - 9 U_n^2 equals 4 Q^n: 4, -8, 16, -32, 64, -128, 256
    const long fundamental_row[] = {4, -8, 16, -32, 64, -128, 256};
    for (long n = 0; n <= 6; ++n) {
        Rational lhs = ev.value(SeqKind::V, n) * ev.value(SeqKind::V, n) -
                       9 * ev.value(SeqKind::U, n) * ev.value(SeqKind::U, n);
        CHECK(lhs == fundamental_row[n]);
    }
}

TEST_CASE("initial conditions") {
    LucasEvaluator fib({1, -1});
    CHECK(fib.value(SeqKind::U, 0) == 0);
    CHECK(fib.value(SeqKind::U, 1) == 1);
    CHECK(fib.value(SeqKind::V, 0) == 2);
    CHECK(fib.value(SeqKind::V, 1) == 1);
}

TEST_CASE("negative Fibonacci index against the sign-law oracle") {
    LucasEvaluator fib({1, -1});
    // oracle: F_{-n} = -(-1)^n F_n, computed from the positive side
    for (long n = 1; n <= 10; ++n) {
        Rational expected = fib.value(SeqKind::U, n);
        if (n % 2 == 0) expected = -expected;
        CHECK(fib.value(SeqKind::U, -n) == expected);
    }
    CHECK(fib.value(SeqKind::U, -4) == -3);
}

TEST_CASE("power family against a direct recurrence oracle") {
    LucasEvaluator ev({3, 2});
    // independent forward recurrence, no memo
    long u0 = 0, u1 = 1, v0 = 2, v1 = 3;
    for (long n = 2; n <= 12; ++n) {
        long u2 = 3 * u1 - 2 * u0;
        long v2 = 3 * v1 - 2 * v0;
        u0 = u1; u1 = u2;
        v0 = v1; v1 = v2;
        CHECK(ev.value(SeqKind::U, n) == u1);
        CHECK(ev.value(SeqKind::V, n) == v1);
    }
    CHECK(ev.value(SeqKind::U, 5) == 31);
    CHECK(ev.value(SeqKind::V, 5) == 33);
    // U_n(3,2) = 2^n - 1 and V_n(3,2) = 2^n + 1
    for (long n = 0; n <= 12; ++n) {
        CHECK(ev.value(SeqKind::U, n) == (1L << n) - 1);
        CHECK(ev.value(SeqKind::V, n) == (1L << n) + 1);
    }
}

TEST_CASE("recurrence holds across the whole range, both kinds") {
    for (const auto& params : default_params_grid()) {
        LucasEvaluator ev(params);
        for (SeqKind kind : {SeqKind::U, SeqKind::V}) {
            for (long n = -20; n <= 20; ++n) {
                Rational lhs = ev.value(kind, n);
                Rational rhs = params.p * ev.value(kind, n - 1) -
                               params.q * ev.value(kind, n - 2);
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("negative-index laws, exact") {
    for (const auto& params : default_params_grid()) {
        LucasEvaluator ev(params);
        Rational q(params.q);
        for (long n = -15; n <= 15; ++n) {
            Rational qn = pow_rational(q, -n);
            CHECK(ev.value(SeqKind::U, -n) == -qn * ev.value(SeqKind::U, n));
            CHECK(ev.value(SeqKind::V, -n) == qn * ev.value(SeqKind::V, n));
        }
    }
}

TEST_CASE("fundamental identity, exact, all families") {
    for (const auto& params : default_params_grid()) {
        LucasEvaluator ev(params);
        Rational q(params.q), d(params.d());
        for (long n = -15; n <= 15; ++n) {
            Rational u = ev.value(SeqKind::U, n);
            Rational v = ev.value(SeqKind::V, n);
            CHECK(v * v - d * u * u == 4 * pow_rational(q, n));
        }
    }
}

TEST_CASE("index addition, exact, all families") {
    for (const auto& params : default_params_grid()) {
        LucasEvaluator ev(params);
        Rational d(params.d());
        for (long m = -8; m <= 8; ++m) {
            for (long n = -8; n <= 8; ++n) {
                Rational um = ev.value(SeqKind::U, m), un = ev.value(SeqKind::U, n);
                Rational vm = ev.value(SeqKind::V, m), vn = ev.value(SeqKind::V, n);
                CHECK(2 * ev.value(SeqKind::U, m + n) == um * vn + un * vm);
                CHECK(2 * ev.value(SeqKind::V, m + n) == vm * vn + d * um * un);
            }
        }
    }
}

TEST_CASE("denominators of negative-index values divide Q^|n|") {
    LucasEvaluator ev({3, 2});
    for (long n = 1; n <= 10; ++n) {
        Rational value = ev.value(SeqKind::U, -n);
        Integer den = value.get_den();
        Integer qn;
        mpz_ui_pow_ui(qn.get_mpz_t(), 2, static_cast<unsigned long>(n));
        CHECK(mpz_divisible_p(qn.get_mpz_t(), den.get_mpz_t()));
    }
}
