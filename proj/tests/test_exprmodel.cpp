#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lucastrig/equation.hpp"
#include "lucastrig/parse.hpp"
#include "lucastrig/verify.hpp"
#include "test_util.hpp"

using namespace lucastrig;
using lucastrig::testing::var;

TEST_CASE("products of sums distribute and like terms merge") {
    TrigEquation eq = parse_trig_identity("sin(a)*(sin(a)+cos(a)) - sin(a)^2 = 0");
    TrigEquation zf = zero_form(eq);
    REQUIRE(zf.lhs.size() == 1);
    CHECK(zf.lhs[0].factors.size() == 2);
    CHECK(zf.lhs[0].coeff.ratio() == 1);

    TrigEquation expect = zero_form(parse_trig_identity("sin(a)*cos(a) = 0"));
    CHECK(zf == expect);
}

TEST_CASE("commuted products cancel to the trivial identity") {
    SeqEquation eq = parse_seq_identity("U(n)*V(n) - V(n)*U(n) = 0");
    CHECK(zero_form(eq).lhs.empty());
}

TEST_CASE("square of a binomial") {
    TrigEquation eq = parse_trig_identity(
        "(sin(a)+cos(a))^2 = sin(a)^2 + 2*sin(a)*cos(a) + cos(a)^2");
    CHECK(zero_form(eq).lhs.empty());
    // numeric oracle: both sides agree at sampled angles
    VerificationReport rep = verify_trig_identity(eq, 10, 1e-12);
    CHECK(rep.pass);
}

TEST_CASE("zero form is idempotent") {
    SeqEquation eq = parse_seq_identity("V(n)^2 - D*U(n)^2 = 4*Q^n");
    SeqEquation zf = zero_form(eq);
    CHECK(zero_form(zf) == zf);
}

TEST_CASE("powers merge on equal factors") {
    TrigEquation eq = parse_trig_identity("sin(a)*sin(a)*sin(a) = sin(a)^3");
    CHECK(zero_form(eq).lhs.empty());
}

TEST_CASE("equivalence up to scalar: rescaling") {
    SeqEquation a = parse_seq_identity("U(2*n) - U(n)*V(n) = 0");
    SeqEquation b = parse_seq_identity("2*U(2*n) - 2*U(n)*V(n) = 0");
    auto w = equivalent_up_to_scalar(a, ConstraintSet{}, b, ConstraintSet{});
    REQUIRE(w.has_value());
    CHECK(w->ratio() == Rational(1, 2));
}

TEST_CASE("equivalence up to scalar: swapped sides") {
    SeqEquation a = parse_seq_identity("V(n)^2 - D*U(n)^2 = 4*Q^n");
    SeqEquation b = parse_seq_identity("4*Q^n = V(n)^2 - D*U(n)^2");
    auto w = equivalent_up_to_scalar(a, ConstraintSet{}, b, ConstraintSet{});
    REQUIRE(w.has_value());
    CHECK(w->ratio() == -1);
}

TEST_CASE("equivalence up to scalar: constant offset breaks it") {
    SeqEquation a = parse_seq_identity("U(2*n) = U(n)*V(n)");
    SeqEquation b = parse_seq_identity("U(2*n) = U(n)*V(n) + 1");
    CHECK(!equivalent_up_to_scalar(a, ConstraintSet{}, b, ConstraintSet{}));
}

TEST_CASE("equivalence requires equal constraint sets") {
    SeqEquation a = parse_seq_identity("U(2*n) = U(n)*V(n)");
    ConstraintSet cs;
    cs.add_parity(var("n"));
    CHECK(!equivalent_up_to_scalar(a, cs, a, ConstraintSet{}));
    auto w = equivalent_up_to_scalar(a, cs, a, cs);
    REQUIRE(w.has_value());
    CHECK(*w == Coeff::one());
}

TEST_CASE("equivalence witness may carry Q and D powers") {
    SeqEquation a = parse_seq_identity("Q^2*U(n) = Q^2*V(n)");
    SeqEquation b = parse_seq_identity("U(n) = V(n)");
    auto w = equivalent_up_to_scalar(a, ConstraintSet{}, b, ConstraintSet{});
    REQUIRE(w.has_value());
    CHECK(w->exp_sqrtQ() == LinForm(4));

    // but not an index-dependent factor
    SeqEquation c = parse_seq_identity("Q^n*U(n) = Q^n*V(n)");
    CHECK(!equivalent_up_to_scalar(c, ConstraintSet{}, b, ConstraintSet{}));
}

TEST_CASE("trivial identities are equivalent with witness one") {
    SeqEquation a = parse_seq_identity("U(n) = U(n)");
    SeqEquation b = parse_seq_identity("2*V(m) = 2*V(m)");
    auto w = equivalent_up_to_scalar(a, ConstraintSet{}, b, ConstraintSet{});
    REQUIRE(w.has_value());
    CHECK(*w == Coeff::one());
}

TEST_CASE("same factors with different symbolic coefficients stay separate") {
    SeqEquation eq = parse_seq_identity("Q^n*U(m) + Q^m*U(m) = 0");
    SeqEquation zf = zero_form(eq);
    CHECK(zf.lhs.size() == 2);
}
