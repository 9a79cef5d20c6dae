#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lucastrig/errors.hpp"
#include "lucastrig/parse.hpp"
#include "lucastrig/render.hpp"
#include "test_util.hpp"

using namespace lucastrig;
using lucastrig::testing::var;

TEST_CASE("angle addition parses into a two-term right side") {
    TrigEquation eq = parse_trig_identity("sin(a+b) = sin(a)*cos(b) + cos(a)*sin(b)");
    CHECK(eq.lhs.size() == 1);
    CHECK(eq.rhs.size() == 2);
    CHECK(eq.lhs[0].factors[0].arg == var("a") + var("b"));
}

TEST_CASE("pythagorean identity parses with squared factors") {
    TrigEquation eq = parse_trig_identity("sin(a)^2 + cos(a)^2 = 1");
    REQUIRE(eq.lhs.size() == 2);
    CHECK(eq.lhs[0].factors[0].power == 2);
    REQUIRE(eq.rhs.size() == 1);
    CHECK(eq.rhs[0].is_constant());
    CHECK(eq.rhs[0].coeff.ratio() == 1);
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse_trig_identity("sin(a"), ParseError);
    CHECK_THROWS_AS(parse_seq_identity("U(n] = 1"), ParseError);
    try {
        parse_trig_identity("sin(a");
    } catch (const ParseError& e) {
        CHECK(e.span().start == 5);
    }
}

TEST_CASE("unknown names are rejected by flavor") {
    CHECK_THROWS_AS(parse_trig_identity("sec(a) = 1"), UnknownFunction);
    CHECK_THROWS_AS(parse_trig_identity("U(n) = 1"), UnknownFunction);
    CHECK_THROWS_AS(parse_seq_identity("W(n) = 1"), UnknownSequence);
    CHECK_THROWS_AS(parse_seq_identity("sin(n) = 1"), UnknownSequence);
}

TEST_CASE("division outside rationals is rejected with a hint") {
    try {
        parse_trig_identity("sin(a)/2 = 1");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("cross-multiply") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_trig_identity("tan(x+y) = (tan(x)+tan(y))/(1 - tan(x)*tan(y))"),
                    ParseError);
}

TEST_CASE("unicode input is rejected with a hint") {
    try {
        parse_trig_identity("sin(\xce\xb1) = 0");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("non-ASCII") != std::string::npos);
    }
}

TEST_CASE("sequence aliases and symbols") {
    SeqEquation cassini = parse_seq_identity("F(n-1)*F(n+1) - F(n)^2 = (-1)^n");
    REQUIRE(cassini.lhs.size() == 2);
    CHECK(cassini.lhs[0].factors[0].kind == SeqKind::U);
    REQUIRE(cassini.rhs.size() == 1);
    CHECK(cassini.rhs[0].coeff.exp_neg1() == var("n"));

    SeqEquation row1 = parse_seq_identity("V(n)^2 - D*U(n)^2 = 4*Q^n");
    REQUIRE(row1.rhs.size() == 1);
    CHECK(row1.rhs[0].coeff.ratio() == 4);
    CHECK(row1.rhs[0].coeff.exp_sqrtQ() == var("n").scaled(Rational(2)));
}

TEST_CASE("negative call powers ask for cross-multiplication") {
    CHECK_THROWS_AS(parse_trig_identity("sin(a)^-1 = 1"), ParseError);
}

TEST_CASE("plain rendering golden strings") {
    SeqEquation eq = parse_seq_identity("U(2*n) = U(n)*V(n)");
    CHECK(render(zero_form(eq)) == "U(2*n) = U(n)*V(n)");

    SeqEquation trivial = parse_seq_identity("U(n) = U(n)");
    CHECK(render(zero_form(trivial)) == "0 = 0");

    SeqEquation row1 = parse_seq_identity("V(a)^2 - D*U(a)^2 = 4*Q^a");
    CHECK(render(zero_form(row1)) == "V(a)^2 - D*U(a)^2 = 4*Q^a");

    SeqEquation halves = parse_seq_identity(
        "U(m) + Q^((m-n)/2)*U(n) = U((m+n)/2)*V((m-n)/2)");
    CHECK(render(halves) == "U(m) + Q^((m-n)/2)*U(n) = U((m+n)/2)*V((m-n)/2)");
}

TEST_CASE("latex rendering golden strings") {
    RenderOptions latex{RenderFormat::Latex, false};
    SeqEquation row1 = parse_seq_identity("V(n)^2 - D*U(n)^2 = 4*Q^n");
    CHECK(render(zero_form(row1), latex) == "V_n^2 - D U_n^2 = 4Q^n");

    SeqEquation halves = parse_seq_identity("U(m) + Q^((m-n)/2)*U(n) = U((m+n)/2)*V((m-n)/2)");
    CHECK(render(halves, latex) ==
          "U_m + Q^{\\frac{m - n}{2}} U_n = U_{\\frac{m + n}{2}} V_{\\frac{m - n}{2}}");

    TrigEquation trig = parse_trig_identity("sin(2*n) = 2*sin(n)*cos(n)");
    CHECK(render(trig, latex) == "\\sin 2n = 2\\sin n \\cos n");
}

TEST_CASE("classic rendering uses F and L") {
    RenderOptions classic;
    classic.classic_names = true;
    SeqEquation eq = parse_seq_identity("F(2*n) = F(n)*L(n)");
    CHECK(render(zero_form(eq), classic) == "F(2*n) = F(n)*L(n)");
}

namespace {

struct Generator {
    std::mt19937 rng{20210907};

    long pick(long lo, long hi) {
        return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
    }

    LinForm random_linform(bool allow_halves) {
        static const char* names[] = {"a", "b", "m", "n"};
        LinForm out;
        int nvars = static_cast<int>(pick(1, 2));
        for (int i = 0; i < nvars; ++i) {
            Rational coeff(pick(-3, 3));
            if (coeff == 0) coeff = 1;
            if (allow_halves && pick(0, 3) == 0) coeff /= 2;
            out = out + LinForm::variable(names[pick(0, 3)], coeff);
        }
        if (pick(0, 2) == 0) out = out + LinForm(pick(-2, 2));
        if (out.is_zero()) out = LinForm::variable("n");
        return out;
    }

    Rational random_ratio() {
        Rational r(pick(-4, 4), pick(1, 3));
        r.canonicalize();
        return r == 0 ? Rational(1) : r;
    }

    TrigTerm random_trig_term() {
        TrigTerm t;
        t.coeff = Coeff(random_ratio());
        int nf = static_cast<int>(pick(0, 2));
        static const TrigKind kinds[] = {TrigKind::Sin, TrigKind::Cos, TrigKind::Tan,
                                         TrigKind::Sinh, TrigKind::Cosh};
        for (int i = 0; i < nf; ++i) {
            t.factors.push_back({kinds[pick(0, 4)], random_linform(true),
                                 static_cast<int>(pick(1, 3))});
        }
        t.canonicalize();
        return t;
    }

    SeqTerm random_seq_term() {
        SeqTerm t;
        LinForm qexp, neg1, dexp;
        if (pick(0, 1)) qexp = random_linform(false);  // displayed Q exponent
        if (pick(0, 2) == 0) neg1 = random_linform(false);
        if (pick(0, 2) == 0) dexp = LinForm(2 * pick(-1, 2));
        t.coeff = Coeff(random_ratio(), LinForm(), neg1, qexp.scaled(Rational(2)),
                        dexp);
        int nf = static_cast<int>(pick(0, 2));
        for (int i = 0; i < nf; ++i) {
            t.factors.push_back({pick(0, 1) ? SeqKind::U : SeqKind::V,
                                 random_linform(true), static_cast<int>(pick(1, 3))});
        }
        t.canonicalize();
        return t;
    }

    template <class Kind, class TermGen>
    Equation<Kind> random_equation(TermGen gen) {
        Equation<Kind> eq;
        int nl = static_cast<int>(pick(1, 3));
        int nr = static_cast<int>(pick(1, 3));
        for (int i = 0; i < nl; ++i) eq.lhs.push_back(gen());
        for (int i = 0; i < nr; ++i) eq.rhs.push_back(gen());
        return canonicalize_sides(std::move(eq));
    }
};

}  // namespace

TEST_CASE("parse-render fixpoint on generated equations") {
    Generator g;
    for (int i = 0; i < 500; ++i) {
        TrigEquation eq = g.random_equation<TrigKind>([&] { return g.random_trig_term(); });
        std::string text = render(eq);
        CAPTURE(text);
        TrigEquation back = parse_trig_identity(text);
        CHECK(back == eq);
    }
    for (int i = 0; i < 500; ++i) {
        SeqEquation eq = g.random_equation<SeqKind>([&] { return g.random_seq_term(); });
        std::string text = render(eq);
        CAPTURE(text);
        SeqEquation back = parse_seq_identity(text);
        CHECK(back == eq);
    }
}

TEST_CASE("rendered zero forms reparse to the same zero form") {
    Generator g;
    for (int i = 0; i < 200; ++i) {
        SeqEquation eq = g.random_equation<SeqKind>([&] { return g.random_seq_term(); });
        SeqEquation zf = zero_form(eq);
        std::string text = render(zf);
        CAPTURE(text);
        SeqEquation back = zero_form(parse_seq_identity(text));
        CHECK(back == zf);
    }
}
