#include "lucastrig/normalize.hpp"

#include "lucastrig/errors.hpp"
#include "lucastrig/render.hpp"

namespace lucastrig {

namespace {

void add_denominator_constraint(ConstraintSet& cs, const LinForm& displayed,
                                const char* what) {
    Integer den = displayed.denominator_lcm();
    if (den == 1) return;
    if (den > 2) {
        throw UnsupportedDenominator(std::string(what) + " " +
                                     render_linform(displayed) +
                                     " has denominator " + den.get_str() +
                                     "; only halves are supported");
    }
    cs.add_parity(displayed.scaled(Rational(2)));
}

ConstraintSet subscript_constraints(const SeqEquation& eq) {
    ConstraintSet cs;
    for (const auto* side : {&eq.lhs, &eq.rhs}) {
        for (const auto& t : *side) {
            for (const auto& f : t.factors) {
                add_denominator_constraint(cs, f.arg, "subscript");
            }
        }
    }
    return cs;
}

}  // namespace

ConstraintSet infer_constraints(const SeqEquation& eq) {
    ConstraintSet cs = subscript_constraints(eq);
    for (const auto* side : {&eq.lhs, &eq.rhs}) {
        for (const auto& t : *side) {
            const Coeff& c = t.coeff;
            add_denominator_constraint(cs, c.exp_sqrtQ().scaled(Rational(1, 2)),
                                       "exponent of Q");
            add_denominator_constraint(cs, c.exp_neg1(), "exponent of (-1)");
            add_denominator_constraint(cs, c.exp_sqrtD().scaled(Rational(1, 2)),
                                       "exponent of D");
        }
    }
    return cs;
}

NormalizedIdentity normalize_identity(const SeqEquation& raw,
                                      const ConversionMode& mode) {
    NormalizedIdentity out;
    out.classic = mode.classic;

    SeqEquation zf = is_zero_form(raw) ? raw : zero_form(raw);
    out.constraints = subscript_constraints(zf);
    out.scaling = Coeff::one();
    if (zf.lhs.empty()) {
        out.equation = zf;
        return out;
    }

    // Divide everything by the reference coefficient (first term of the
    // canonical order), then clear radicals under the side conditions.
    Coeff ref = zf.lhs.front().coeff;
    std::vector<SeqTerm> terms;
    terms.reserve(zf.lhs.size());
    for (const auto& t : zf.lhs) {
        SeqTerm nt = t;
        nt.coeff = t.coeff / ref;
        try {
            nt.coeff = mode.classic ? nt.coeff.reduce_classic(out.constraints)
                                    : nt.coeff.reduce_under(out.constraints);
        } catch (const RadicalResidue& e) {
            throw RadicalResidue(e.atom(),
                                 "coefficient " + render_coeff_debug(nt.coeff));
        }
        terms.push_back(std::move(nt));
    }
    Coeff divided_out = ref;
    terms = collect(std::move(terms));
    if (terms.empty()) {
        out.equation = SeqEquation{};
        out.scaling = divided_out;
        return out;
    }

    // D appears only with nonnegative powers in the published forms; shift
    // any negative power out.
    Rational min_d(0);
    for (const auto& t : terms) {
        const Rational& d2 = t.coeff.exp_sqrtD().constant();
        if (d2 < min_d) min_d = d2;
    }
    if (min_d < 0) {
        Coeff dshift(Rational(1), LinForm(), LinForm(), LinForm(),
                     LinForm(Rational(-min_d)));
        for (auto& t : terms) t.coeff = t.coeff * dshift;
        divided_out = divided_out / dshift;
    }

    // Integer coefficients with gcd 1 across terms, first term positive.
    Integer num_gcd(0), den_lcm(1);
    for (const auto& t : terms) {
        Integer num = t.coeff.ratio().get_num();
        Integer den = t.coeff.ratio().get_den();
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), num.get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), den.get_mpz_t());
    }
    Rational scale = Rational(den_lcm) / Rational(num_gcd);
    if (terms.front().coeff.ratio() < 0) scale = -scale;
    if (scale != 1) {
        for (auto& t : terms) t.coeff = t.coeff.scaled(scale);
        divided_out = divided_out.scaled(Rational(1) / scale);
    }

    SeqEquation result;
    result.lhs = std::move(terms);
    out.equation = std::move(result);
    out.scaling = divided_out;
    return out;
}

}  // namespace lucastrig
