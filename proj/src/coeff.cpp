#include "lucastrig/coeff.hpp"

#include <cassert>

#include "lucastrig/errors.hpp"

namespace lucastrig {

void Coeff::normalize() {
    ratio_.canonicalize();
    assert(ratio_ != 0);
    // i^(2q + r) = (-1)^q i^r
    Rational ci = exp_i_.constant();
    Integer qi = floor_half(ci);
    if (qi != 0) {
        exp_i_ = exp_i_ + LinForm(Rational(qi) * -2);
        if (mpz_odd_p(qi.get_mpz_t())) ratio_ = -ratio_;
    }
    // (-1)^(2q + r) = (-1)^r, and a concrete (-1)^1 folds into the sign
    Rational cn = exp_neg1_.constant();
    Integer qn = floor_half(cn);
    if (qn != 0) {
        exp_neg1_ = exp_neg1_ + LinForm(Rational(qn) * -2);
    }
    if (exp_neg1_.constant() == 1) {
        exp_neg1_ = exp_neg1_ + LinForm(-1);
        ratio_ = -ratio_;
    }
}

Coeff Coeff::operator*(const Coeff& o) const {
    return Coeff(ratio_ * o.ratio_, exp_i_ + o.exp_i_, exp_neg1_ + o.exp_neg1_,
                 exp_sqrtQ_ + o.exp_sqrtQ_, exp_sqrtD_ + o.exp_sqrtD_);
}

Coeff Coeff::operator/(const Coeff& o) const { return *this * o.inverse(); }

Coeff Coeff::inverse() const {
    return Coeff(Rational(1) / ratio_, -exp_i_, -exp_neg1_, -exp_sqrtQ_,
                 -exp_sqrtD_);
}

Coeff Coeff::pow(long e) const {
    Rational s = pow_rational(ratio_, e);
    Rational re(e);
    return Coeff(s, exp_i_.scaled(re), exp_neg1_.scaled(re),
                 exp_sqrtQ_.scaled(re), exp_sqrtD_.scaled(re));
}

Coeff Coeff::scaled(const Rational& s) const {
    Coeff out = *this;
    out.ratio_ *= s;
    assert(out.ratio_ != 0);
    return out;
}

Coeff Coeff::reduce_under(const ConstraintSet& cs) const {
    Coeff out = *this;

    if (!out.exp_sqrtD_.is_constant()) {
        throw RadicalResidue("sqrt(D)", "non-constant exponent");
    }
    if (!is_even_integer(out.exp_sqrtD_.constant())) {
        throw RadicalResidue("sqrt(D)", "odd power");
    }

    if (!is_even_valued(out.exp_sqrtQ_, cs)) {
        throw RadicalResidue("sqrt(Q)", "exponent not even under constraints");
    }

    if (!out.exp_i_.is_zero()) {
        if (is_even_valued(out.exp_i_, cs)) {
            out.exp_neg1_ = out.exp_neg1_ + out.exp_i_.scaled(Rational(1, 2));
            out.exp_i_ = LinForm();
        } else {
            throw RadicalResidue("i", "exponent parity undetermined or odd");
        }
    }

    if (!out.exp_neg1_.is_zero()) {
        if (is_even_valued(out.exp_neg1_, cs)) {
            out.exp_neg1_ = LinForm();
        } else if (is_odd_valued(out.exp_neg1_, cs)) {
            out.exp_neg1_ = LinForm();
            out.ratio_ = -out.ratio_;
        } else if (!is_integer_valued(out.exp_neg1_, cs)) {
            throw RadicalResidue("(-1)", "non-integer exponent");
        }
        // otherwise a genuine symbolic sign (-1)^L stays
    }

    out.normalize();
    return out;
}

Coeff Coeff::reduce_classic(const ConstraintSet& cs) const {
    Coeff out = reduce_under(cs);
    // D = 5
    Integer dhalf = floor_half(out.exp_sqrtD_.constant());
    out.ratio_ *= pow_rational(Rational(5), to_long(dhalf));
    out.exp_sqrtD_ = LinForm();
    // Q = -1
    out.exp_neg1_ = out.exp_neg1_ + out.exp_sqrtQ_.scaled(Rational(1, 2));
    out.exp_sqrtQ_ = LinForm();
    out.normalize();
    // the fold may have made the (-1) exponent decidable
    if (!out.exp_neg1_.is_zero()) {
        if (is_even_valued(out.exp_neg1_, cs)) {
            out.exp_neg1_ = LinForm();
        } else if (is_odd_valued(out.exp_neg1_, cs)) {
            out.exp_neg1_ = LinForm();
            out.ratio_ = -out.ratio_;
        }
    }
    out.normalize();
    return out;
}

std::optional<Rational> Coeff::rational_under(const ConstraintSet& cs) const {
    Coeff red;
    try {
        red = reduce_under(cs);
    } catch (const RadicalResidue&) {
        return std::nullopt;
    }
    if (!red.exp_sqrtQ_.is_zero() || !red.exp_sqrtD_.is_zero() ||
        !red.exp_neg1_.is_zero()) {
        return std::nullopt;
    }
    return red.ratio_;
}

Rational Coeff::eval_exact(const std::map<std::string, long>& assignment,
                           const Rational& q_value,
                           const Rational& d_value) const {
    Rational out = ratio_;

    Rational ei = exp_i_.eval(assignment);
    if (!is_even_integer(ei)) {
        throw Error("imaginary factor i^" + to_string(ei) +
                    " in exact evaluation");
    }
    if (is_odd_integer(ei / 2)) out = -out;

    Rational en = exp_neg1_.eval(assignment);
    if (!is_integer(en)) {
        throw Error("non-integer exponent on (-1) in exact evaluation");
    }
    if (is_odd_integer(en)) out = -out;

    Rational eq = exp_sqrtQ_.eval(assignment);
    if (!is_even_integer(eq)) {
        throw Error("irrational factor sqrt(Q)^" + to_string(eq) +
                    " in exact evaluation");
    }
    out *= pow_rational(q_value, to_long(Integer(eq.get_num())) / 2);

    Rational ed = exp_sqrtD_.eval(assignment);
    if (!is_even_integer(ed)) {
        throw Error("irrational factor sqrt(D)^" + to_string(ed) +
                    " in exact evaluation");
    }
    out *= pow_rational(d_value, to_long(Integer(ed.get_num())) / 2);

    return out;
}

std::set<std::string> Coeff::variables() const {
    std::set<std::string> out;
    for (const LinForm* lf : {&exp_i_, &exp_neg1_, &exp_sqrtQ_, &exp_sqrtD_}) {
        auto vs = lf->variables();
        out.insert(vs.begin(), vs.end());
    }
    return out;
}

int compare(const Coeff& a, const Coeff& b) {
    if (int c = compare(a.exp_sqrtQ(), b.exp_sqrtQ())) return c;
    if (int c = compare(a.exp_neg1(), b.exp_neg1())) return c;
    if (int c = compare(a.exp_i(), b.exp_i())) return c;
    if (int c = compare(a.exp_sqrtD(), b.exp_sqrtD())) return c;
    if (a.ratio() != b.ratio()) return a.ratio() > b.ratio() ? -1 : 1;
    return 0;
}

}  // namespace lucastrig
