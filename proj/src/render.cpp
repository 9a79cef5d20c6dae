#include "lucastrig/render.hpp"

#include <sstream>

#include "lucastrig/errors.hpp"

namespace lucastrig {

namespace {

std::string render_integer_linform(const LinForm& lf) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [name, c] : lf.coeffs()) {
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? "-" : "+");
        }
        if (mag != 1) os << to_string(mag) << "*";
        os << name;
        first = false;
    }
    const Rational& k = lf.constant();
    if (k != 0 || first) {
        Rational mag = k < 0 ? Rational(-k) : k;
        if (first) {
            os << to_string(k);
        } else {
            os << (k < 0 ? "-" : "+") << to_string(mag);
        }
    }
    return os.str();
}

}  // namespace

std::string render_linform(const LinForm& lf) {
    Integer den = lf.denominator_lcm();
    if (den == 1) return render_integer_linform(lf);
    // n/2 reads better unwrapped; everything else becomes (...)/den
    if (lf.constant() == 0 && lf.coeffs().size() == 1) {
        const auto& [name, c] = *lf.coeffs().begin();
        if (c == Rational(1) / Rational(den)) return name + "/" + den.get_str();
        if (c == Rational(-1) / Rational(den)) return "-" + name + "/" + den.get_str();
    }
    LinForm scaled = lf.scaled(Rational(den));
    return "(" + render_integer_linform(scaled) + ")/" + den.get_str();
}

namespace {

// exponent := integer | identifier | "(" linform ")"
std::string exponent_string(const LinForm& e) {
    if (e.is_constant() && is_integer(e.constant()) && e.constant() >= 0) {
        return to_string(e.constant());
    }
    if (e.constant() == 0 && e.coeffs().size() == 1 &&
        e.coeffs().begin()->second == 1) {
        return e.coeffs().begin()->first;
    }
    return "(" + render_linform(e) + ")";
}

const char* classic_name(SeqKind k) { return k == SeqKind::U ? "F" : "L"; }

std::string factor_name(TrigKind k, bool) { return name_of(k); }
std::string factor_name(SeqKind k, bool classic) {
    return classic ? classic_name(k) : name_of(k);
}

template <class Kind>
std::string plain_factor(const Factor<Kind>& f, bool classic) {
    std::string out = factor_name(f.kind, classic) + "(" + render_linform(f.arg) + ")";
    if (f.power != 1) out += "^" + std::to_string(f.power);
    return out;
}

// Display order: sequence factors list U before V, matching the usual
// typography U_m V_n; the canonical internal order is the reverse.
template <class Kind>
std::vector<Factor<Kind>> display_factors(const std::vector<Factor<Kind>>& fs);

template <>
std::vector<Factor<TrigKind>> display_factors(const std::vector<Factor<TrigKind>>& fs) {
    return fs;
}

template <>
std::vector<Factor<SeqKind>> display_factors(const std::vector<Factor<SeqKind>>& fs) {
    std::vector<Factor<SeqKind>> out;
    for (const auto& f : fs)
        if (f.kind == SeqKind::U) out.push_back(f);
    for (const auto& f : fs)
        if (f.kind != SeqKind::U) out.push_back(f);
    return out;
}

template <class Kind>
std::string plain_term_magnitude(const Term<Kind>& t, bool classic) {
    const Coeff& c = t.coeff;
    if (!c.exp_i().is_zero()) {
        throw Error("cannot render residual imaginary factor");
    }
    std::vector<std::string> parts;
    Rational mag = c.ratio() < 0 ? Rational(-c.ratio()) : c.ratio();

    if (!c.exp_sqrtD().is_zero()) {
        if (!c.exp_sqrtD().is_constant() || !is_even_integer(c.exp_sqrtD().constant())) {
            throw Error("cannot render fractional power of D");
        }
        LinForm e(Rational(c.exp_sqrtD().constant() / 2));
        parts.push_back(e.constant() == 1 ? "D" : "D^" + exponent_string(e));
    }
    if (!c.exp_sqrtQ().is_zero()) {
        LinForm e = c.exp_sqrtQ().scaled(Rational(1, 2));
        parts.push_back(e == LinForm(1) ? "Q" : "Q^" + exponent_string(e));
    }
    if (!c.exp_neg1().is_zero()) {
        parts.push_back("(-1)^" + exponent_string(c.exp_neg1()));
    }
    for (const auto& f : display_factors(t.factors)) {
        parts.push_back(plain_factor(f, classic));
    }

    std::ostringstream os;
    if (mag != 1 || parts.empty()) os << to_string(mag);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0 || mag != 1) os << "*";
        os << parts[i];
    }
    return os.str();
}

template <class Kind>
std::string plain_sum(const std::vector<Term<Kind>>& terms, bool classic) {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms) {
        bool neg = t.coeff.ratio() < 0;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        os << plain_term_magnitude(t, classic);
        first = false;
    }
    return os.str();
}

// --- LaTeX ---------------------------------------------------------------

std::string latex_linform(const LinForm& lf) {
    Integer den = lf.denominator_lcm();
    if (den != 1) {
        LinForm scaled = lf.scaled(Rational(den));
        return "\\frac{" + latex_linform(scaled) + "}{" + den.get_str() + "}";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [name, c] : lf.coeffs()) {
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? "-" : "+");
        }
        if (mag != 1) os << to_string(mag);
        os << name;
        first = false;
    }
    const Rational& k = lf.constant();
    if (k != 0 || first) {
        Rational mag = k < 0 ? Rational(-k) : k;
        if (first) {
            os << to_string(k);
        } else {
            os << (k < 0 ? "-" : "+") << to_string(mag);
        }
    }
    return os.str();
}

bool latex_is_single_token(const LinForm& lf) {
    if (lf.is_constant()) {
        return is_integer(lf.constant()) && lf.constant() >= 0 && lf.constant() <= 9;
    }
    return lf.constant() == 0 && lf.coeffs().size() == 1 &&
           lf.coeffs().begin()->second == 1 && lf.coeffs().begin()->first.size() == 1;
}

std::string latex_script(const LinForm& lf) {
    std::string body = latex_linform(lf);
    return latex_is_single_token(lf) ? body : "{" + body + "}";
}

std::string latex_factor(const Factor<SeqKind>& f, bool classic) {
    std::string out = factor_name(f.kind, classic) + "_" + latex_script(f.arg);
    if (f.power != 1) out += "^" + std::to_string(f.power);
    return out;
}

std::string latex_factor(const Factor<TrigKind>& f, bool) {
    std::string out = std::string("\\") + name_of(f.kind);
    if (f.power != 1) out += "^" + std::to_string(f.power);
    // a single positive monomial reads fine without parentheses
    bool bare = (f.arg.is_constant() && f.arg.constant() >= 0 &&
                 is_integer(f.arg.constant())) ||
                (f.arg.constant() == 0 && f.arg.coeffs().size() == 1 &&
                 f.arg.coeffs().begin()->second > 0 &&
                 is_integer(f.arg.coeffs().begin()->second));
    if (bare) {
        out += " " + latex_linform(f.arg);
    } else {
        out += "(" + latex_linform(f.arg) + ")";
    }
    return out;
}

template <class Kind>
std::string latex_term_magnitude(const Term<Kind>& t, bool classic) {
    const Coeff& c = t.coeff;
    if (!c.exp_i().is_zero()) {
        throw Error("cannot render residual imaginary factor");
    }
    Rational mag = c.ratio() < 0 ? Rational(-c.ratio()) : c.ratio();
    std::vector<std::string> parts;
    if (!c.exp_sqrtD().is_zero()) {
        LinForm e(Rational(c.exp_sqrtD().constant() / 2));
        parts.push_back(e.constant() == 1 ? "D" : "D^" + latex_script(e));
    }
    if (!c.exp_sqrtQ().is_zero()) {
        LinForm e = c.exp_sqrtQ().scaled(Rational(1, 2));
        parts.push_back(e == LinForm(1) ? "Q" : "Q^" + latex_script(e));
    }
    if (!c.exp_neg1().is_zero()) {
        parts.push_back("(-1)^" + latex_script(c.exp_neg1()));
    }
    std::ostringstream os;
    if (mag != 1 || (parts.empty() && t.factors.empty())) os << to_string(mag);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        os << parts[i];
    }
    bool first_factor = true;
    for (const auto& f : display_factors(t.factors)) {
        if (!first_factor || !parts.empty()) os << " ";
        os << latex_factor(f, classic);
        first_factor = false;
    }
    return os.str();
}

template <class Kind>
std::string latex_sum(const std::vector<Term<Kind>>& terms, bool classic) {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms) {
        bool neg = t.coeff.ratio() < 0;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        os << latex_term_magnitude(t, classic);
        first = false;
    }
    return os.str();
}

// --- common shape --------------------------------------------------------

// A zero-form splits back into sides for display: pure-constant terms move
// right (negated); failing that, negative terms move right.
template <class Kind>
std::pair<std::vector<Term<Kind>>, std::vector<Term<Kind>>> split_sides(
    const Equation<Kind>& eq) {
    if (!is_zero_form(eq)) return {eq.lhs, eq.rhs};
    std::vector<Term<Kind>> lhs, rhs;
    for (const auto& t : eq.lhs) {
        if (t.is_constant()) {
            Term<Kind> moved = t;
            moved.coeff = moved.coeff.scaled(Rational(-1));
            rhs.push_back(std::move(moved));
        } else {
            lhs.push_back(t);
        }
    }
    if (rhs.empty()) {
        std::vector<Term<Kind>> pos;
        for (const auto& t : lhs) {
            if (t.coeff.ratio() < 0) {
                Term<Kind> moved = t;
                moved.coeff = moved.coeff.scaled(Rational(-1));
                rhs.push_back(std::move(moved));
            } else {
                pos.push_back(t);
            }
        }
        lhs = std::move(pos);
    }
    return {std::move(lhs), std::move(rhs)};
}

template <class Kind>
std::string render_impl(const Equation<Kind>& eq, const RenderOptions& opts) {
    auto [lhs, rhs] = split_sides(eq);
    if (opts.format == RenderFormat::Latex) {
        return latex_sum(lhs, opts.classic_names) + " = " +
               latex_sum(rhs, opts.classic_names);
    }
    return plain_sum(lhs, opts.classic_names) + " = " +
           plain_sum(rhs, opts.classic_names);
}

}  // namespace

std::string render(const TrigEquation& eq, const RenderOptions& opts) {
    return render_impl(eq, opts);
}

std::string render(const SeqEquation& eq, const RenderOptions& opts) {
    return render_impl(eq, opts);
}

std::string render_coeff_debug(const Coeff& c) {
    std::ostringstream os;
    os << to_string(c.ratio());
    if (!c.exp_i().is_zero()) os << "*i^" << exponent_string(c.exp_i());
    if (!c.exp_neg1().is_zero()) os << "*(-1)^" << exponent_string(c.exp_neg1());
    if (!c.exp_sqrtQ().is_zero()) os << "*sqrt(Q)^" << exponent_string(c.exp_sqrtQ());
    if (!c.exp_sqrtD().is_zero()) os << "*sqrt(D)^" << exponent_string(c.exp_sqrtD());
    return os.str();
}

}  // namespace lucastrig
