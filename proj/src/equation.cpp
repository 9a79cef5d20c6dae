#include "lucastrig/equation.hpp"

namespace lucastrig {

const char* name_of(TrigKind k) {
    switch (k) {
        case TrigKind::Sin: return "sin";
        case TrigKind::Cos: return "cos";
        case TrigKind::Tan: return "tan";
        case TrigKind::Sinh: return "sinh";
        case TrigKind::Cosh: return "cosh";
    }
    return "?";
}

const char* name_of(SeqKind k) {
    switch (k) {
        case SeqKind::U: return "U";
        case SeqKind::V: return "V";
    }
    return "?";
}

int order_rank(TrigKind k) { return static_cast<int>(k); }

int order_rank(SeqKind k) { return k == SeqKind::V ? 0 : 1; }

namespace {

bool scalar_is_index_free(const Coeff& c) {
    return c.exp_i().is_constant() && c.exp_neg1().is_constant() &&
           c.exp_sqrtQ().is_constant() && c.exp_sqrtD().is_constant();
}

bool scalar_is_radical_free(const Coeff& c) {
    // normalization leaves concrete signs in the ratio, so any surviving
    // constant exponent on i or (-1) is a genuine residue
    return c.exp_i().is_zero() && c.exp_neg1().is_zero() &&
           is_even_integer(c.exp_sqrtQ().constant()) &&
           is_even_integer(c.exp_sqrtD().constant());
}

}  // namespace

std::optional<Coeff> equivalent_up_to_scalar(const SeqEquation& a,
                                             const ConstraintSet& cs_a,
                                             const SeqEquation& b,
                                             const ConstraintSet& cs_b) {
    if (!(cs_a == cs_b)) return std::nullopt;
    SeqEquation za = is_zero_form(a) ? a : zero_form(a);
    SeqEquation zb = is_zero_form(b) ? b : zero_form(b);
    if (za.lhs.empty() && zb.lhs.empty()) return Coeff::one();
    if (za.lhs.size() != zb.lhs.size()) return std::nullopt;

    std::optional<Coeff> witness;
    for (std::size_t i = 0; i < za.lhs.size(); ++i) {
        if (!(za.lhs[i].factors == zb.lhs[i].factors)) return std::nullopt;
        Coeff ratio = za.lhs[i].coeff / zb.lhs[i].coeff;
        if (!witness) {
            witness = ratio;
        } else if (!(*witness == ratio)) {
            return std::nullopt;
        }
    }
    if (!scalar_is_index_free(*witness) || !scalar_is_radical_free(*witness)) {
        return std::nullopt;
    }
    return witness;
}

std::optional<Rational> equivalent_up_to_scalar(const TrigEquation& a,
                                                const TrigEquation& b) {
    TrigEquation za = is_zero_form(a) ? a : zero_form(a);
    TrigEquation zb = is_zero_form(b) ? b : zero_form(b);
    if (za.lhs.empty() && zb.lhs.empty()) return Rational(1);
    if (za.lhs.size() != zb.lhs.size()) return std::nullopt;

    std::optional<Rational> witness;
    for (std::size_t i = 0; i < za.lhs.size(); ++i) {
        if (!(za.lhs[i].factors == zb.lhs[i].factors)) return std::nullopt;
        const Coeff& ca = za.lhs[i].coeff;
        const Coeff& cb = zb.lhs[i].coeff;
        if (!ca.is_rational() || !cb.is_rational()) return std::nullopt;
        Rational ratio = ca.ratio() / cb.ratio();
        if (!witness) {
            witness = ratio;
        } else if (*witness != ratio) {
            return std::nullopt;
        }
    }
    return witness;
}

}  // namespace lucastrig
