#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "lucastrig/coeff.hpp"
#include "lucastrig/constraints.hpp"
#include "lucastrig/linform.hpp"

namespace lucastrig {

enum class TrigKind { Sin, Cos, Tan, Sinh, Cosh };
enum class SeqKind { U, V };

const char* name_of(TrigKind k);
const char* name_of(SeqKind k);

// Rank used for canonical ordering. For sequence factors V ranks before U,
// which makes the second-kind term the reference in forms like
// V^2 - D*U^2 = 4*Q^n; display order is handled by the renderer.
int order_rank(TrigKind k);
int order_rank(SeqKind k);

template <class Kind>
struct Factor {
    Kind kind;
    LinForm arg;  // angle or subscript
    int power = 1;
};

using TrigFactor = Factor<TrigKind>;
using SeqFactor = Factor<SeqKind>;

template <class Kind>
int compare(const Factor<Kind>& a, const Factor<Kind>& b) {
    if (order_rank(a.kind) != order_rank(b.kind))
        return order_rank(a.kind) < order_rank(b.kind) ? -1 : 1;
    if (int c = compare(a.arg, b.arg)) return c;
    if (a.power != b.power) return a.power < b.power ? -1 : 1;
    return 0;
}

template <class Kind>
bool operator==(const Factor<Kind>& a, const Factor<Kind>& b) {
    return a.kind == b.kind && a.arg == b.arg && a.power == b.power;
}

// A product of factors with a coefficient; factors are kept sorted and
// merged, so equal (kind, arg) pairs never repeat. A term with no factors
// is a pure constant.
template <class Kind>
struct Term {
    Coeff coeff = Coeff::one();
    std::vector<Factor<Kind>> factors;

    void canonicalize() {
        std::sort(factors.begin(), factors.end(),
                  [](const auto& x, const auto& y) { return compare(x, y) < 0; });
        std::vector<Factor<Kind>> merged;
        for (const auto& f : factors) {
            if (!merged.empty() && merged.back().kind == f.kind &&
                merged.back().arg == f.arg) {
                merged.back().power += f.power;
            } else {
                merged.push_back(f);
            }
        }
        factors = std::move(merged);
    }

    bool is_constant() const { return factors.empty(); }
};

using TrigTerm = Term<TrigKind>;
using SeqTerm = Term<SeqKind>;

template <class Kind>
int compare_factor_lists(const std::vector<Factor<Kind>>& a,
                         const std::vector<Factor<Kind>>& b) {
    // Lexicographic with end-of-list greatest, so products sort before their
    // prefixes and pure constants sort last.
    std::size_t i = 0;
    for (; i < a.size() && i < b.size(); ++i) {
        if (int c = compare(a[i], b[i])) return c;
    }
    if (a.size() != b.size()) return a.size() > b.size() ? -1 : 1;
    return 0;
}

template <class Kind>
int compare(const Term<Kind>& a, const Term<Kind>& b) {
    if (int c = compare_factor_lists(a.factors, b.factors)) return c;
    // smallest Q-exponent constant breaks factor ties
    const Rational& qa = a.coeff.exp_sqrtQ().constant();
    const Rational& qb = b.coeff.exp_sqrtQ().constant();
    if (qa != qb) return qa < qb ? -1 : 1;
    return compare(a.coeff, b.coeff);
}

template <class Kind>
bool operator==(const Term<Kind>& a, const Term<Kind>& b) {
    return a.coeff == b.coeff && a.factors == b.factors;
}

// Sorts terms canonically and merges those sharing both the factor multiset
// and the symbolic part of the coefficient; zero ratios drop out.
template <class Kind>
std::vector<Term<Kind>> collect(std::vector<Term<Kind>> terms) {
    for (auto& t : terms) t.canonicalize();
    std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
        return compare(x, y) < 0;
    });
    std::vector<Term<Kind>> out;
    for (auto& t : terms) {
        if (!out.empty() && out.back().factors == t.factors &&
            out.back().coeff.atom_key() == t.coeff.atom_key()) {
            Rational sum = out.back().coeff.ratio() + t.coeff.ratio();
            if (sum == 0) {
                out.pop_back();
            } else {
                out.back().coeff = Coeff(sum, t.coeff.exp_i(), t.coeff.exp_neg1(),
                                         t.coeff.exp_sqrtQ(), t.coeff.exp_sqrtD());
            }
        } else {
            out.push_back(std::move(t));
        }
    }
    return out;
}

// An identity as written: a list of terms on each side. The canonical
// zero-form representation keeps everything on the left with an empty right
// side; the renderer splits it back into readable sides.
template <class Kind>
struct Equation {
    std::vector<Term<Kind>> lhs;
    std::vector<Term<Kind>> rhs;

    bool operator==(const Equation& o) const {
        return lhs == o.lhs && rhs == o.rhs;
    }
};

using TrigEquation = Equation<TrigKind>;
using SeqEquation = Equation<SeqKind>;

template <class Kind>
Equation<Kind> canonicalize_sides(Equation<Kind> eq) {
    eq.lhs = collect(std::move(eq.lhs));
    eq.rhs = collect(std::move(eq.rhs));
    return eq;
}

// lhs - rhs, expanded and collected. Empty result means a trivial identity.
template <class Kind>
Equation<Kind> zero_form(const Equation<Kind>& eq) {
    std::vector<Term<Kind>> all = eq.lhs;
    for (const auto& t : eq.rhs) {
        Term<Kind> neg = t;
        neg.coeff = neg.coeff.scaled(Rational(-1));
        all.push_back(std::move(neg));
    }
    Equation<Kind> out;
    out.lhs = collect(std::move(all));
    return out;
}

template <class Kind>
bool is_zero_form(const Equation<Kind>& eq) {
    return eq.rhs.empty();
}

template <class Kind>
std::set<std::string> equation_variables(const Equation<Kind>& eq) {
    std::set<std::string> out;
    auto scan = [&](const std::vector<Term<Kind>>& ts) {
        for (const auto& t : ts) {
            auto cv = t.coeff.variables();
            out.insert(cv.begin(), cv.end());
            for (const auto& f : t.factors) {
                auto fv = f.arg.variables();
                out.insert(fv.begin(), fv.end());
            }
        }
    };
    scan(eq.lhs);
    scan(eq.rhs);
    return out;
}

// True when a nonzero radical-free Coeff c, constant in all index variables,
// satisfies zero_form(a) = c * zero_form(b) and the constraint sets match.
// Returns the witness. This is the project's notion of "same identity":
// printed forms in the source tables differ by overall factors.
std::optional<Coeff> equivalent_up_to_scalar(const SeqEquation& a,
                                             const ConstraintSet& cs_a,
                                             const SeqEquation& b,
                                             const ConstraintSet& cs_b);

// Same test for trig equations, where the witness must be a plain rational.
std::optional<Rational> equivalent_up_to_scalar(const TrigEquation& a,
                                                const TrigEquation& b);

}  // namespace lucastrig
