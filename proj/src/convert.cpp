#include "lucastrig/convert.hpp"

#include <map>
#include <optional>

#include "lucastrig/errors.hpp"
#include "lucastrig/normalize.hpp"
#include "lucastrig/render.hpp"
#include "lucastrig/verify.hpp"

namespace lucastrig {

namespace {

bool is_circular(TrigKind k) {
    return k == TrigKind::Sin || k == TrigKind::Cos || k == TrigKind::Tan;
}

void check_family(const TrigEquation& eq, ConversionMode::Family family) {
    for (const auto* side : {&eq.lhs, &eq.rhs}) {
        for (const auto& t : *side) {
            for (const auto& f : t.factors) {
                bool ok = family == ConversionMode::Family::Circular
                              ? is_circular(f.kind)
                              : !is_circular(f.kind);
                if (!ok) {
                    throw UnsupportedFunction(
                        std::string(name_of(f.kind)) + " is not valid in " +
                        (family == ConversionMode::Family::Circular ? "circular"
                                                                    : "hyperbolic") +
                        " mode");
                }
            }
        }
    }
}

// tan = sin/cos with the division cleared: the whole sum is multiplied by
// every cosine a tan implicitly divides by, which keeps powers positive.
// Sound as an identity transformation away from the (measure-zero) poles.
std::map<LinForm, int> tan_powers(const std::vector<TrigTerm>& terms) {
    std::map<LinForm, int> maxpow;
    for (const auto& t : terms) {
        for (const auto& f : t.factors) {
            if (f.kind != TrigKind::Tan) continue;
            auto [it, inserted] = maxpow.try_emplace(f.arg, f.power);
            if (!inserted && f.power > it->second) it->second = f.power;
        }
    }
    return maxpow;
}

std::vector<TrigTerm> eliminate_tan(std::vector<TrigTerm> terms,
                                    const std::map<LinForm, int>& maxpow) {
    if (maxpow.empty()) return terms;
    for (auto& t : terms) {
        std::map<LinForm, int> have;
        for (auto& f : t.factors) {
            if (f.kind == TrigKind::Tan) {
                have[f.arg] = f.power;
                f.kind = TrigKind::Sin;
            }
        }
        for (const auto& [arg, mp] : maxpow) {
            int deficit = mp;
            auto it = have.find(arg);
            if (it != have.end()) deficit -= it->second;
            if (deficit > 0) {
                t.factors.push_back({TrigKind::Cos, arg, deficit});
            }
        }
        t.canonicalize();
    }
    return terms;
}

// Rule images over a subscript equal to the angle's linear form.
Coeff forward_image(TrigKind kind, const LinForm& n, SeqKind* seq_kind) {
    switch (kind) {
        case TrigKind::Sin:
            *seq_kind = SeqKind::U;
            return Coeff(Rational(1, 2), LinForm(-1), n, -n, LinForm(1));
        case TrigKind::Cos:
            *seq_kind = SeqKind::V;
            return Coeff(Rational(1, 2), LinForm(), n, -n, LinForm());
        case TrigKind::Sinh:
            *seq_kind = SeqKind::U;
            return Coeff(Rational(1, 2), LinForm(), n, -n, LinForm(1));
        case TrigKind::Cosh:
            *seq_kind = SeqKind::V;
            return Coeff(Rational(1, 2), LinForm(), n, -n, LinForm());
        case TrigKind::Tan:
            break;
    }
    throw UnsupportedFunction("tan must be eliminated before substitution");
}

}  // namespace

SeqEquation trig_to_lucas_raw(const TrigEquation& eq, const ConversionMode& mode) {
    check_family(eq, mode.family);
    TrigEquation zf = zero_form(eq);
    if (mode.family == ConversionMode::Family::Circular) {
        zf.lhs = eliminate_tan(std::move(zf.lhs), tan_powers(zf.lhs));
    }

    std::vector<SeqTerm> out;
    out.reserve(zf.lhs.size());
    for (const auto& t : zf.lhs) {
        SeqTerm st;
        st.coeff = t.coeff;
        for (const auto& f : t.factors) {
            SeqKind sk;
            Coeff img = forward_image(f.kind, f.arg, &sk);
            st.coeff = st.coeff * img.pow(f.power);
            st.factors.push_back({sk, f.arg, f.power});
        }
        st.canonicalize();
        out.push_back(std::move(st));
    }
    SeqEquation result;
    result.lhs = collect(std::move(out));
    return result;
}

TrigEquation trig_to_hyperbolic(const TrigEquation& eq) {
    check_family(eq, ConversionMode::Family::Circular);
    TrigEquation work = eq;
    auto maxpow = tan_powers(work.lhs);
    for (const auto& [arg, p] : tan_powers(work.rhs)) {
        auto [it, inserted] = maxpow.try_emplace(arg, p);
        if (!inserted && p > it->second) it->second = p;
    }
    work.lhs = eliminate_tan(std::move(work.lhs), maxpow);
    work.rhs = eliminate_tan(std::move(work.rhs), maxpow);

    TrigEquation out;
    for (auto [src, dst] : {std::pair{&work.lhs, &out.lhs}, {&work.rhs, &out.rhs}}) {
        for (const auto& t : *src) {
            TrigTerm nt;
            nt.coeff = t.coeff;
            for (const auto& f : t.factors) {
                if (f.kind == TrigKind::Sin) {
                    // sin -> i sinh
                    nt.coeff = nt.coeff *
                               Coeff(Rational(1), LinForm(f.power), LinForm(),
                                     LinForm(), LinForm());
                    nt.factors.push_back({TrigKind::Sinh, f.arg, f.power});
                } else {
                    nt.factors.push_back({TrigKind::Cosh, f.arg, f.power});
                }
            }
            nt.canonicalize();
            dst->push_back(std::move(nt));
        }
        *dst = collect(std::move(*dst));
        for (const auto& t : *dst) {
            if (!t.coeff.exp_i().is_zero()) {
                throw ResidualImaginary(
                    "mixed sine parity; term has coefficient " +
                    render_coeff_debug(t.coeff));
            }
        }
    }
    return out;
}

namespace {

// Inverse rule images: U_n -> 2i/sqrt(D) (-sqrt(Q))^n sin(n) in the circular
// family, U_n -> 2/sqrt(D) (-sqrt(Q))^n sinh(n) in the hyperbolic one, and
// V_n -> 2 (-sqrt(Q))^n cos(n) / cosh(n).
Coeff backward_image(SeqKind kind, const LinForm& n, bool hyperbolic,
                     TrigKind* trig_kind) {
    if (kind == SeqKind::U) {
        *trig_kind = hyperbolic ? TrigKind::Sinh : TrigKind::Sin;
        return Coeff(Rational(2), LinForm(hyperbolic ? 0 : 1), n, n, LinForm(-1));
    }
    *trig_kind = hyperbolic ? TrigKind::Cosh : TrigKind::Cos;
    return Coeff(Rational(2), LinForm(), n, n, LinForm());
}

std::vector<TrigTerm> backward_substitute(const SeqEquation& zf,
                                          const ConversionMode& mode) {
    bool hyperbolic = mode.family == ConversionMode::Family::Hyperbolic;
    std::vector<TrigTerm> out;
    for (const auto& t : zf.lhs) {
        TrigTerm wt;
        wt.coeff = t.coeff;
        for (const auto& f : t.factors) {
            TrigKind tk;
            Coeff img = backward_image(f.kind, f.arg, hyperbolic, &tk);
            wt.coeff = wt.coeff * img.pow(f.power);
            wt.factors.push_back({tk, f.arg, f.power});
        }
        wt.canonicalize();
        out.push_back(std::move(wt));
    }
    return collect(std::move(out));
}

TrigEquation direct_backward(const SeqEquation& zf, const ConstraintSet& cs,
                             const ConversionMode& mode) {
    std::vector<TrigTerm> terms = backward_substitute(zf, mode);
    TrigEquation result;
    if (terms.empty()) return result;

    Coeff ref = terms.front().coeff;
    std::vector<TrigTerm> out;
    for (const auto& t : terms) {
        Coeff red = (t.coeff / ref).reduce_under(cs);
        if (mode.classic && !red.exp_sqrtD().is_zero()) {
            long half = to_long(floor_half(red.exp_sqrtD().constant()));
            red = Coeff(red.ratio() * pow_rational(Rational(5), half),
                        LinForm(), red.exp_neg1(), red.exp_sqrtQ(), LinForm());
        }
        if (!red.exp_sqrtD().is_zero()) {
            throw RadicalResidue("sqrt(D)", "residual " + render_coeff_debug(red));
        }
        if (!red.exp_sqrtQ().is_zero()) {
            throw RadicalResidue("sqrt(Q)", "residual " + render_coeff_debug(red));
        }
        if (!red.exp_neg1().is_zero()) {
            throw RadicalResidue("(-1)", "unresolved sign " + render_coeff_debug(red));
        }
        TrigTerm tt;
        tt.coeff = Coeff(red.ratio());
        tt.factors = t.factors;
        out.push_back(std::move(tt));
    }

    // integer coefficients, gcd 1, leading term positive
    Integer num_gcd(0), den_lcm(1);
    for (const auto& t : out) {
        Integer num = t.coeff.ratio().get_num();
        Integer den = t.coeff.ratio().get_den();
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), num.get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), den.get_mpz_t());
    }
    Rational scale = Rational(den_lcm) / Rational(num_gcd);
    if (out.front().coeff.ratio() < 0) scale = -scale;
    if (scale != 1) {
        for (auto& t : out) t.coeff = t.coeff.scaled(scale);
    }
    result.lhs = collect(std::move(out));
    return result;
}

// Q-weight of a sequence term: the sqrt(Q) exponent its backward image
// carries (coefficient part plus one per subscript unit).
LinForm q_weight(const SeqTerm& t) {
    LinForm w = t.coeff.exp_sqrtQ();
    for (const auto& f : t.factors) {
        w = w + f.arg.scaled(Rational(f.power));
    }
    return w;
}

// Printed identities often erase U_1 = 1 factors (Catalan's right side is
// really Q^(n-m) U_m^2). Re-inserting U_1 powers levels the Q-weights so the
// sqrt(Q) residues can cancel; the sequence identity is unchanged.
std::optional<SeqEquation> insert_u1_variant(const SeqEquation& zf) {
    if (zf.lhs.empty()) return std::nullopt;
    LinForm base = q_weight(zf.lhs.front());
    std::vector<Rational> offsets;
    Rational max_offset(0);
    for (const auto& t : zf.lhs) {
        LinForm diff = q_weight(t) - base;
        if (!diff.is_constant() || !is_integer(diff.constant())) {
            return std::nullopt;
        }
        offsets.push_back(diff.constant());
        if (diff.constant() > max_offset) max_offset = diff.constant();
    }
    SeqEquation out = zf;
    bool changed = false;
    for (std::size_t i = 0; i < out.lhs.size(); ++i) {
        long power = to_long(Integer(Rational(max_offset - offsets[i]).get_num()));
        if (power == 0) continue;
        out.lhs[i].factors.push_back({SeqKind::U, LinForm(1), static_cast<int>(power)});
        out.lhs[i].canonicalize();
        changed = true;
    }
    if (!changed) return std::nullopt;
    return out;
}

// Classic-only rewrite on constant terms: (-1)^k = -(-1)^(k-1), i.e.
// Q^k -> -Q^(k-1), which moves the term into the Q-weight class of the
// factor terms for inputs like Cassini's.
std::optional<SeqEquation> classic_shift_variant(const SeqEquation& zf) {
    SeqEquation out = zf;
    bool changed = false;
    for (auto& t : out.lhs) {
        if (!t.factors.empty()) continue;
        const Coeff& c = t.coeff;
        if (c.exp_sqrtQ().is_zero() || c.exp_sqrtQ().is_constant()) continue;
        t.coeff = Coeff(-c.ratio(), c.exp_i(), c.exp_neg1(),
                        c.exp_sqrtQ() - LinForm(2), c.exp_sqrtD());
        changed = true;
    }
    if (!changed) return std::nullopt;
    return out;
}

}  // namespace

TrigEquation lucas_to_trig(const SeqEquation& eq, const ConversionMode& mode) {
    SeqEquation zf = zero_form(eq);
    ConstraintSet cs = infer_constraints(zf);

    if (mode.classic) {
        // (-1)^k coefficients become Q^k (Q = -1) before inversion
        for (auto& t : zf.lhs) {
            const Coeff& c = t.coeff;
            if (c.exp_neg1().is_zero()) continue;
            t.coeff = Coeff(c.ratio(), c.exp_i(), LinForm(),
                            c.exp_sqrtQ() + c.exp_neg1().scaled(Rational(2)),
                            c.exp_sqrtD());
        }
        zf.lhs = collect(std::move(zf.lhs));
    }

    std::vector<SeqEquation> variants;
    variants.push_back(zf);
    if (auto v = insert_u1_variant(zf)) variants.push_back(*v);
    if (mode.classic) {
        if (auto shifted = classic_shift_variant(zf)) {
            variants.push_back(*shifted);
            if (auto v = insert_u1_variant(*shifted)) variants.push_back(*v);
        }
    }

    std::string first_atom;
    std::string first_failure;
    for (const auto& variant : variants) {
        TrigEquation candidate;
        try {
            candidate = direct_backward(variant, cs, mode);
        } catch (const RadicalResidue& e) {
            if (first_failure.empty()) {
                first_atom = e.atom();
                first_failure = e.what();
            }
            continue;
        }
        // The backward rule is only sound for identities that hold in the
        // generic root algebra; the sampled check is the acceptance gate.
        VerificationReport report = verify_trig_identity(candidate, 100, 1e-9);
        if (report.pass) return candidate;
        if (first_failure.empty()) {
            first_atom = "(-1)";
            first_failure = "candidate '" + render(candidate) +
                            "' fails the sampled angle check";
        }
    }
    if (first_failure.empty()) {
        first_atom = "(-1)";
        first_failure = "no trigonometric counterpart under the backward rule";
    }
    throw RadicalResidue(first_atom, first_failure);
}

}  // namespace lucastrig
