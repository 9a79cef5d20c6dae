#pragma once

#include <map>
#include <optional>
#include <string>

#include "lucastrig/constraints.hpp"
#include "lucastrig/linform.hpp"
#include "lucastrig/rational.hpp"

namespace lucastrig {

// Element of the multiplicative coefficient ring
//
//     ratio * i^(exp_i) * (-1)^(exp_neg1) * sqrt(Q)^(exp_sqrtQ) * sqrt(D)^(exp_sqrtD)
//
// with linear-form exponents. This is where every substitution rule does its
// bookkeeping. Q and D are not separate atoms: they are exactly sqrt(Q)^2 and
// sqrt(D)^2, and render as integer powers when the exponent is even.
//
// Normal form: the constant part of exp_i lies in [0,2) with i^2 folded into
// the sign of ratio; the constant part of exp_neg1 is folded likewise, so it
// lies in [0,1) or (1,2) for non-integer constants and is 0 for integers.
// Symbolic exponent parts are never folded here; that requires parity
// constraints and happens in reduce_under.
class Coeff {
public:
    Coeff() = default;
    explicit Coeff(Rational ratio) : ratio_(std::move(ratio)) { normalize(); }
    Coeff(Rational ratio, LinForm exp_i, LinForm exp_neg1, LinForm exp_sqrtQ,
          LinForm exp_sqrtD)
        : ratio_(std::move(ratio)),
          exp_i_(std::move(exp_i)),
          exp_neg1_(std::move(exp_neg1)),
          exp_sqrtQ_(std::move(exp_sqrtQ)),
          exp_sqrtD_(std::move(exp_sqrtD)) {
        normalize();
    }

    static Coeff one() { return Coeff(Rational(1)); }

    const Rational& ratio() const { return ratio_; }
    const LinForm& exp_i() const { return exp_i_; }
    const LinForm& exp_neg1() const { return exp_neg1_; }
    const LinForm& exp_sqrtQ() const { return exp_sqrtQ_; }
    const LinForm& exp_sqrtD() const { return exp_sqrtD_; }

    bool is_rational() const {
        return exp_i_.is_zero() && exp_neg1_.is_zero() &&
               exp_sqrtQ_.is_zero() && exp_sqrtD_.is_zero();
    }

    Coeff operator*(const Coeff& o) const;
    Coeff operator/(const Coeff& o) const;
    Coeff inverse() const;
    Coeff pow(long e) const;
    Coeff scaled(const Rational& s) const;

    bool operator==(const Coeff& o) const {
        return ratio_ == o.ratio_ && exp_i_ == o.exp_i_ &&
               exp_neg1_ == o.exp_neg1_ && exp_sqrtQ_ == o.exp_sqrtQ_ &&
               exp_sqrtD_ == o.exp_sqrtD_;
    }
    bool operator!=(const Coeff& o) const { return !(*this == o); }

    // Key identifying the symbolic part; terms merge only within a key.
    std::tuple<const LinForm&, const LinForm&, const LinForm&, const LinForm&>
    atom_key() const {
        return {exp_sqrtQ_, exp_neg1_, exp_i_, exp_sqrtD_};
    }

    // Clears radicals under the given side conditions:
    //   - i^L with L even-valued becomes (-1)^(L/2),
    //   - (-1)^L with determined parity becomes a concrete sign,
    //   - sqrt(Q)^L is kept only if even-valued (renders as Q^(L/2)),
    //   - sqrt(D)^L must be an even integer constant (renders as D^(L/2)).
    // Throws RadicalResidue naming the offending atom otherwise. A residual
    // symbolic (-1)^L with integer L is not a radical and is kept.
    Coeff reduce_under(const ConstraintSet& cs) const;

    // reduce_under followed by the classic specialization Q = -1, D = 5:
    // Q-powers move into the (-1) exponent and D-powers into the ratio.
    Coeff reduce_classic(const ConstraintSet& cs) const;

    // Fully rational value under cs, if all atoms clear; nullopt otherwise.
    std::optional<Rational> rational_under(const ConstraintSet& cs) const;

    // Exact value at an integer assignment for concrete Q and D. Requires
    // the i and sqrt exponents to evaluate even; throws Error otherwise.
    Rational eval_exact(const std::map<std::string, long>& assignment,
                        const Rational& q_value, const Rational& d_value) const;

    std::set<std::string> variables() const;

private:
    void normalize();

    Rational ratio_ = Rational(1);
    LinForm exp_i_;
    LinForm exp_neg1_;
    LinForm exp_sqrtQ_;
    LinForm exp_sqrtD_;
};

// Deterministic order on coefficients (used to break term-order ties).
int compare(const Coeff& a, const Coeff& b);

}  // namespace lucastrig
