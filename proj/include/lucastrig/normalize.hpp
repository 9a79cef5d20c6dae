#pragma once

#include "lucastrig/constraints.hpp"
#include "lucastrig/convert.hpp"
#include "lucastrig/equation.hpp"

namespace lucastrig {

// A sequence identity in publishable shape: canonical zero-form whose
// coefficients are integers times Q^(linear form), D^(integer) and possibly
// a symbolic sign, with the side conditions that make every subscript and
// exponent integral, and the coefficient that was divided out.
struct NormalizedIdentity {
    SeqEquation equation;
    ConstraintSet constraints;
    Coeff scaling;
    bool classic = false;
};

// Side conditions needed to state the identity over the integers: a parity
// constraint for every subscript or rendered exponent with denominator 2.
// Throws UnsupportedDenominator beyond halves.
ConstraintSet infer_constraints(const SeqEquation& eq);

// The by-hand pipeline mechanized: infer side conditions from subscripts,
// divide by the reference term's coefficient, clear radicals under the
// conditions, clear D and integer denominators, re-collect. The reference
// term is the canonically smallest; its coefficient ends up positive.
// Throws RadicalResidue when a coefficient cannot be cleared.
NormalizedIdentity normalize_identity(const SeqEquation& raw,
                                      const ConversionMode& mode = {});

}  // namespace lucastrig
