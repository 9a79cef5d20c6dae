#pragma once

#include "lucastrig/constraints.hpp"
#include "lucastrig/equation.hpp"

namespace lucastrig {

struct ConversionMode {
    enum class Family { Circular, Hyperbolic };
    Family family = Family::Circular;
    // Classic mode targets Fibonacci/Lucas numbers: parameters are fixed at
    // P = 1, Q = -1 (so D = 5), identities render with F and L, and sign
    // coefficients (-1)^k are absorbed as Q^k.
    bool classic = false;
};

// Substitutes the Lucas images of the trigonometric factors over a linear
// form subscript n equal to the angle:
//
//   circular:    sin -> sqrt(D)/(2i) (-1/sqrt(Q))^n U_n,
//                cos -> 1/2 (-1/sqrt(Q))^n V_n,
//                tan -> eliminated first by multiplying the zero-form with
//                       the cosines it implicitly divides by
//   hyperbolic:  sinh -> sqrt(D)/2 (-1/sqrt(Q))^n U_n,
//                cosh -> 1/2 (-1/sqrt(Q))^n V_n
//
// Returns the expanded, collected zero-form with full coefficient
// bookkeeping; clearing radicals and inferring side conditions is the
// normalization pass. Throws UnsupportedFunction on functions outside the
// selected family.
SeqEquation trig_to_lucas_raw(const TrigEquation& eq, const ConversionMode& mode);

// One-step circular-to-hyperbolic conversion: sin -> i sinh, cos -> cosh,
// computed in the coefficient ring so squared sines flip sign on their own.
// tan factors are eliminated by cross-multiplication first. Throws
// ResidualImaginary when a term keeps an odd power of i after collection
// (mixed sine parity), and UnsupportedFunction on hyperbolic input.
TrigEquation trig_to_hyperbolic(const TrigEquation& eq);

// Inverse substitution: U_n -> 2i/sqrt(D) (-sqrt(Q))^n sin(n) and
// V_n -> 2 (-sqrt(Q))^n cos(n) (sinh/cosh in the hyperbolic family), then
// division by the reference coefficient. Succeeds when every residual
// coefficient is rational under the inferred side conditions.
//
// Printed sequence identities sometimes erase U_1 = 1 factors; when the
// direct image fails its numeric check, the converter retries with U_1^2
// insertions (and, in classic mode, the sign rewrite (-1)^k = -(-1)^(k-1))
// before giving up. Every returned identity has passed the sampled check.
// Throws RadicalResidue when no variant works.
TrigEquation lucas_to_trig(const SeqEquation& eq, const ConversionMode& mode);

}  // namespace lucastrig
