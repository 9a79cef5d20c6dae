#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lucastrig/constraints.hpp"
#include "lucastrig/equation.hpp"
#include "lucastrig/lucas_eval.hpp"

namespace lucastrig {

struct SeqCounterexample {
    LucasParams params;
    std::map<std::string, long> assignment;
    Rational lhs;
    Rational rhs;
};

struct TrigCounterexample {
    std::map<std::string, double> assignment;
    double lhs = 0;
    double rhs = 0;
};

struct VerificationReport {
    bool pass = false;
    long cases_checked = 0;
    long skipped = 0;  // assignments rejected by the constraint set
    std::optional<SeqCounterexample> seq_counterexample;
    std::optional<TrigCounterexample> trig_counterexample;
};

struct IndexRange {
    long lo = -8;
    long hi = 8;
};

struct VerifyOptions {
    IndexRange range;
    // Desk-scale exhaustiveness: the full grid over three variables in
    // [-8,8] is a few thousand assignments per family.
    std::size_t max_variables = 3;
    // Whether params with D = 0 are skipped or rejected when the identity
    // mentions D.
    bool skip_degenerate_params = false;
};

// Evaluates the identity exactly at every constraint-satisfying integer
// assignment over the range, for every parameter set. Fails with the first
// counterexample in deterministic order. Throws VacuousGrid when no
// assignment satisfies the constraints, DegenerateParams on D = 0 (unless
// skipping is enabled).
VerificationReport verify_seq_identity(const SeqEquation& eq,
                                       const ConstraintSet& constraints,
                                       const std::vector<LucasParams>& params_list,
                                       const VerifyOptions& options = {});

// Default seed for the angle sampler; fixed so reports are reproducible.
inline constexpr std::uint32_t kTrigSamplerSeed = 0x1d5a917u;

// Floating sanity check: samples pseudo-random angles in [-pi, pi] (fixed
// seed, platform-independent generator) and requires |lhs - rhs| <= tol at
// every sample. Inputs containing tan are resampled away from cosine zeros
// (|cos| < 0.1).
VerificationReport verify_trig_identity(const TrigEquation& eq,
                                        int samples = 100,
                                        double tolerance = 1e-9,
                                        std::uint32_t seed = 0);

// Exact check that q^(-r) * (U_{a+r} U_{d+r} - U_{b+r} U_{c+r}) is the
// constant U_a U_d - U_b U_c for all r in range. Requires a + d = b + c
// (throws PreconditionViolated otherwise).
VerificationReport constant_shift_check(long a, long b, long c, long d,
                                        const std::vector<LucasParams>& params_list,
                                        IndexRange r_range);

}  // namespace lucastrig
