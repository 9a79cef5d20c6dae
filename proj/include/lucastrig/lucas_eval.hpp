#pragma once

#include <map>
#include <mutex>
#include <string>

#include "lucastrig/equation.hpp"
#include "lucastrig/rational.hpp"

namespace lucastrig {

// Concrete recurrence parameters. D is the discriminant of x^2 - Px + Q.
struct LucasParams {
    long p = 1;
    long q = -1;

    long d() const { return p * p - 4 * q; }
    std::string label() const {
        return "(" + std::to_string(p) + "," + std::to_string(q) + ")";
    }
    bool operator==(const LucasParams& o) const { return p == o.p && q == o.q; }
};

// The four named families used throughout: Fibonacci/Lucas, Pell,
// Jacobsthal, and 2^n-1 / 2^n+1.
std::vector<LucasParams> default_params_grid();

// Exact evaluation of U_n(P,Q) and V_n(P,Q) by the recurrence
// x_n = P x_{n-1} - Q x_{n-2}, extended to negative indices by the backward
// step x_{n-2} = (P x_{n-1} - x_n) / Q; values for n < 0 are rationals with
// denominator dividing Q^|n|. Memoized per kind; the memo admits concurrent
// readers with insertion serialized by a single lock.
class LucasEvaluator {
public:
    explicit LucasEvaluator(LucasParams params) : params_(params) {}

    const LucasParams& params() const { return params_; }
    Rational value(SeqKind kind, long n) const;

private:
    LucasParams params_;
    mutable std::mutex mutex_;
    mutable std::map<long, Rational> memo_u_;
    mutable std::map<long, Rational> memo_v_;
};

// One-shot convenience (no cross-call memoization).
Rational lucas_eval(const LucasParams& params, SeqKind kind, long n);

}  // namespace lucastrig
