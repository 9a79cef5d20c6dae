#include "lucastrig/lucas_eval.hpp"

namespace lucastrig {

std::vector<LucasParams> default_params_grid() {
    return {{1, -1}, {2, -1}, {1, -2}, {3, 2}};
}

Rational LucasEvaluator::value(SeqKind kind, long n) const {
    std::lock_guard<std::mutex> lock(mutex_);
    auto& memo = kind == SeqKind::U ? memo_u_ : memo_v_;
    if (memo.empty()) {
        if (kind == SeqKind::U) {
            memo[0] = Rational(0);
            memo[1] = Rational(1);
        } else {
            memo[0] = Rational(2);
            memo[1] = Rational(params_.p);
        }
    }
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;

    Rational p(params_.p), q(params_.q);
    if (n > 1) {
        long top = memo.rbegin()->first;
        for (long m = top + 1; m <= n; ++m) {
            memo[m] = p * memo[m - 1] - q * memo[m - 2];
        }
    } else {
        long bottom = memo.begin()->first;
        for (long m = bottom - 1; m >= n; --m) {
            memo[m] = (p * memo[m + 1] - memo[m + 2]) / q;
        }
    }
    return memo[n];
}

Rational lucas_eval(const LucasParams& params, SeqKind kind, long n) {
    LucasEvaluator ev(params);
    return ev.value(kind, n);
}

}  // namespace lucastrig
