#include "lucastrig/verify.hpp"

#include <cmath>
#include <random>

#include "lucastrig/errors.hpp"

namespace lucastrig {

namespace {

bool mentions_d(const SeqEquation& eq) {
    for (const auto* side : {&eq.lhs, &eq.rhs}) {
        for (const auto& t : *side) {
            if (!t.coeff.exp_sqrtD().is_zero()) return true;
        }
    }
    return false;
}

// Sum of one side at an integer assignment, exact. Returns nullopt when a
// subscript does not evaluate to an integer (the assignment is outside the
// identity's domain).
std::optional<Rational> eval_side(const std::vector<SeqTerm>& terms,
                                  const std::map<std::string, long>& assignment,
                                  const LucasEvaluator& ev) {
    Rational q(ev.params().q), d(ev.params().d());
    Rational sum(0);
    for (const auto& t : terms) {
        Rational value = t.coeff.eval_exact(assignment, q, d);
        for (const auto& f : t.factors) {
            Rational sub = f.arg.eval(assignment);
            if (!is_integer(sub)) return std::nullopt;
            Rational base = ev.value(f.kind, to_long(Integer(sub.get_num())));
            value *= pow_rational(base, f.power);
        }
        sum += value;
    }
    return sum;
}

}  // namespace

VerificationReport verify_seq_identity(const SeqEquation& eq,
                                       const ConstraintSet& constraints,
                                       const std::vector<LucasParams>& params_list,
                                       const VerifyOptions& options) {
    auto vars_set = equation_variables(eq);
    std::vector<std::string> vars(vars_set.begin(), vars_set.end());
    if (vars.size() > options.max_variables) {
        throw Error("identity has " + std::to_string(vars.size()) +
                    " free index variables; the grid is capped at " +
                    std::to_string(options.max_variables));
    }
    if (params_list.empty()) throw Error("empty parameter list");
    if (options.range.lo > options.range.hi) throw Error("empty index range");

    VerificationReport report;
    bool identity_mentions_d = mentions_d(eq);

    for (const auto& params : params_list) {
        if (params.q == 0) throw Error("Q must be nonzero");
        if (params.d() == 0 && identity_mentions_d) {
            if (options.skip_degenerate_params) continue;
            throw DegenerateParams("parameters " + params.label() +
                                   " have D = 0 but the identity mentions D");
        }
        LucasEvaluator ev(params);

        std::map<std::string, long> assignment;
        // Lexicographic walk over the grid so the first counterexample is
        // schedule-independent.
        std::function<bool()> walk = [&]() -> bool {
            std::size_t depth = assignment.size();
            if (depth == vars.size()) {
                if (!constraints.satisfied_by(assignment)) {
                    ++report.skipped;
                    return true;
                }
                auto lhs = eval_side(eq.lhs, assignment, ev);
                auto rhs = eval_side(eq.rhs, assignment, ev);
                if (!lhs || !rhs) {
                    ++report.skipped;
                    return true;
                }
                ++report.cases_checked;
                if (*lhs != *rhs) {
                    report.seq_counterexample =
                        SeqCounterexample{params, assignment, *lhs, *rhs};
                    return false;
                }
                return true;
            }
            const std::string& var = vars[depth];
            for (long v = options.range.lo; v <= options.range.hi; ++v) {
                assignment[var] = v;
                if (!walk()) {
                    return false;
                }
            }
            assignment.erase(var);
            return true;
        };
        if (!walk()) {
            report.pass = false;
            return report;
        }
    }

    if (report.cases_checked == 0) {
        throw VacuousGrid("no assignment in the range satisfies the constraints");
    }
    report.pass = true;
    return report;
}

namespace {

double eval_trig_factor(TrigKind kind, double x) {
    switch (kind) {
        case TrigKind::Sin: return std::sin(x);
        case TrigKind::Cos: return std::cos(x);
        case TrigKind::Tan: return std::tan(x);
        case TrigKind::Sinh: return std::sinh(x);
        case TrigKind::Cosh: return std::cosh(x);
    }
    return 0;
}

double eval_trig_side(const std::vector<TrigTerm>& terms,
                      const std::map<std::string, double>& assignment) {
    double sum = 0;
    for (const auto& t : terms) {
        if (!t.coeff.is_rational()) {
            throw Error("non-rational coefficient in trigonometric identity");
        }
        double value = t.coeff.ratio().get_d();
        for (const auto& f : t.factors) {
            double arg = f.arg.constant().get_d();
            for (const auto& [name, c] : f.arg.coeffs()) {
                arg += c.get_d() * assignment.at(name);
            }
            value *= std::pow(eval_trig_factor(f.kind, arg), f.power);
        }
        sum += value;
    }
    return sum;
}

// Angles where some tan argument sits near a pole make the sample useless.
bool near_tan_pole(const TrigEquation& eq,
                   const std::map<std::string, double>& assignment) {
    for (const auto* side : {&eq.lhs, &eq.rhs}) {
        for (const auto& t : *side) {
            for (const auto& f : t.factors) {
                if (f.kind != TrigKind::Tan) continue;
                double arg = f.arg.constant().get_d();
                for (const auto& [name, c] : f.arg.coeffs()) {
                    arg += c.get_d() * assignment.at(name);
                }
                if (std::fabs(std::cos(arg)) < 0.1) return true;
            }
        }
    }
    return false;
}

}  // namespace

VerificationReport verify_trig_identity(const TrigEquation& eq, int samples,
                                        double tolerance, std::uint32_t seed) {
    if (samples < 1) throw Error("samples must be >= 1");
    if (!(tolerance > 0)) throw Error("tolerance must be positive");
    if (seed == 0) seed = kTrigSamplerSeed;

    auto vars_set = equation_variables(eq);
    std::vector<std::string> vars(vars_set.begin(), vars_set.end());
    std::mt19937 rng(seed);
    constexpr double kPi = 3.14159265358979323846;
    auto draw = [&]() {
        // uniform in [-pi, pi); mt19937 output is platform-independent
        return -kPi + 2.0 * kPi * (rng() / 4294967296.0);
    };

    VerificationReport report;
    for (int s = 0; s < samples; ++s) {
        std::map<std::string, double> assignment;
        for (int tries = 0; tries < 1000; ++tries) {
            for (const auto& v : vars) assignment[v] = draw();
            if (!near_tan_pole(eq, assignment)) break;
            ++report.skipped;
        }
        double lhs = eval_trig_side(eq.lhs, assignment);
        double rhs = eval_trig_side(eq.rhs, assignment);
        ++report.cases_checked;
        if (std::fabs(lhs - rhs) > tolerance || std::isnan(lhs) || std::isnan(rhs)) {
            report.pass = false;
            report.trig_counterexample = TrigCounterexample{assignment, lhs, rhs};
            return report;
        }
    }
    report.pass = true;
    return report;
}

VerificationReport constant_shift_check(long a, long b, long c, long d,
                                        const std::vector<LucasParams>& params_list,
                                        IndexRange r_range) {
    if (a + d != b + c) {
        throw PreconditionViolated(
            "constant-shift check needs a + d = b + c, got " + std::to_string(a) +
            " + " + std::to_string(d) + " != " + std::to_string(b) + " + " +
            std::to_string(c));
    }
    VerificationReport report;
    for (const auto& params : params_list) {
        if (params.q == 0) throw Error("Q must be nonzero");
        LucasEvaluator ev(params);
        Rational q(params.q);
        auto g = [&](long r) {
            Rational diff = ev.value(SeqKind::U, a + r) * ev.value(SeqKind::U, d + r) -
                            ev.value(SeqKind::U, b + r) * ev.value(SeqKind::U, c + r);
            return pow_rational(q, -r) * diff;
        };
        Rational base = g(0);
        for (long r = r_range.lo; r <= r_range.hi; ++r) {
            ++report.cases_checked;
            Rational value = g(r);
            if (value != base) {
                report.pass = false;
                report.seq_counterexample =
                    SeqCounterexample{params, {{"r", r}}, value, base};
                return report;
            }
        }
    }
    report.pass = true;
    return report;
}

}  // namespace lucastrig
