#include "lucastrig/constraints.hpp"

#include <cassert>
#include <functional>
#include <sstream>

#include "lucastrig/errors.hpp"

namespace lucastrig {

namespace {

// Canonical representative of an integer-coefficient form mod 2.
LinForm mod2_canonical(const LinForm& form) {
    LinForm out;
    Rational c = form.constant();
    assert(is_integer(c));
    if (is_odd_integer(c)) out = out + LinForm(1);
    for (const auto& [name, coeff] : form.coeffs()) {
        assert(is_integer(coeff));
        if (is_odd_integer(coeff)) out = out + LinForm::variable(name);
    }
    return out;
}

}  // namespace

void ConstraintSet::add_parity(const LinForm& form) {
    LinForm canon = mod2_canonical(form);
    if (canon.is_zero()) return;  // trivially satisfied
    if (canon.is_constant()) {
        unsatisfiable_ = true;  // 1 = 0 (mod 2)
        return;
    }
    parity_.insert(canon);
}

void ConstraintSet::add_integrality(const LinForm& form) {
    Integer den = form.denominator_lcm();
    if (den == 1) return;
    if (den == 2) {
        add_parity(form.scaled(Rational(2)));
        return;
    }
    integrality_.insert(form);
}

bool ConstraintSet::satisfied_by(
    const std::map<std::string, long>& assignment) const {
    if (unsatisfiable_) return false;
    for (const auto& p : parity_) {
        if (!is_even_integer(p.eval(assignment))) return false;
    }
    for (const auto& f : integrality_) {
        if (!is_integer(f.eval(assignment))) return false;
    }
    return true;
}

void ConstraintSet::merge(const ConstraintSet& other) {
    for (const auto& p : other.parity_) parity_.insert(p);
    for (const auto& f : other.integrality_) integrality_.insert(f);
    unsatisfiable_ = unsatisfiable_ || other.unsatisfiable_;
}

std::set<std::string> ConstraintSet::variables() const {
    std::set<std::string> out;
    for (const auto& p : parity_) {
        auto vs = p.variables();
        out.insert(vs.begin(), vs.end());
    }
    for (const auto& f : integrality_) {
        auto vs = f.variables();
        out.insert(vs.begin(), vs.end());
    }
    return out;
}

std::vector<std::string> ConstraintSet::describe() const {
    std::vector<std::string> out;
    if (unsatisfiable_) {
        out.push_back("unsatisfiable");
        return out;
    }
    for (const auto& p : parity_) {
        std::ostringstream os;
        bool first = true;
        for (const auto& [name, coeff] : p.coeffs()) {
            if (!first) os << " + ";
            os << name;
            first = false;
        }
        if (p.constant() != 0) os << " + 1";
        os << " even";
        out.push_back(os.str());
    }
    for (const auto& f : integrality_) {
        std::ostringstream os;
        bool first = true;
        for (const auto& [name, coeff] : f.coeffs()) {
            if (!first) os << ", ";
            os << name;
            first = false;
        }
        os << " with " << f.denominator_lcm().get_str() << " | value";
        out.push_back(os.str());
    }
    return out;
}

namespace {

// Enumerates assignments in {0,1,2,3}^vars that satisfy cs and calls fn.
// A linear form with denominators <= 2 has its integrality and parity
// determined by residues mod 4, so this is a complete case split.
bool for_each_residue(const std::set<std::string>& vars,
                      const ConstraintSet& cs,
                      const std::function<bool(const std::map<std::string, long>&)>& fn,
                      bool* any_case) {
    std::vector<std::string> vlist(vars.begin(), vars.end());
    std::map<std::string, long> assignment;
    std::function<bool(std::size_t)> rec = [&](std::size_t idx) -> bool {
        if (idx == vlist.size()) {
            if (!cs.satisfied_by(assignment)) return true;
            *any_case = true;
            return fn(assignment);
        }
        for (long v = 0; v < 4; ++v) {
            assignment[vlist[idx]] = v;
            if (!rec(idx + 1)) return false;
        }
        assignment.erase(vlist[idx]);
        return true;
    };
    return rec(0);
}

bool decide(const LinForm& lf, const ConstraintSet& cs,
            const std::function<bool(const Rational&)>& pred) {
    std::set<std::string> vars = lf.variables();
    auto cvars = cs.variables();
    vars.insert(cvars.begin(), cvars.end());
    bool any_case = false;
    bool all_hold = for_each_residue(
        vars, cs,
        [&](const std::map<std::string, long>& a) { return pred(lf.eval(a)); },
        &any_case);
    // Vacuously true when no residue class satisfies cs; verification
    // reports that situation separately as a vacuous grid.
    return all_hold;
}

}  // namespace

bool is_integer_valued(const LinForm& lf, const ConstraintSet& cs) {
    return decide(lf, cs, [](const Rational& v) { return is_integer(v); });
}

bool is_even_valued(const LinForm& lf, const ConstraintSet& cs) {
    return decide(lf, cs, [](const Rational& v) { return is_even_integer(v); });
}

bool is_odd_valued(const LinForm& lf, const ConstraintSet& cs) {
    return decide(lf, cs, [](const Rational& v) { return is_odd_integer(v); });
}

}  // namespace lucastrig
