#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lucastrig/linform.hpp"

namespace lucastrig {

// Parity and integrality side conditions on index variables, e.g. the
// "m and n of the same parity" assumption behind half-index subscripts.
//
// Parity forms are canonicalized mod 2 (coefficients and constant reduced
// to {0,1}), so m-n, n-m and m+n all denote the same condition and
// structural set equality is meaningful.
class ConstraintSet {
public:
    // Asserts form = 0 (mod 2). The form must have integer coefficients.
    void add_parity(const LinForm& form);
    // Asserts that form takes integer values.
    void add_integrality(const LinForm& form);

    const std::set<LinForm>& parity() const { return parity_; }
    const std::set<LinForm>& integrality() const { return integrality_; }

    bool empty() const {
        return parity_.empty() && integrality_.empty() && !unsatisfiable_;
    }
    bool unsatisfiable() const { return unsatisfiable_; }

    bool satisfied_by(const std::map<std::string, long>& assignment) const;

    void merge(const ConstraintSet& other);

    bool operator==(const ConstraintSet& o) const {
        return parity_ == o.parity_ && integrality_ == o.integrality_ &&
               unsatisfiable_ == o.unsatisfiable_;
    }

    std::set<std::string> variables() const;

    // Human-readable one-liners, e.g. "m + n even".
    std::vector<std::string> describe() const;

private:
    std::set<LinForm> parity_;
    std::set<LinForm> integrality_;
    bool unsatisfiable_ = false;
};

// Decision procedures for the value class of a linear form over all integer
// assignments satisfying cs. Denominators up to 2 are supported, so the
// answer is determined by assignments mod 4 and decided by enumeration over
// the (few) variables involved.
bool is_integer_valued(const LinForm& lf, const ConstraintSet& cs);
bool is_even_valued(const LinForm& lf, const ConstraintSet& cs);
bool is_odd_valued(const LinForm& lf, const ConstraintSet& cs);

}  // namespace lucastrig
