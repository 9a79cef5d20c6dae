#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "lucastrig/rational.hpp"

namespace lucastrig {

// Linear form over named variables with exact rational coefficients,
// e.g. (m - n)/2 or 2*n + 1. Used for angles, subscripts and symbolic
// exponents alike. Zero coefficients are never stored.
class LinForm {
public:
    LinForm() = default;
    explicit LinForm(Rational constant) : constant_(std::move(constant)) {
        constant_.canonicalize();
    }
    explicit LinForm(long constant) : constant_(make_rational(constant)) {}

    static LinForm variable(const std::string& name, Rational coeff = Rational(1));

    const Rational& constant() const { return constant_; }
    const std::map<std::string, Rational>& coeffs() const { return coeffs_; }
    Rational coeff(const std::string& name) const;

    bool is_constant() const { return coeffs_.empty(); }
    bool is_zero() const { return coeffs_.empty() && constant_ == 0; }

    LinForm operator+(const LinForm& o) const;
    LinForm operator-(const LinForm& o) const;
    LinForm operator-() const;
    LinForm scaled(const Rational& s) const;

    bool operator==(const LinForm& o) const {
        return constant_ == o.constant_ && coeffs_ == o.coeffs_;
    }
    bool operator!=(const LinForm& o) const { return !(*this == o); }

    // Exact evaluation at an integer assignment. Throws UnboundVariable.
    Rational eval(const std::map<std::string, long>& assignment) const;

    std::set<std::string> variables() const;

    // lcm of all coefficient and constant denominators (1 for integer forms).
    Integer denominator_lcm() const;

    bool has_integer_coeffs() const { return denominator_lcm() == 1; }

private:
    void set_coeff(const std::string& name, Rational value);

    Rational constant_ = Rational(0);
    std::map<std::string, Rational> coeffs_;

    friend int compare(const LinForm& a, const LinForm& b);
};

// Total order used for canonical sorting. Variables are visited in name
// order; a larger coefficient sorts first (so 3n < n < -n and m < m+n),
// then a larger constant sorts first (n+1 < n < n-1).
int compare(const LinForm& a, const LinForm& b);

inline bool operator<(const LinForm& a, const LinForm& b) {
    return compare(a, b) < 0;
}

}  // namespace lucastrig
