#include "lucastrig/linform.hpp"

#include "lucastrig/errors.hpp"

namespace lucastrig {

Rational pow_rational(const Rational& r, long e) {
    if (e == 0) return Rational(1);
    Rational base = e > 0 ? r : Rational(1) / r;
    unsigned long k = e > 0 ? static_cast<unsigned long>(e)
                            : static_cast<unsigned long>(-e);
    Rational out(1);
    Rational acc = base;
    while (k) {
        if (k & 1) out *= acc;
        k >>= 1;
        if (k) acc *= acc;
    }
    return out;
}

std::string to_string(const Rational& r) { return r.get_str(); }

long to_long(const Integer& z) { return z.get_si(); }

LinForm LinForm::variable(const std::string& name, Rational coeff) {
    LinForm lf;
    lf.set_coeff(name, std::move(coeff));
    return lf;
}

Rational LinForm::coeff(const std::string& name) const {
    auto it = coeffs_.find(name);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

void LinForm::set_coeff(const std::string& name, Rational value) {
    value.canonicalize();
    if (value == 0) {
        coeffs_.erase(name);
    } else {
        coeffs_[name] = std::move(value);
    }
}

LinForm LinForm::operator+(const LinForm& o) const {
    LinForm out = *this;
    out.constant_ += o.constant_;
    for (const auto& [name, c] : o.coeffs_) {
        out.set_coeff(name, out.coeff(name) + c);
    }
    return out;
}

LinForm LinForm::operator-(const LinForm& o) const { return *this + (-o); }

LinForm LinForm::operator-() const { return scaled(Rational(-1)); }

LinForm LinForm::scaled(const Rational& s) const {
    LinForm out;
    if (s == 0) return out;
    out.constant_ = constant_ * s;
    for (const auto& [name, c] : coeffs_) {
        out.coeffs_[name] = c * s;
    }
    return out;
}

Rational LinForm::eval(const std::map<std::string, long>& assignment) const {
    Rational acc = constant_;
    for (const auto& [name, c] : coeffs_) {
        auto it = assignment.find(name);
        if (it == assignment.end()) throw UnboundVariable(name);
        acc += c * it->second;
    }
    return acc;
}

std::set<std::string> LinForm::variables() const {
    std::set<std::string> out;
    for (const auto& [name, c] : coeffs_) out.insert(name);
    return out;
}

Integer LinForm::denominator_lcm() const {
    Integer l = constant_.get_den();
    for (const auto& [name, c] : coeffs_) {
        Integer d = c.get_den();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    return l;
}

int compare(const LinForm& a, const LinForm& b) {
    auto ia = a.coeffs_.begin();
    auto ib = b.coeffs_.begin();
    while (ia != a.coeffs_.end() || ib != b.coeffs_.end()) {
        // The side whose next variable is lexicographically earlier has a
        // nonzero coefficient where the other has zero.
        if (ia == a.coeffs_.end()) return Rational(0) > ib->second ? -1 : 1;
        if (ib == b.coeffs_.end()) return ia->second > Rational(0) ? -1 : 1;
        if (ia->first < ib->first) return ia->second > Rational(0) ? -1 : 1;
        if (ib->first < ia->first) return Rational(0) > ib->second ? -1 : 1;
        if (ia->second != ib->second) return ia->second > ib->second ? -1 : 1;
        ++ia;
        ++ib;
    }
    if (a.constant_ != b.constant_) return a.constant_ > b.constant_ ? -1 : 1;
    return 0;
}

}  // namespace lucastrig
