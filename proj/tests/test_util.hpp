#pragma once

#include <complex>
#include <map>
#include <string>

#include "lucastrig/coeff.hpp"
#include "lucastrig/linform.hpp"

namespace lucastrig::testing {

// Independent complex-number semantics for a Coeff at a concrete Q < 0 and
// D > 0, with sqrt(Q) taken as i*sqrt(|Q|). Used as an oracle against the
// structural ring arithmetic; deliberately does not share code with it.
inline std::complex<double> complex_value(const Coeff& c,
                                          const std::map<std::string, long>& assignment,
                                          long q, long d) {
    auto exp_of = [&](const LinForm& lf) { return lf.eval(assignment).get_d(); };
    std::complex<double> i(0.0, 1.0);
    std::complex<double> sqrt_q = i * std::sqrt(static_cast<double>(-q));
    double sqrt_d = std::sqrt(static_cast<double>(d));
    std::complex<double> out(c.ratio().get_d(), 0.0);
    out *= std::pow(i, std::complex<double>(exp_of(c.exp_i()), 0.0));
    out *= std::pow(std::complex<double>(-1.0, 0.0),
                    std::complex<double>(exp_of(c.exp_neg1()), 0.0));
    out *= std::pow(sqrt_q, std::complex<double>(exp_of(c.exp_sqrtQ()), 0.0));
    out *= std::pow(std::complex<double>(sqrt_d, 0.0),
                    std::complex<double>(exp_of(c.exp_sqrtD()), 0.0));
    return out;
}

inline LinForm var(const std::string& name) { return LinForm::variable(name); }

}  // namespace lucastrig::testing
