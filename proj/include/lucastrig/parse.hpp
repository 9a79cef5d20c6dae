#pragma once

#include <string>

#include "lucastrig/equation.hpp"

namespace lucastrig {

// Parses "expr = expr" over sin/cos/tan/sinh/cosh calls with linear-form
// angles and rational coefficients. Each side is collected canonically.
// Throws ParseError (with source span) or UnknownFunction.
TrigEquation parse_trig_identity(const std::string& text);

// Parses a sequence identity over U/V calls (F/L accepted as aliases) with
// coefficients built from rationals, D, Q^expr and (-1)^expr.
// Throws ParseError or UnknownSequence.
SeqEquation parse_seq_identity(const std::string& text);

}  // namespace lucastrig
