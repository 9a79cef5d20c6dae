#pragma once

#include <string>

#include "lucastrig/equation.hpp"

namespace lucastrig {

enum class RenderFormat { Plain, Latex };

struct RenderOptions {
    RenderFormat format = RenderFormat::Plain;
    // Renders U/V as F/L, with Q already specialized away by the classic
    // normalization; affects names only.
    bool classic_names = false;
};

std::string render(const TrigEquation& eq, const RenderOptions& opts = {});
std::string render(const SeqEquation& eq, const RenderOptions& opts = {});

std::string render_linform(const LinForm& lf);

// Display form of a coefficient including radical atoms (i, sqrt(Q),
// sqrt(D)); used for scaling-factor provenance, not reparseable.
std::string render_coeff_debug(const Coeff& c);

}  // namespace lucastrig
