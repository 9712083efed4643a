#pragma once

#include <string>

#include "braidvar/ruling.hpp"
#include "braidvar/weave.hpp"

namespace braidvar::cli {

// Layers stacked top to bottom, letters evenly spaced. Trivalent, cup and
// hexavalent vertices are drawn as elements of class "trivalent", "cup" and
// "hexavalent". Output depends only on the input.
std::string render_weave(const Morphism& m);

// Front of beta on n strands; switches are dotted (class "switch"),
// departures marked with class "departure".
std::string render_ruling(const NormalRuling& rho);

}  // namespace braidvar::cli
