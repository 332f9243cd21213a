#pragma once

#include <string>

#include "hilden/braid.hpp"

namespace hilden {

// Braid diagram as an SVG 1.1 document: one vertical lane per strand, one
// crossing band per letter (top to bottom, leftmost letter on top). The
// under-strand is drawn with a gap; a positive letter takes the strand
// entering from the left over the crossing. Output is deterministic and
// byte-identical for identical input.
std::string render_braid_svg(const BraidWord& b);

}  // namespace hilden
