#pragma once

#include <string>

#include "tilesum/certificate.hpp"
#include "tilesum/edge_map.hpp"

namespace tilesum {

/// Lattice drawing with the highest row on top. Horizontal edges sit on
/// the lattice lines, vertical edges on the lines between them; each edge
/// shows its color glyph, prefixed by the value when it is not 1. Several
/// colors on one edge are joined with '+'. The zero map renders as "".
std::string render_ascii(const EdgeMap& f);

/// One cell per tile position with the highest row on top. A cell shows the
/// tile name, or "south/north" glyphs plus the east side for unnamed tiles;
/// stacked tiles are joined with '+', empty positions are '.'.
std::string render_ascii(const Certificate& cert);

/// Unit square per placement (exactly one <rect> each) with the four side
/// colors written inside.
std::string render_svg(const Certificate& cert);

/// One line segment per colored edge, labelled with glyph and value.
std::string render_svg(const EdgeMap& f);

}  // namespace tilesum
