#ifndef ARCNEST_RENDER_HPP
#define ARCNEST_RENDER_HPP

#include <string>

#include "arcnest/diagram.hpp"

namespace arcnest {

// Text picture of the diagram: upper arcs above the vertex row, lower arcs
// below, loops drawn as 'o'.  Arc heights are assigned greedily (shorter
// spans sit lower), colours other than 1 appear as a digit on the arc.
// Output is deterministic for a canonical diagram.
std::string render_ascii(const ArcDiagram& d);

// Standalone SVG document with the same layout conventions; arcs are
// quadratic curves whose height grows with the span, coloured by a fixed
// palette.  Coordinates are integers, so output is byte-deterministic.
std::string render_svg(const ArcDiagram& d);

}  // namespace arcnest

#endif
