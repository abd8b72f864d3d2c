#ifndef ARCNEST_FORMAT_HPP
#define ARCNEST_FORMAT_HPP

#include <stdexcept>
#include <string>
#include <utility>

#include "arcnest/diagram.hpp"

namespace arcnest {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Diagram grammar, one object per line:
//   matching      M n=<N>; <i>-<j>[:<c>],<i>-<j>[:<c>],...
//   set partition P n=<N>; {<a>,<b>,...}[:<c>]{...}
//   permutation   S n=<N>; <sigma(1)> <sigma(2)> ... <sigma(N)>
// Partition blocks list their elements increasingly; consecutive elements are
// joined by an arc.  A block-level `:<c>` colours every arc of the block; a
// mixed-colour block instead annotates elements (`{1,3:1,5:2}` = arc (1,3)
// colour 1, arc (3,5) colour 2, suffix on the element closing the arc).
// Parsed diagrams are validated and returned in canonical order.
std::pair<ObjectClass, ArcDiagram> parse(const std::string& line);

// Canonical text for a diagram, parseable by parse().  Arcs sorted by opener,
// partition blocks by least element; colour suffixes omitted when colour 1.
std::string serialize(ObjectClass cls, const ArcDiagram& d);

}  // namespace arcnest

#endif
