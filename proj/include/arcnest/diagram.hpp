#ifndef ARCNEST_DIAGRAM_HPP
#define ARCNEST_DIAGRAM_HPP

#include <compare>
#include <string>
#include <vector>

namespace arcnest {

// An arc between two vertices, drawn above or below the vertex line depending
// on which list of the diagram it lives in.  A loop is stored with
// open == close in ArcDiagram::loops, never here.
struct Arc {
    int open = 0;
    int close = 0;
    int colour = 1;

    friend auto operator<=>(const Arc&, const Arc&) = default;
};

// Arc annotated diagram on vertices 1..n.  Matchings and set partitions use
// only `upper`; permutations use both layers plus `loops` (vertices v with
// sigma(v) == v, drawn as a small upper loop).  Fixed points of matchings and
// partitions are implicit: any vertex not touched by an arc.
struct ArcDiagram {
    int n = 0;
    std::vector<Arc> upper;
    std::vector<Arc> lower;
    std::vector<Arc> loops;  // open == close == vertex

    friend bool operator==(const ArcDiagram&, const ArcDiagram&) = default;
};

enum class ObjectClass { Matching, SetPartition, Permutation };

enum class Layer { Upper, Lower };

// Role of a vertex within one layer, a pure function of arc incidence.
// Transitory = right end of one arc then left end of another (degree 2).
// Loop marks a vertex carrying an upper loop: operationally an opener
// immediately followed by a closer in the enhanced reading.
enum class VertexRole { FixedPoint, Opener, Closer, Transitory, Loop };

const char* to_string(ObjectClass cls);
const char* to_string(VertexRole role);

// Sorts arcs by opener (and loops by vertex).  All public operations expect
// and preserve this canonical order.
void canonicalize(ArcDiagram& d);

// Checks the class invariants; throws std::invalid_argument on violation:
// endpoints in range, open < close, vertex degree fits the class (matchings
// have no transitories, partitions are unions of increasing chains,
// permutation arcs define a bijection).
void validate(ObjectClass cls, const ArcDiagram& d);

// Per-vertex roles for one layer (loops report VertexRole::Loop and live in
// the upper layer only).
std::vector<VertexRole> roles(const ArcDiagram& d, Layer layer);

// One-line form of the permutation encoded by the diagram: sigma(a) = b for
// each upper arc (a,b), sigma(b) = a for each lower arc (a,b), sigma(v) = v
// for loops.
std::vector<int> to_one_line(const ArcDiagram& d);

// Inverse of to_one_line: builds upper/lower/loops from sigma.
ArcDiagram from_one_line(const std::vector<int>& sigma);

// True if any vertex of the layer is a transitory.
bool has_transitory(const ArcDiagram& d, Layer layer);

// Vertices of [1..n] not incident to any arc or loop in the given layer.
std::vector<int> isolated_vertices(const ArcDiagram& d, Layer layer);

// Matchings and set partitions keep fixed points implicit.  In the enhanced
// reading every fixed point is drawn as a loop; this returns a copy with
// loops materialized so downstream code can treat loops uniformly.
ArcDiagram with_fixed_points_as_loops(const ArcDiagram& d);

// Inverse of the above for serializing matching/partition images: drops the
// loop list (the vertices become implicit fixed points again).
ArcDiagram with_loops_as_fixed_points(const ArcDiagram& d);

}  // namespace arcnest

#endif
