#ifndef ARCNEST_STRUCTURE_HPP
#define ARCNEST_STRUCTURE_HPP

#include <string>
#include <utility>
#include <vector>

#include "arcnest/diagram.hpp"

namespace arcnest {

// Inclusive vertex range [lo, hi].
struct Interval {
    int lo = 0;
    int hi = 0;

    friend bool operator==(const Interval&, const Interval&) = default;
};

enum class BlockKind { P, OC, OCOC, Inadmissible };

// Shape of one indecomposable interval.  OCOC intervals carry their block
// parameters: k arcs close inside the first closer run, j inside the second
// opener-closer pair of runs, and n >= 1 connecting arcs span the middle.
struct BlockType {
    BlockKind kind = BlockKind::Inadmissible;
    int n = 0, k = 0, j = 0;
    std::string reason;  // set when kind == Inadmissible

    friend bool operator==(const BlockType&, const BlockType&) = default;
};

const char* to_string(BlockKind kind);

// How one original vertex split into two adjacent positions.
enum class SplitKind {
    LoopToPair,             // loop -> opener then closer of its own arc
    TransitoryOpenerFirst,  // enhanced transitory -> outgoing opener, incoming closer
    TransitoryCloserFirst,  // plain transitory -> incoming closer, outgoing opener
};

struct InflationEntry {
    int vertex = 0;
    SplitKind kind{};
    int pos_first = 0;
    int pos_second = 0;
};

struct InflationMap {
    int original_n = 0;
    std::vector<InflationEntry> entries;
    std::vector<int> origin;  // 1-based position -> original vertex

    int original_lo(int pos) const { return origin[static_cast<size_t>(pos)]; }
};

// Splits loops and transitories of a single-layer diagram (arcs in `upper`,
// loops explicit) into opener-closer position pairs.  Enhanced: loops and
// transitories yield opener-then-closer (arcs meeting at the vertex now
// cross).  Plain: transitories yield closer-then-opener (the chain comes
// apart unless a covering arc holds the interval together); loops are
// rejected.  Untouched fixed points keep single positions.
std::pair<ArcDiagram, InflationMap> inflate(const ArcDiagram& d, bool enhanced);

// Inverse of inflate, applied to a relabelled diagram: each recorded pair
// must still sit at its two positions in the recorded orientation (openers
// and closers never move under the relabelling steps).  A merged
// opener-closer pair becomes a loop when both halves belong to one arc and a
// transitory otherwise.  Throws std::logic_error when the orientation is
// violated -- that is a structural bug, not bad input.
ArcDiagram deflate(const ArcDiagram& d, const InflationMap& map);

// Maximal indecomposable intervals of one layer: a cut falls wherever no arc
// spans the gap between consecutive vertices (loops span nothing, so isolated
// fixed points always form their own intervals).
std::vector<Interval> decompose(const ArcDiagram& d, Layer layer = Layer::Upper);

// Maximal runs of opener/closer positions inside an interval, left to right;
// fixed-point positions are skipped.  Each entry is ('O' or 'C', positions).
std::vector<std::pair<char, std::vector<int>>> role_runs(const ArcDiagram& d, Interval iv);

// Classifies one indecomposable interval of an inflated diagram by its runs
// of openers and closers (interleaved fixed points are ignored).  With the
// inflation map available, an interval covering a single original vertex is
// reported as P even when that vertex inflated to a loop pair.
BlockType classify_interval(const ArcDiagram& inflated, Interval iv,
                            const InflationMap* map = nullptr);

// Full single-layer analysis: inflate, decompose, classify every interval.
struct LayerAnalysis {
    ArcDiagram inflated;
    InflationMap map;
    std::vector<Interval> intervals;  // inflated coordinates
    std::vector<BlockType> types;
    bool admissible = true;
};

LayerAnalysis analyze_layer(const ArcDiagram& single_layer, bool enhanced);

struct AdmissibilityReport {
    struct Item {
        Layer layer = Layer::Upper;
        Interval interval;  // original vertex coordinates
        BlockType type;
    };
    bool admissible = true;
    std::vector<Item> intervals;
    std::string reason;  // first failure, empty when admissible
};

// A diagram is treatable by the relabelling procedure exactly when every
// indecomposable interval of its inflated layers is P, OC, or OCOC.
// Matchings and set partitions analyze one layer (fixed points read as loops
// when `enhanced`); permutations analyze the upper layer enhanced and the
// lower layer plainly.
AdmissibilityReport is_admissible(ObjectClass cls, const ArcDiagram& d, bool enhanced = false);

// Separates a permutation diagram into its upper and lower halves.  Both
// halves are single-layer diagrams (arcs in `upper`); loops stay with the
// upper half, and vertices belonging only to the other layer remain as
// placeholder fixed points so positions are preserved.
std::pair<ArcDiagram, ArcDiagram> split_permutation(const ArcDiagram& d);

// Reassembles a permutation from transformed halves, checking per-vertex
// role compatibility (throws std::invalid_argument on mismatched halves).
ArcDiagram stitch_permutation(const ArcDiagram& upper, const ArcDiagram& lower);

}  // namespace arcnest

#endif
