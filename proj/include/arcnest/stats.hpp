#ifndef ARCNEST_STATS_HPP
#define ARCNEST_STATS_HPP

#include <cstdint>
#include <variant>
#include <vector>

#include "arcnest/diagram.hpp"

namespace arcnest {

// Chain census of one layer: nest[i] counts (i+2)-nestings, cross[i] counts
// (i+2)-crossings, trailing zeros trimmed.  For coloured diagrams the counts
// sum over colour classes (a chain must be monochromatic).
struct Label {
    std::vector<std::uint64_t> nest;
    std::vector<std::uint64_t> cross;

    friend bool operator==(const Label&, const Label&) = default;
    Label swapped() const { return {cross, nest}; }
};

// Permutations carry one label per layer; the upper layer is counted in the
// enhanced sense (loops and shared endpoints contribute), the lower plainly.
struct PermLabel {
    Label upper;
    Label lower;

    friend bool operator==(const PermLabel&, const PermLabel&) = default;
    PermLabel swapped() const { return {upper.swapped(), lower.swapped()}; }
};

// Number of k-subsets of `arcs` forming a k-crossing (openers strictly
// increasing, then closers strictly increasing, all openers before all
// closers).  `enhanced` counts after splitting loops and shared endpoints
// into opener-closer pairs, which makes arcs meeting at a vertex cross and
// nests loops under covering arcs.  Arcs must be one colour class of one
// layer; k >= 1 (k = 1 counts arcs).
std::uint64_t count_k_crossings(const std::vector<Arc>& arcs, int k, bool enhanced);

// Same census for k-nestings (arcs pairwise properly contained).
std::uint64_t count_k_nestings(const std::vector<Arc>& arcs, int k, bool enhanced);

// Full label of one monochromatic-or-mixed arc list (counts split by colour
// and summed).
Label label_of_arcs(const std::vector<Arc>& arcs, bool enhanced);

// Label of a diagram.  Matchings and set partitions yield a Label (their fixed
// points count as loops when `enhanced`); permutations yield a PermLabel and
// ignore `enhanced`.
std::variant<Label, PermLabel> label_of(ObjectClass cls, const ArcDiagram& d, bool enhanced = false);

/// Largest k with a k-crossing: 0 for an arcless diagram, 1 when arcs exist
// but no 2-crossing does.  Permutations take the maximum over both layers.
int max_crossing(ObjectClass cls, const ArcDiagram& d, bool enhanced = false);
int max_nesting(ObjectClass cls, const ArcDiagram& d, bool enhanced = false);

}  // namespace arcnest

#endif
