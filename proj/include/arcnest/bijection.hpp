#ifndef ARCNEST_BIJECTION_HPP
#define ARCNEST_BIJECTION_HPP

#include <stdexcept>

#include "arcnest/diagram.hpp"
#include "arcnest/structure.hpp"

namespace arcnest {

// Raised when the requested transform is undefined for the given object
// (an interval falls outside the supported shapes, or a colour class breaks
// the preconditions of the per-class semantics).
struct InadmissibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// How per-arc colours interact with the transform: Global relabels the
// underlying diagram once and lets colours ride on their arcs; PerClass
// requires the colour classes to be vertex-disjoint and relabels each class
// independently on its own support.
enum class ColourSemantics { Global, PerClass };

struct PtrOptions {
    bool step4_openers = false;  // experimental: final step reverses the
                                 // connecting arcs' openers instead of closers
    ColourSemantics semantics = ColourSemantics::Global;
};

// Relabels one classified interval of an inflated diagram in place.
//   P     -- identity.
//   OC    -- the closer positions are reversed.
//   OCOC  -- first-run opener positions reversed, then last-run closer
//            positions reversed, then the connecting arcs' closers reversed
//            among the positions they occupy.
// Positions themselves never move; only arc endpoints are relabelled, so no
// renumbering pass is needed afterwards.
void ptr_interval(ArcDiagram& inflated, Interval iv, const BlockType& type,
                  const PtrOptions& opts = {});

struct PtrResult {
    ObjectClass cls = ObjectClass::Matching;  // class of the image
    ArcDiagram diagram;
};

// The full involution.  Throws InadmissibleError (with the offending
// interval in the message) when the object is not admissible.  Enhanced
// matchings are not closed under the transform: their images may contain
// transitory vertices, in which case the result class is SetPartition.
PtrResult ptr(ObjectClass cls, const ArcDiagram& d, bool enhanced = false,
              const PtrOptions& opts = {});

}  // namespace arcnest

#endif
