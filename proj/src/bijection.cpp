#include "arcnest/bijection.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace arcnest {

namespace {

// Relabels arc endpoints by the order-reversing involution of `positions`:
// the i-th smallest position becomes the i-th largest.  Endpoints outside
// the set are untouched.
void reverse_positions(std::vector<Arc>& arcs, std::vector<int> positions) {
    if (positions.size() < 2) return;
    std::sort(positions.begin(), positions.end());
    auto remap = [&](int p) {
        auto it = std::lower_bound(positions.begin(), positions.end(), p);
        if (it == positions.end() || *it != p) return p;
        return positions[positions.size() - 1 - static_cast<size_t>(it - positions.begin())];
    };
    for (Arc& a : arcs) {
        a.open = remap(a.open);
        a.close = remap(a.close);
    }
}

bool inside(const Arc& a, Interval iv) { return a.open >= iv.lo && a.close <= iv.hi; }

}  // namespace

void ptr_interval(ArcDiagram& inflated, Interval iv, const BlockType& type,
                  const PtrOptions& opts) {
    switch (type.kind) {
        case BlockKind::P:
            return;
        case BlockKind::OC: {
            std::vector<int> closers;
            for (const Arc& a : inflated.upper)
                if (inside(a, iv)) closers.push_back(a.close);
            reverse_positions(inflated.upper, std::move(closers));
            return;
        }
        case BlockKind::OCOC: {
            const auto runs = role_runs(inflated, iv);
            if (runs.size() != 4)
                throw std::logic_error("ptr_interval: classification out of date");
            reverse_positions(inflated.upper, runs[0].second);
            reverse_positions(inflated.upper, runs[3].second);

            // Connecting arcs open in the first run and close in the last;
            // both reversals map those position sets onto themselves, so
            // membership is stable.  Their closers (openers under the
            // experimental option) are now reversed among themselves.
            auto in_run = [](const std::vector<int>& run, int p) {
                return std::binary_search(run.begin(), run.end(), p);
            };
            std::vector<int> connecting;
            for (const Arc& a : inflated.upper)
                if (inside(a, iv) && in_run(runs[0].second, a.open) &&
                    in_run(runs[3].second, a.close))
                    connecting.push_back(opts.step4_openers ? a.open : a.close);
            reverse_positions(inflated.upper, std::move(connecting));
            return;
        }
        case BlockKind::Inadmissible:
            throw std::logic_error("ptr_interval called on an inadmissible interval");
    }
}

namespace {

// Runs the relabelling over one layer: analyze, transform every interval on
// the inflated diagram, fold the positions back together.
ArcDiagram transform_layer(const ArcDiagram& layer, bool enhanced, const PtrOptions& opts,
                           const std::string& tag) {
    LayerAnalysis la = analyze_layer(layer, enhanced);
    for (size_t i = 0; i < la.types.size(); ++i) {
        if (la.types[i].kind != BlockKind::Inadmissible) continue;
        Interval orig{la.map.origin[static_cast<size_t>(la.intervals[i].lo)],
                      la.map.origin[static_cast<size_t>(la.intervals[i].hi)]};
        throw InadmissibleError(tag + "interval [" + std::to_string(orig.lo) + "," +
                                std::to_string(orig.hi) + "]: " + la.types[i].reason);
    }
    ArcDiagram img = la.inflated;
    for (size_t i = 0; i < la.intervals.size(); ++i)
        ptr_interval(img, la.intervals[i], la.types[i], opts);
    canonicalize(img);
    return deflate(img, la.map);
}

PtrResult finish_single_layer(ObjectClass cls, ArcDiagram img, bool enhanced) {
    if (enhanced) img = with_loops_as_fixed_points(img);
    ObjectClass out_cls = cls;
    if (cls == ObjectClass::Matching && has_transitory(img, Layer::Upper))
        out_cls = ObjectClass::SetPartition;
    return {out_cls, std::move(img)};
}

PtrResult ptr_global(ObjectClass cls, const ArcDiagram& d, bool enhanced,
                     const PtrOptions& opts) {
    if (cls == ObjectClass::Permutation) {
        auto [up, low] = split_permutation(d);
        ArcDiagram iu = transform_layer(up, true, opts, "upper ");
        ArcDiagram il = transform_layer(low, false, opts, "lower ");
        return {ObjectClass::Permutation, stitch_permutation(iu, il)};
    }
    const ArcDiagram& base = enhanced ? with_fixed_points_as_loops(d) : d;
    return finish_single_layer(cls, transform_layer(base, enhanced, opts, ""), enhanced);
}

// Support of every colour class, with the guarantee that classes do not
// share vertices (a vertex carrying two colours has no per-class image).
std::map<int, std::vector<int>> colour_supports(const ArcDiagram& d) {
    std::vector<int> vcol(static_cast<size_t>(d.n) + 1, 0);
    auto claim = [&](int v, int c) {
        int& cur = vcol[static_cast<size_t>(v)];
        if (cur != 0 && cur != c)
            throw InadmissibleError("vertex " + std::to_string(v) + " touches colour classes " +
                                    std::to_string(cur) + " and " + std::to_string(c) +
                                    "; per-class semantics needs vertex-disjoint classes");
        cur = c;
    };
    for (const Arc& a : d.upper) {
        claim(a.open, a.colour);
        claim(a.close, a.colour);
    }
    for (const Arc& a : d.lower) {
        claim(a.open, a.colour);
        claim(a.close, a.colour);
    }
    for (const Arc& l : d.loops) claim(l.open, l.colour);

    std::map<int, std::vector<int>> supports;
    for (int v = 1; v <= d.n; ++v)
        if (vcol[static_cast<size_t>(v)] != 0) supports[vcol[static_cast<size_t>(v)]].push_back(v);
    return supports;
}

std::vector<Arc> relabel(const std::vector<Arc>& arcs, int colour,
                         const std::vector<int>& index) {
    std::vector<Arc> out;
    for (const Arc& a : arcs)
        if (a.colour == colour)
            out.push_back({index[static_cast<size_t>(a.open)], index[static_cast<size_t>(a.close)],
                           a.colour});
    return out;
}

std::vector<Arc> unrelabel(const std::vector<Arc>& arcs, const std::vector<int>& verts) {
    std::vector<Arc> out;
    for (const Arc& a : arcs)
        out.push_back({verts[static_cast<size_t>(a.open) - 1],
                       verts[static_cast<size_t>(a.close) - 1], a.colour});
    return out;
}

PtrResult ptr_per_class(ObjectClass cls, const ArcDiagram& d, bool enhanced,
                        const PtrOptions& opts) {
    const ArcDiagram& base = (cls != ObjectClass::Permutation && enhanced)
                                 ? with_fixed_points_as_loops(d)
                                 : d;
    auto supports = colour_supports(base);

    ArcDiagram out;
    out.n = d.n;
    for (const auto& [colour, verts] : supports) {
        std::vector<int> index(static_cast<size_t>(d.n) + 1, 0);
        for (size_t i = 0; i < verts.size(); ++i)
            index[static_cast<size_t>(verts[i])] = static_cast<int>(i) + 1;

        ArcDiagram sub;
        sub.n = static_cast<int>(verts.size());
        sub.upper = relabel(base.upper, colour, index);
        sub.lower = relabel(base.lower, colour, index);
        sub.loops = relabel(base.loops, colour, index);
        canonicalize(sub);

        ArcDiagram img;
        const std::string tag = "colour class " + std::to_string(colour) + ", ";
        if (cls == ObjectClass::Permutation) {
            try {
                validate(ObjectClass::Permutation, sub);
            } catch (const std::invalid_argument&) {
                throw InadmissibleError("colour class " + std::to_string(colour) +
                                        " is not a union of cycles");
            }
            auto [up, low] = split_permutation(sub);
            img = stitch_permutation(transform_layer(up, true, opts, tag + "upper "),
                                     transform_layer(low, false, opts, tag + "lower "));
        } else {
            img = transform_layer(sub, enhanced, opts, tag);
        }

        for (Arc a : unrelabel(img.upper, verts)) out.upper.push_back(a);
        for (Arc a : unrelabel(img.lower, verts)) out.lower.push_back(a);
        for (Arc a : unrelabel(img.loops, verts)) out.loops.push_back(a);
    }
    canonicalize(out);

    if (cls == ObjectClass::Permutation) {
        validate(ObjectClass::Permutation, out);
        return {ObjectClass::Permutation, std::move(out)};
    }
    return finish_single_layer(cls, std::move(out), enhanced);
}

}  // namespace

PtrResult ptr(ObjectClass cls, const ArcDiagram& d, bool enhanced, const PtrOptions& opts) {
    validate(cls, d);
    if (opts.semantics == ColourSemantics::PerClass) return ptr_per_class(cls, d, enhanced, opts);
    return ptr_global(cls, d, enhanced, opts);
}

}  // namespace arcnest
