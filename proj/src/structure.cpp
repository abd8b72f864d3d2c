#include "arcnest/structure.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace arcnest {

namespace {

// Per-vertex arc incidence of a single-layer diagram (arcs in `upper`).
struct Incidence {
    std::vector<int> out;   // arc index opening at v, -1 if none
    std::vector<int> in;    // arc index closing at v, -1 if none
    std::vector<int> loop;  // loop index at v, -1 if none

    explicit Incidence(const ArcDiagram& d)
        : out(static_cast<size_t>(d.n) + 1, -1),
          in(static_cast<size_t>(d.n) + 1, -1),
          loop(static_cast<size_t>(d.n) + 1, -1) {
        for (size_t a = 0; a < d.upper.size(); ++a) {
            out[static_cast<size_t>(d.upper[a].open)] = static_cast<int>(a);
            in[static_cast<size_t>(d.upper[a].close)] = static_cast<int>(a);
        }
        for (size_t l = 0; l < d.loops.size(); ++l)
            loop[static_cast<size_t>(d.loops[l].open)] = static_cast<int>(l);
    }
};

std::string interval_tag(Layer layer, Interval iv, bool with_layer) {
    std::string s;
    if (with_layer) s = layer == Layer::Upper ? "upper " : "lower ";
    s += "interval [" + std::to_string(iv.lo) + "," + std::to_string(iv.hi) + "]";
    return s;
}

}  // namespace

const char* to_string(BlockKind kind) {
    switch (kind) {
        case BlockKind::P: return "P";
        case BlockKind::OC: return "OC";
        case BlockKind::OCOC: return "OCOC";
        case BlockKind::Inadmissible: return "inadmissible";
    }
    return "?";
}

std::pair<ArcDiagram, InflationMap> inflate(const ArcDiagram& d, bool enhanced) {
    if (!d.lower.empty())
        throw std::invalid_argument("inflate expects a single-layer diagram");
    Incidence inc(d);

    InflationMap map;
    map.original_n = d.n;
    map.origin.push_back(0);

    std::vector<int> open_pos(d.upper.size(), 0), close_pos(d.upper.size(), 0);
    std::vector<std::pair<int, int>> loop_pos(d.loops.size());

    int m = 0;
    auto fresh = [&](int v) {
        ++m;
        map.origin.push_back(v);
        return m;
    };

    for (int v = 1; v <= d.n; ++v) {
        const size_t sv = static_cast<size_t>(v);
        const int lo = inc.loop[sv], ao = inc.out[sv], ai = inc.in[sv];
        if (lo >= 0 && (ao >= 0 || ai >= 0))
            throw std::invalid_argument("loop and arc share a vertex");
        if (lo >= 0) {
            if (!enhanced)
                throw std::invalid_argument("loops require the enhanced reading");
            int p1 = fresh(v), p2 = fresh(v);
            loop_pos[static_cast<size_t>(lo)] = {p1, p2};
            map.entries.push_back({v, SplitKind::LoopToPair, p1, p2});
        } else if (ao >= 0 && ai >= 0) {
            int p1 = fresh(v), p2 = fresh(v);
            if (enhanced) {
                open_pos[static_cast<size_t>(ao)] = p1;
                close_pos[static_cast<size_t>(ai)] = p2;
                map.entries.push_back({v, SplitKind::TransitoryOpenerFirst, p1, p2});
            } else {
                close_pos[static_cast<size_t>(ai)] = p1;
                open_pos[static_cast<size_t>(ao)] = p2;
                map.entries.push_back({v, SplitKind::TransitoryCloserFirst, p1, p2});
            }
        } else {
            int p = fresh(v);
            if (ao >= 0) open_pos[static_cast<size_t>(ao)] = p;
            if (ai >= 0) close_pos[static_cast<size_t>(ai)] = p;
        }
    }

    ArcDiagram out;
    out.n = m;
    for (size_t a = 0; a < d.upper.size(); ++a)
        out.upper.push_back({open_pos[a], close_pos[a], d.upper[a].colour});
    for (size_t l = 0; l < d.loops.size(); ++l)
        out.upper.push_back({loop_pos[l].first, loop_pos[l].second, d.loops[l].colour});
    canonicalize(out);
    return {out, map};
}

ArcDiagram deflate(const ArcDiagram& d, const InflationMap& map) {
    if (static_cast<size_t>(d.n) + 1 != map.origin.size())
        throw std::logic_error("deflate: diagram does not match the inflation map");

    std::vector<int> opens_at(static_cast<size_t>(d.n) + 1, -1);
    std::vector<int> closes_at(static_cast<size_t>(d.n) + 1, -1);
    for (size_t a = 0; a < d.upper.size(); ++a) {
        opens_at[static_cast<size_t>(d.upper[a].open)] = static_cast<int>(a);
        closes_at[static_cast<size_t>(d.upper[a].close)] = static_cast<int>(a);
    }

    // Arcs whose two endpoints are both halves of one merged pair turn back
    // into loops; remember them so they are not also emitted as arcs.
    std::vector<bool> is_self_pair(d.upper.size(), false);

    ArcDiagram out;
    out.n = map.original_n;

    for (const InflationEntry& e : map.entries) {
        const size_t p1 = static_cast<size_t>(e.pos_first);
        const size_t p2 = static_cast<size_t>(e.pos_second);
        if (e.kind == SplitKind::TransitoryCloserFirst) {
            if (closes_at[p1] < 0 || opens_at[p2] < 0)
                throw std::logic_error("deflate: closer-opener pair lost its orientation");
        } else {
            if (opens_at[p1] < 0 || closes_at[p2] < 0)
                throw std::logic_error("deflate: opener-closer pair lost its orientation");
            int a = opens_at[p1];
            if (a == closes_at[p2]) {
                is_self_pair[static_cast<size_t>(a)] = true;
                out.loops.push_back({e.vertex, e.vertex, d.upper[static_cast<size_t>(a)].colour});
            }
        }
    }

    for (size_t a = 0; a < d.upper.size(); ++a) {
        if (is_self_pair[a]) continue;
        const Arc& arc = d.upper[a];
        int u = map.origin[static_cast<size_t>(arc.open)];
        int v = map.origin[static_cast<size_t>(arc.close)];
        if (u == v) throw std::logic_error("deflate: arc collapsed onto one vertex");
        out.upper.push_back({u, v, arc.colour});
    }
    canonicalize(out);
    return out;
}

std::vector<Interval> decompose(const ArcDiagram& d, Layer layer) {
    const std::vector<Arc>& arcs = layer == Layer::Upper ? d.upper : d.lower;
    std::vector<bool> covered(static_cast<size_t>(d.n) + 1, false);
    for (const Arc& a : arcs)
        for (int g = a.open; g < a.close; ++g) covered[static_cast<size_t>(g)] = true;

    std::vector<Interval> out;
    int lo = 1;
    for (int v = 1; v <= d.n; ++v) {
        if (v == d.n || !covered[static_cast<size_t>(v)]) {
            out.push_back({lo, v});
            lo = v + 1;
        }
    }
    return out;
}

std::vector<std::pair<char, std::vector<int>>> role_runs(const ArcDiagram& d, Interval iv) {
    std::vector<char> role(static_cast<size_t>(d.n) + 1, 0);
    for (const Arc& a : d.upper) {
        role[static_cast<size_t>(a.open)] = 'O';
        role[static_cast<size_t>(a.close)] = 'C';
    }
    std::vector<std::pair<char, std::vector<int>>> runs;
    for (int p = iv.lo; p <= iv.hi; ++p) {
        const char r = role[static_cast<size_t>(p)];
        if (r == 0) continue;
        if (runs.empty() || runs.back().first != r) runs.push_back({r, {}});
        runs.back().second.push_back(p);
    }
    return runs;
}

BlockType classify_interval(const ArcDiagram& inflated, Interval iv, const InflationMap* map) {
    if (map) {
        bool one_origin = true;
        for (int p = iv.lo; p <= iv.hi && one_origin; ++p)
            one_origin = map->origin[static_cast<size_t>(p)] == map->origin[static_cast<size_t>(iv.lo)];
        if (one_origin) return {BlockKind::P, 0, 0, 0, ""};
    }

    std::vector<std::pair<char, std::vector<int>>> runs = role_runs(inflated, iv);
    if (runs.empty()) return {BlockKind::P, 0, 0, 0, ""};

    auto run_in = [&](const std::vector<int>& run, int p) {
        return std::binary_search(run.begin(), run.end(), p);
    };

    if (runs.size() == 2 && runs[0].first == 'O') {
        int n = 0;
        for (const Arc& a : inflated.upper)
            if (a.open >= iv.lo && a.close <= iv.hi) ++n;
        return {BlockKind::OC, n, 0, 0, ""};
    }

    if (runs.size() == 4 && runs[0].first == 'O' && runs[2].first == 'O') {
        int n = 0, k = 0, j = 0;
        for (const Arc& a : inflated.upper) {
            if (a.open < iv.lo || a.close > iv.hi) continue;
            const bool o1 = run_in(runs[0].second, a.open);
            const bool c4 = run_in(runs[3].second, a.close);
            if (o1 && !c4)
                ++k;
            else if (!o1 && c4)
                ++j;
            else if (o1 && c4)
                ++n;
        }
        if (n >= 1) return {BlockKind::OCOC, n, k, j, ""};
        return {BlockKind::Inadmissible, 0, k, j,
                "four opener-closer runs but no arc connects the outer blocks"};
    }

    std::string pattern;
    for (const auto& r : runs) pattern.push_back(r.first);
    BlockType t;
    t.kind = BlockKind::Inadmissible;
    t.reason = "an enveloping arc spans " + std::to_string(runs.size() / 2) +
               " indecomposable intervals (opener-closer runs " + pattern + ")";
    return t;
}

LayerAnalysis analyze_layer(const ArcDiagram& single_layer, bool enhanced) {
    LayerAnalysis la;
    auto [inflated, map] = inflate(single_layer, enhanced);
    la.inflated = std::move(inflated);
    la.map = std::move(map);
    la.intervals = decompose(la.inflated);
    for (Interval iv : la.intervals) {
        la.types.push_back(classify_interval(la.inflated, iv, &la.map));
        if (la.types.back().kind == BlockKind::Inadmissible) la.admissible = false;
    }
    return la;
}

namespace {

void collect_layer_report(const LayerAnalysis& la, Layer layer, bool tag_layer,
                          AdmissibilityReport& report) {
    for (size_t i = 0; i < la.intervals.size(); ++i) {
        Interval orig{la.map.origin[static_cast<size_t>(la.intervals[i].lo)],
                      la.map.origin[static_cast<size_t>(la.intervals[i].hi)]};
        report.intervals.push_back({layer, orig, la.types[i]});
        if (la.types[i].kind == BlockKind::Inadmissible && report.admissible) {
            report.admissible = false;
            report.reason = interval_tag(layer, orig, tag_layer) + ": " + la.types[i].reason;
        }
    }
}

}  // namespace

AdmissibilityReport is_admissible(ObjectClass cls, const ArcDiagram& d, bool enhanced) {
    AdmissibilityReport report;
    if (cls == ObjectClass::Permutation) {
        auto [up, low] = split_permutation(d);
        collect_layer_report(analyze_layer(up, true), Layer::Upper, true, report);
        collect_layer_report(analyze_layer(low, false), Layer::Lower, true, report);
        return report;
    }
    const ArcDiagram& base = enhanced ? with_fixed_points_as_loops(d) : d;
    collect_layer_report(analyze_layer(base, enhanced), Layer::Upper, false, report);
    return report;
}

std::pair<ArcDiagram, ArcDiagram> split_permutation(const ArcDiagram& d) {
    ArcDiagram up, low;
    up.n = low.n = d.n;
    up.upper = d.upper;
    up.loops = d.loops;
    low.upper = d.lower;
    canonicalize(up);
    canonicalize(low);
    return {up, low};
}

ArcDiagram stitch_permutation(const ArcDiagram& upper, const ArcDiagram& lower) {
    if (upper.n != lower.n)
        throw std::invalid_argument("stitch: halves disagree on the vertex count");
    if (!upper.lower.empty() || !lower.lower.empty() || !lower.loops.empty())
        throw std::invalid_argument("stitch expects single-layer halves");

    std::vector<VertexRole> ru = roles(upper, Layer::Upper);
    std::vector<VertexRole> rl = roles(lower, Layer::Upper);
    for (int v = 1; v <= upper.n; ++v) {
        const VertexRole u = ru[static_cast<size_t>(v)];
        const VertexRole l = rl[static_cast<size_t>(v)];
        const bool ok = ((u == VertexRole::Transitory || u == VertexRole::Loop) &&
                         l == VertexRole::FixedPoint) ||
                        (u == VertexRole::Opener && l == VertexRole::Opener) ||
                        (u == VertexRole::Closer && l == VertexRole::Closer) ||
                        (u == VertexRole::FixedPoint && l == VertexRole::Transitory);
        if (!ok)
            throw std::invalid_argument("stitch: incompatible halves at vertex " +
                                        std::to_string(v));
    }

    ArcDiagram out;
    out.n = upper.n;
    out.upper = upper.upper;
    out.lower = lower.upper;
    out.loops = upper.loops;
    canonicalize(out);
    validate(ObjectClass::Permutation, out);
    return out;
}

}  // namespace arcnest
