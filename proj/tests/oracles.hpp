#ifndef ARCNEST_TESTS_ORACLES_HPP
#define ARCNEST_TESTS_ORACLES_HPP

// Reference implementations used only by the test suite.  Everything here is
// deliberately written by a different route than the library: straightforward
// subset enumeration instead of chain DP, and role-string pattern matching
// instead of interval classification, so the two sides can check each other.

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "arcnest/diagram.hpp"
#include "arcnest/stats.hpp"

namespace oracle {

using arcnest::Arc;
using arcnest::ArcDiagram;
using arcnest::Layer;
using arcnest::ObjectClass;

// One endpoint slot of the expanded diagram: 'O', 'C', or 'F' (no arc).
struct Expansion {
    std::vector<Arc> arcs;   // endpoints are 1-based slot numbers
    std::string roles;       // roles[i] = role of slot i+1
};

// Rewrites a single layer onto a slot line, splitting loops and shared
// vertices.  Enhanced order is opener-then-closer (the outgoing arc leaves
// first); plain order is closer-then-opener.  `loops` may list vertices that
// carry a loop arc; plain mode does not accept loops.
inline Expansion expand(int n, const std::vector<Arc>& arcs,
                        const std::vector<Arc>& loops, bool enhanced) {
    std::map<int, int> out_at, in_at, loop_at;
    for (size_t i = 0; i < arcs.size(); ++i) {
        out_at[arcs[i].open] = static_cast<int>(i);
        in_at[arcs[i].close] = static_cast<int>(i);
    }
    for (size_t i = 0; i < loops.size(); ++i) loop_at[loops[i].open] = static_cast<int>(i);

    Expansion e;
    e.arcs = arcs;
    std::string roles;
    int next = 0;
    for (int v = 1; v <= n; ++v) {
        const bool has_out = out_at.count(v) != 0;
        const bool has_in = in_at.count(v) != 0;
        if (loop_at.count(v)) {
            const int o = ++next, c = ++next;
            e.arcs.push_back({o, c, loops[static_cast<size_t>(loop_at[v])].colour});
            roles += "OC";
        } else if (has_in && has_out) {
            if (enhanced) {
                e.arcs[static_cast<size_t>(out_at[v])].open = ++next;
                e.arcs[static_cast<size_t>(in_at[v])].close = ++next;
                roles += "OC";
            } else {
                e.arcs[static_cast<size_t>(in_at[v])].close = ++next;
                e.arcs[static_cast<size_t>(out_at[v])].open = ++next;
                roles += "CO";
            }
        } else if (has_out) {
            e.arcs[static_cast<size_t>(out_at[v])].open = ++next;
            roles += 'O';
        } else if (has_in) {
            e.arcs[static_cast<size_t>(in_at[v])].close = ++next;
            roles += 'C';
        } else {
            ++next;
            roles += 'F';
        }
    }
    e.roles = roles;
    return e;
}

// Fixed points drawn as loops, for the enhanced reading of matchings and
// partitions.
inline std::vector<Arc> isolated_as_loops(int n, const std::vector<Arc>& arcs) {
    std::vector<bool> used(static_cast<size_t>(n) + 1, false);
    for (const Arc& a : arcs) {
        used[static_cast<size_t>(a.open)] = true;
        used[static_cast<size_t>(a.close)] = true;
    }
    std::vector<Arc> loops;
    for (int v = 1; v <= n; ++v)
        if (!used[static_cast<size_t>(v)]) loops.push_back({v, v, 1});
    return loops;
}

// Number of k-subsets of one colour class forming a crossing (closers in the
// same order as the openers, every opener before every closer) or a nesting
// (closers in reverse order), by trying every subset.
inline std::uint64_t count_chains(const std::vector<Arc>& arcs, int k, bool crossing) {
    std::map<int, std::vector<Arc>> by_colour;
    for (const Arc& a : arcs) by_colour[a.colour].push_back(a);

    std::uint64_t total = 0;
    for (auto& [colour, group] : by_colour) {
        const int m = static_cast<int>(group.size());
        if (k > m) continue;
        std::sort(group.begin(), group.end(),
                  [](const Arc& a, const Arc& b) { return a.open < b.open; });
        std::vector<int> idx(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
        while (true) {
            bool ok = true;
            for (int i = 0; ok && i + 1 < k; ++i) {
                const Arc& a = group[static_cast<size_t>(idx[static_cast<size_t>(i)])];
                const Arc& b = group[static_cast<size_t>(idx[static_cast<size_t>(i + 1)])];
                ok = crossing ? a.close < b.close : a.close > b.close;
            }
            if (ok && crossing && k >= 2) {
                const Arc& first = group[static_cast<size_t>(idx[0])];
                const Arc& last = group[static_cast<size_t>(idx[static_cast<size_t>(k - 1)])];
                ok = last.open < first.close;
            }
            if (ok) ++total;
            int i = k - 1;
            while (i >= 0 && idx[static_cast<size_t>(i)] == m - k + i) --i;
            if (i < 0) break;
            ++idx[static_cast<size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
        }
    }
    return total;
}

// Full label of one layer by subset enumeration.
inline arcnest::Label label_of_layer(int n, const std::vector<Arc>& arcs,
                                     const std::vector<Arc>& loops, bool enhanced) {
    const Expansion e = expand(n, arcs, loops, enhanced);
    arcnest::Label l;
    const int m = static_cast<int>(e.arcs.size());
    for (int k = 2; k <= m; ++k) {
        l.nest.push_back(count_chains(e.arcs, k, false));
        l.cross.push_back(count_chains(e.arcs, k, true));
    }
    while (!l.nest.empty() && l.nest.back() == 0) l.nest.pop_back();
    while (!l.cross.empty() && l.cross.back() == 0) l.cross.pop_back();
    return l;
}

inline arcnest::Label label_single(const ArcDiagram& d, bool enhanced) {
    const std::vector<Arc> loops =
        enhanced ? isolated_as_loops(d.n, d.upper) : std::vector<Arc>{};
    return label_of_layer(d.n, d.upper, loops, enhanced);
}

inline arcnest::PermLabel label_permutation(const ArcDiagram& d) {
    return {label_of_layer(d.n, d.upper, d.loops, true),
            label_of_layer(d.n, d.lower, {}, false)};
}

// Admissibility by pattern-matching the expanded role string: every
// indecomposable slot interval must read as nothing (a bare fixed slot),
// openers-then-closers, or the four-run shape with at least one arc from the
// first run to the last.
inline bool layer_admissible(int n, const std::vector<Arc>& arcs,
                             const std::vector<Arc>& loops, bool enhanced) {
    const Expansion e = expand(n, arcs, loops, enhanced);
    const int slots = static_cast<int>(e.roles.size());
    std::vector<int> cut = {0};
    for (int p = 1; p < slots; ++p) {
        bool spanned = false;
        for (const Arc& a : e.arcs)
            if (a.open <= p && p < a.close) spanned = true;
        if (!spanned) cut.push_back(p);
    }
    cut.push_back(slots);

    for (size_t c = 0; c + 1 < cut.size(); ++c) {
        const int lo = cut[c] + 1, hi = cut[c + 1];
        std::string pattern;
        std::vector<int> run_start;
        for (int p = lo; p <= hi; ++p) {
            const char r = e.roles[static_cast<size_t>(p - 1)];
            if (r == 'F') continue;
            if (pattern.empty() || pattern.back() != r) {
                pattern += r;
                run_start.push_back(p);
            }
        }
        if (pattern.empty() || pattern == "OC") continue;
        if (pattern == "OCOC") {
            const int last_run = run_start[3];
            bool connects = false;
            for (const Arc& a : e.arcs)
                if (a.open >= lo && a.open < run_start[1] && a.close >= last_run &&
                    a.close <= hi)
                    connects = true;
            if (connects) continue;
        }
        return false;
    }
    return true;
}

inline bool admissible(ObjectClass cls, const ArcDiagram& d, bool enhanced) {
    if (cls == ObjectClass::Permutation)
        return layer_admissible(d.n, d.upper, d.loops, true) &&
               layer_admissible(d.n, d.lower, {}, false);
    const std::vector<Arc> loops =
        enhanced ? isolated_as_loops(d.n, d.upper) : std::vector<Arc>{};
    return layer_admissible(d.n, d.upper, loops, enhanced);
}

// Pairs of arcs that neither cross nor nest (plain reading).
inline std::uint64_t alignment_pairs(const std::vector<Arc>& arcs) {
    std::uint64_t count = 0;
    for (size_t i = 0; i < arcs.size(); ++i)
        for (size_t j = i + 1; j < arcs.size(); ++j) {
            const Arc& a = arcs[i].open < arcs[j].open ? arcs[i] : arcs[j];
            const Arc& b = arcs[i].open < arcs[j].open ? arcs[j] : arcs[i];
            const bool crossing = a.open < b.open && b.open < a.close && a.close < b.close;
            const bool nesting = a.open < b.open && b.close < a.close;
            if (!crossing && !nesting) ++count;
        }
    return count;
}

}  // namespace oracle

#endif
