#include "arcnest/stats.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace arcnest {

namespace {

// Rewrites an arc list in enhanced reading: every loop and every vertex shared
// by two arcs (closing one, opening the next) becomes an opener immediately
// followed by a closer.  Equivalent to counting on the inflated diagram.
std::vector<Arc> enhance(const std::vector<Arc>& arcs) {
    std::map<int, int> open_at, close_at, loop_at;  // vertex -> arc index
    for (size_t i = 0; i < arcs.size(); ++i) {
        const Arc& a = arcs[i];
        if (a.open == a.close) {
            if (!loop_at.emplace(a.open, i).second)
                throw std::invalid_argument("two loops at one vertex");
            continue;
        }
        if (!open_at.emplace(a.open, i).second || !close_at.emplace(a.close, i).second)
            throw std::invalid_argument("vertex used twice in the same direction");
    }
    for (auto& [v, _] : loop_at)
        if (open_at.count(v) || close_at.count(v))
            throw std::invalid_argument("loop and arc share a vertex");
    // Walk the distinct endpoint vertices in order, assigning positions.
    std::map<int, std::pair<int, int>> pos;  // vertex -> (opener slot, closer slot)
    int next = 0;
    for (int v : [&] {
             std::vector<int> vs;
             for (auto& [v2, _] : open_at) vs.push_back(v2);
             for (auto& [v2, _] : close_at) vs.push_back(v2);
             for (auto& [v2, _] : loop_at) vs.push_back(v2);
             std::sort(vs.begin(), vs.end());
             vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
             return vs;
         }()) {
        bool opens = open_at.count(v) || loop_at.count(v);
        bool closes = close_at.count(v) || loop_at.count(v);
        if (opens && closes) {
            // opener first, then closer; the increments must not alias the
            // pair constructor's reference parameters
            const int opener_slot = ++next;
            const int closer_slot = ++next;
            pos[v] = {opener_slot, closer_slot};
        } else {
            ++next;
            pos[v] = {next, next};
        }
    }
    std::vector<Arc> out;
    out.reserve(arcs.size());
    for (const Arc& a : arcs)
        out.push_back({pos[a.open].first, pos[a.close].second, a.colour});
    return out;
}

// Arcs able to join chains of length >= 2 (loops are degenerate until
// enhanced inflation widens them).
std::vector<Arc> proper(const std::vector<Arc>& arcs) {
    std::vector<Arc> out;
    for (const Arc& a : arcs)
        if (a.open < a.close) out.push_back(a);
    return out;
}

std::uint64_t crossings_plain(std::vector<Arc> arcs, int k) {
    if (k == 1) return arcs.size();
    arcs = proper(arcs);
    std::sort(arcs.begin(), arcs.end());
    std::uint64_t total = 0;
    for (const Arc& a : arcs) {
        // Arcs that cross `a` from the right; any mutually increasing
        // (k-1)-subset of them extends `a` to a k-crossing, since all their
        // openers sit before a.close and all their closers after it.
        std::vector<Arc> fam;
        for (const Arc& b : arcs)
            if (a.open < b.open && b.open < a.close && a.close < b.close) fam.push_back(b);
        if (static_cast<int>(fam.size()) < k - 1) continue;
        std::vector<std::vector<std::uint64_t>> dp(
            static_cast<size_t>(k), std::vector<std::uint64_t>(fam.size(), 0));
        for (size_t i = 0; i < fam.size(); ++i) dp[1][i] = 1;
        for (int t = 2; t <= k - 1; ++t)
            for (size_t i = 0; i < fam.size(); ++i)
                for (size_t j = 0; j < i; ++j)
                    if (fam[j].close < fam[i].close) dp[t][i] += dp[t - 1][j];
        for (size_t i = 0; i < fam.size(); ++i) total += dp[k - 1][i];
    }
    return total;
}

std::uint64_t nestings_plain(std::vector<Arc> arcs, int k) {
    if (k == 1) return arcs.size();
    arcs = proper(arcs);
    std::sort(arcs.begin(), arcs.end());
    // Containment is transitive, so a k-nesting is a k-chain; dp[t][i] counts
    // t-chains whose innermost arc is arcs[i].
    std::vector<std::vector<std::uint64_t>> dp(
        static_cast<size_t>(k) + 1, std::vector<std::uint64_t>(arcs.size(), 0));
    for (size_t i = 0; i < arcs.size(); ++i) dp[1][i] = 1;
    for (int t = 2; t <= k; ++t)
        for (size_t i = 0; i < arcs.size(); ++i)
            for (size_t j = 0; j < i; ++j)
                if (arcs[j].open < arcs[i].open && arcs[i].close < arcs[j].close)
                    dp[t][i] += dp[t - 1][j];
    std::uint64_t total = 0;
    for (size_t i = 0; i < arcs.size(); ++i) total += dp[k][i];
    return total;
}

std::map<int, std::vector<Arc>> by_colour(const std::vector<Arc>& arcs) {
    std::map<int, std::vector<Arc>> classes;
    for (const Arc& a : arcs) classes[a.colour].push_back(a);
    return classes;
}

void trim(std::vector<std::uint64_t>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

std::vector<Arc> upper_with_loops(const ArcDiagram& d) {
    std::vector<Arc> arcs = d.upper;
    arcs.insert(arcs.end(), d.loops.begin(), d.loops.end());
    return arcs;
}

}  // namespace

std::uint64_t count_k_crossings(const std::vector<Arc>& arcs, int k, bool enhanced) {
    if (k < 1) throw std::invalid_argument("chain length must be at least 1");
    return crossings_plain(enhanced ? enhance(arcs) : arcs, k);
}

std::uint64_t count_k_nestings(const std::vector<Arc>& arcs, int k, bool enhanced) {
    if (k < 1) throw std::invalid_argument("chain length must be at least 1");
    return nestings_plain(enhanced ? enhance(arcs) : arcs, k);
}

Label label_of_arcs(const std::vector<Arc>& arcs, bool enhanced) {
    Label total;
    for (auto& [colour, cls_arcs] : by_colour(arcs)) {
        std::vector<Arc> eff = enhanced ? enhance(cls_arcs) : cls_arcs;
        for (int k = 2;; ++k) {
            std::uint64_t c = crossings_plain(eff, k);
            std::uint64_t n = nestings_plain(eff, k);
            if (!c && !n) break;
            size_t idx = static_cast<size_t>(k) - 2;
            if (total.cross.size() <= idx) total.cross.resize(idx + 1, 0);
            if (total.nest.size() <= idx) total.nest.resize(idx + 1, 0);
            total.cross[idx] += c;
            total.nest[idx] += n;
        }
    }
    trim(total.cross);
    trim(total.nest);
    return total;
}

std::variant<Label, PermLabel> label_of(ObjectClass cls, const ArcDiagram& d, bool enhanced) {
    if (cls == ObjectClass::Permutation)
        return PermLabel{label_of_arcs(upper_with_loops(d), true),
                         label_of_arcs(d.lower, false)};
    if (enhanced) return label_of_arcs(upper_with_loops(with_fixed_points_as_loops(d)), true);
    return label_of_arcs(d.upper, false);
}

namespace {

int max_chain(const std::vector<std::uint64_t>& counts, bool any_arc) {
    if (!counts.empty()) return static_cast<int>(counts.size()) + 1;
    return any_arc ? 1 : 0;
}

}  // namespace

int max_crossing(ObjectClass cls, const ArcDiagram& d, bool enhanced) {
    auto lab = label_of(cls, d, enhanced);
    if (auto* p = std::get_if<PermLabel>(&lab))
        return std::max(max_chain(p->upper.cross, !d.upper.empty() || !d.loops.empty()),
                        max_chain(p->lower.cross, !d.lower.empty()));
    const Label& l = std::get<Label>(lab);
    bool any = !d.upper.empty() || (enhanced && d.n > 0);
    return max_chain(l.cross, any);
}

int max_nesting(ObjectClass cls, const ArcDiagram& d, bool enhanced) {
    auto lab = label_of(cls, d, enhanced);
    if (auto* p = std::get_if<PermLabel>(&lab))
        return std::max(max_chain(p->upper.nest, !d.upper.empty() || !d.loops.empty()),
                        max_chain(p->lower.nest, !d.lower.empty()));
    const Label& l = std::get<Label>(lab);
    bool any = !d.upper.empty() || (enhanced && d.n > 0);
    return max_chain(l.nest, any);
}

}  // namespace arcnest
