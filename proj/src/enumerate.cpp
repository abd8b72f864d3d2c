#include "arcnest/enumerate.hpp"

#include <algorithm>
#include <stdexcept>

#include "arcnest/stats.hpp"
#include "arcnest/structure.hpp"

namespace arcnest {

const char* to_string(Family f) {
    switch (f) {
        case Family::Matchings: return "matchings";
        case Family::EnhancedMatchings: return "enhanced-matchings";
        case Family::SetPartitions: return "set-partitions";
        case Family::EnhancedSetPartitions: return "enhanced-set-partitions";
    }
    return "?";
}

BigInt factorial(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

BigInt binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

BigInt involution_number(int n) {
    BigInt a = 1, b = 1;  // I(0), I(1)
    if (n == 0) return a;
    for (int i = 2; i <= n; ++i) {
        BigInt c = b + BigInt(i - 1) * a;
        a = b;
        b = c;
    }
    return b;
}

BigInt bell_number(int n) {
    std::vector<BigInt> row{1};
    for (int i = 1; i <= n; ++i) {
        std::vector<BigInt> next(static_cast<size_t>(i) + 1);
        next[0] = row.back();
        for (size_t j = 1; j < next.size(); ++j) next[j] = next[j - 1] + row[j - 1];
        row = std::move(next);
    }
    return row[0];
}

BigInt catalan_number(int n) { return binomial(2 * n, n) / (n + 1); }

BigInt count_objects(ObjectClass cls, int n) {
    switch (cls) {
        case ObjectClass::Matching: return involution_number(n);
        case ObjectClass::SetPartition: return bell_number(n);
        case ObjectClass::Permutation: return factorial(n);
    }
    return 0;
}

namespace {

// Shared weight of an OCOC block: n connecting arcs, k and j arcs absorbed
// by the two closer blocks.
BigInt block_weight(int n, int k, int j) {
    return factorial(n) * binomial(n + k, k) * factorial(k) * binomial(n + j, j) * factorial(j);
}

// Closer-block factor when a transitory supplies one of the openers.
BigInt transitory_weight(int n, int k) {
    return binomial(n + k, k) * factorial(k) * k + binomial(n + k, k + 1) * factorial(k + 1);
}

BigInt plain_weight(int n, int k) { return binomial(n + k, k) * factorial(k); }

}  // namespace

TruncatedSeries oc_block_series(Family f, int bound) {
    TruncatedSeries t(bound);
    for (int n = 1; 2 * n <= bound; ++n) {
        const BigInt base = factorial(n);
        switch (f) {
            case Family::Matchings:
            case Family::SetPartitions:
                for (int l = 0; 2 * n + l <= bound; ++l)
                    t.add_term({0, 0, n, l, 2 * n + l}, base * binomial(2 * n - 2 + l, l));
                break;
            case Family::EnhancedMatchings:
                t.add_term({0, 0, n, 0, 2 * n}, base);
                t.add_term({0, 0, n, 1, 2 * n + 1}, base);
                break;
            case Family::EnhancedSetPartitions:
                t.add_term({0, 0, n, 0, 2 * n}, base);
                t.add_term({0, 0, n, 0, 2 * n + 1}, base * (1 + n));
                break;
        }
    }
    return t;
}

TruncatedSeries ococ_block_series(Family f, int bound) {
    TruncatedSeries t(bound);
    // Every variant needs 2(n+k+j) vertices for its arcs; plain set
    // partitions may save one vertex at the middle switch.
    const int slack = f == Family::SetPartitions ? 1 : 0;
    const int kmin = (f == Family::Matchings || f == Family::SetPartitions) ? 1 : 0;
    for (int n = 1; 2 * (n + 2 * kmin) - slack <= bound; ++n) {
        for (int k = kmin; 2 * (n + k + kmin) - slack <= bound; ++k) {
            for (int j = kmin; 2 * (n + k + j) - slack <= bound; ++j) {
                const int m = n + k + j;
                const BigInt w = block_weight(n, k, j);
                switch (f) {
                    case Family::Matchings:
                        for (int l = 0; 2 * m + l <= bound; ++l)
                            t.add_term({k, j, n, l, 2 * m + l}, w * binomial(2 * (m - 1) + l, l));
                        break;
                    case Family::SetPartitions:
                        for (int l = 0; 2 * m + l - 1 <= bound; ++l) {
                            t.add_term({k, j, n, l, 2 * m + l}, w * binomial(2 * (m - 1) + l, l));
                            t.add_term({k, j, n, l, 2 * m + l - 1},
                                       w * binomial(2 * (m - 1) + l - 1, l));
                        }
                        break;
                    case Family::EnhancedMatchings: {
                        if (k >= 1 && j >= 1) t.add_term({k, j, n, 0, 2 * m}, w);
                        if (j >= 1) t.add_term({k, j, n, 1, 2 * m + 1}, 2 * w);
                        t.add_term({k, j, n, 2, 2 * m + 2}, w);
                        break;
                    }
                    case Family::EnhancedSetPartitions: {
                        const BigInt wt = factorial(n) * transitory_weight(n, k) * plain_weight(n, j);
                        const BigInt wtt =
                            factorial(n) * transitory_weight(n, k) * transitory_weight(n, j);
                        if (k >= 1 && j >= 1) t.add_term({k, j, n, 0, 2 * m}, w);
                        if (j >= 1) t.add_term({k, j, n, 0, 2 * m + 1}, 2 * w);
                        t.add_term({k, j, n, 0, 2 * m + 2}, w);
                        if (j >= 1) t.add_term({k, j, n, 0, 2 * m + 1}, 2 * wt);
                        t.add_term({k, j, n, 0, 2 * m + 2}, 2 * wt);
                        t.add_term({k, j, n, 0, 2 * m + 2}, wtt);
                        break;
                    }
                }
            }
        }
    }
    return t;
}

TruncatedSeries indecomposable_series(Family f, int bound) {
    TruncatedSeries blocks = oc_block_series(f, bound);
    blocks += ococ_block_series(f, bound);
    if (f == Family::SetPartitions) {
        // Chains of blocks joined at shared transitory vertices: each extra
        // block glues onto the previous one, merging two vertices into one.
        TruncatedSeries chain = blocks.shift_s(-1).geometric();
        chain -= TruncatedSeries::one(bound);
        TruncatedSeries out = chain.shift_s(1);
        out.add_term({0, 0, 0, 1, 1}, 1);  // isolated vertex
        return out;
    }
    // Isolated vertex: marked p s for matchings, plain s when fixed points
    // are inflated to loops of the partition-style reading.
    blocks.add_term({0, 0, 0, f == Family::EnhancedSetPartitions ? 0 : 1, 1}, 1);
    return blocks;
}

TruncatedSeries admissible_series(Family f, int bound) {
    return indecomposable_series(f, bound).geometric();
}

std::vector<BigInt> admissible_counts(Family f, int max_n) {
    return admissible_series(f, max_n).at_ones();
}

namespace {

void partial_matching_rec(int n, bool perfect, std::vector<Arc>& arcs, std::vector<bool>& used,
                          int v, const DiagramVisitor& visit) {
    while (v <= n && used[static_cast<size_t>(v)]) ++v;
    if (v > n) {
        ArcDiagram d;
        d.n = n;
        d.upper = arcs;
        visit(d);
        return;
    }
    used[static_cast<size_t>(v)] = true;
    if (!perfect) partial_matching_rec(n, perfect, arcs, used, v + 1, visit);
    for (int u = v + 1; u <= n; ++u) {
        if (used[static_cast<size_t>(u)]) continue;
        used[static_cast<size_t>(u)] = true;
        arcs.push_back({v, u, 1});
        partial_matching_rec(n, perfect, arcs, used, v + 1, visit);
        arcs.pop_back();
        used[static_cast<size_t>(u)] = false;
    }
    used[static_cast<size_t>(v)] = false;
}

void matchings(int n, bool perfect, const DiagramVisitor& visit) {
    std::vector<Arc> arcs;
    std::vector<bool> used(static_cast<size_t>(n) + 1, false);
    partial_matching_rec(n, perfect, arcs, used, 1, visit);
}

void set_partition_rec(int n, std::vector<int>& rgs, int i, int blocks,
                       const DiagramVisitor& visit) {
    if (i == n) {
        ArcDiagram d;
        d.n = n;
        std::vector<int> last(static_cast<size_t>(blocks), 0);
        for (int v = 1; v <= n; ++v) {
            int b = rgs[static_cast<size_t>(v - 1)];
            if (last[static_cast<size_t>(b)] != 0)
                d.upper.push_back({last[static_cast<size_t>(b)], v, 1});
            last[static_cast<size_t>(b)] = v;
        }
        canonicalize(d);
        visit(d);
        return;
    }
    for (int b = 0; b <= blocks; ++b) {
        rgs[static_cast<size_t>(i)] = b;
        set_partition_rec(n, rgs, i + 1, std::max(blocks, b + 1), visit);
    }
}

}  // namespace

void for_each_partial_matching(int n, const DiagramVisitor& visit) { matchings(n, false, visit); }

void for_each_perfect_matching(int n, const DiagramVisitor& visit) {
    if (n % 2 != 0) return;
    matchings(n, true, visit);
}

void for_each_set_partition(int n, const DiagramVisitor& visit) {
    if (n == 0) {
        visit(ArcDiagram{});
        return;
    }
    std::vector<int> rgs(static_cast<size_t>(n), 0);
    set_partition_rec(n, rgs, 0, 0, visit);
}

void for_each_permutation(int n, const DiagramVisitor& visit) {
    std::vector<int> line(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) line[static_cast<size_t>(i)] = i + 1;
    do {
        visit(from_one_line(line));
    } while (std::next_permutation(line.begin(), line.end()));
}

void for_each_object(ObjectClass cls, int n, const DiagramVisitor& visit) {
    switch (cls) {
        case ObjectClass::Matching: for_each_partial_matching(n, visit); return;
        case ObjectClass::SetPartition: for_each_set_partition(n, visit); return;
        case ObjectClass::Permutation: for_each_permutation(n, visit); return;
    }
}

BigInt count_admissible(ObjectClass cls, int n, bool enhanced) {
    BigInt count = 0;
    for_each_object(cls, n, [&](const ArcDiagram& d) {
        if (is_admissible(cls, d, enhanced).admissible) ++count;
    });
    return count;
}

std::map<std::pair<int, int>, BigInt> joint_table(ObjectClass cls, int n, bool enhanced,
                                                  bool admissible_only) {
    std::map<std::pair<int, int>, BigInt> table;
    auto tally = [&](const ArcDiagram& d) {
        if (admissible_only && !is_admissible(cls, d, enhanced).admissible) return;
        ++table[{max_crossing(cls, d, enhanced), max_nesting(cls, d, enhanced)}];
    };
    if (cls == ObjectClass::Matching)
        for_each_perfect_matching(n, tally);
    else
        for_each_object(cls, n, tally);
    return table;
}

}  // namespace arcnest
