#include <random>
#include <stdexcept>
#include <variant>

#include "doctest.h"

#include "arcnest/diagram.hpp"
#include "arcnest/enumerate.hpp"
#include "arcnest/format.hpp"
#include "arcnest/stats.hpp"
#include "oracles.hpp"

using namespace arcnest;

namespace {

ArcDiagram pd(const std::string& line) { return parse(line).second; }

Label lbl(ObjectClass cls, const ArcDiagram& d, bool enhanced = false) {
    return std::get<Label>(label_of(cls, d, enhanced));
}

}  // namespace

TEST_SUITE("stats") {

TEST_CASE("ten-vertex worked example: one enveloping arc over a crossing fan") {
    const ArcDiagram d = pd("M n=10; 1-9,2-5,3-6,4-7,8-10");
    CHECK(count_k_crossings(d.upper, 2, false) == 4);
    CHECK(count_k_crossings(d.upper, 3, false) == 1);
    CHECK(count_k_nestings(d.upper, 2, false) == 3);
    const Label l = lbl(ObjectClass::Matching, d);
    CHECK(l.nest == std::vector<std::uint64_t>{3});
    CHECK(l.cross == std::vector<std::uint64_t>{4, 1});
    CHECK(max_crossing(ObjectClass::Matching, d) == 3);
    CHECK(max_nesting(ObjectClass::Matching, d) == 2);
}

TEST_CASE("five-arc crossing fan under a cover and its reversed image") {
    const ArcDiagram mu = pd("M n=10; 1-10,2-6,3-7,4-8,5-9");
    CHECK(count_k_crossings(mu.upper, 2, false) == 6);
    const Label lmu = lbl(ObjectClass::Matching, mu);
    CHECK(lmu.nest == std::vector<std::uint64_t>{4});
    CHECK(lmu.cross == std::vector<std::uint64_t>{6, 4, 1});
    CHECK(max_crossing(ObjectClass::Matching, mu) == 4);

    const ArcDiagram nu = pd("M n=10; 1-6,2-10,3-9,4-8,5-7");
    CHECK(count_k_nestings(nu.upper, 4, false) == 1);
    const Label lnu = lbl(ObjectClass::Matching, nu);
    CHECK(lnu == lmu.swapped());
}

TEST_CASE("single arc and degenerate inputs") {
    const std::vector<Arc> one = {{1, 2, 1}};
    for (int k = 2; k <= 4; ++k) {
        CHECK(count_k_crossings(one, k, false) == 0);
        CHECK(count_k_nestings(one, k, false) == 0);
    }
    CHECK(count_k_crossings(one, 1, false) == 1);
    CHECK_THROWS_AS(count_k_crossings(one, 0, false), std::invalid_argument);
    CHECK_THROWS_AS(count_k_nestings(one, -1, true), std::invalid_argument);

    const ArcDiagram empty = pd("M n=0;");
    const Label l = lbl(ObjectClass::Matching, empty);
    CHECK(l.nest.empty());
    CHECK(l.cross.empty());
    CHECK(max_crossing(ObjectClass::Matching, empty) == 0);
    CHECK(max_nesting(ObjectClass::Matching, empty) == 0);
    CHECK(max_crossing(ObjectClass::Matching, pd("M n=2; 1-2")) == 1);
    CHECK(max_nesting(ObjectClass::Matching, pd("M n=2; 1-2")) == 1);
}

TEST_CASE("enhanced reading splits loops and shared endpoints") {
    // two nested arcs over a loop: a 3-nesting only in the enhanced reading
    const std::vector<Arc> nest3 = {{1, 5, 1}, {2, 4, 1}, {3, 3, 1}};
    CHECK(count_k_nestings(nest3, 3, true) == 1);
    CHECK(count_k_nestings(nest3, 3, false) == 0);

    // a chain of three arcs meeting at shared vertices: a 3-crossing only in
    // the enhanced reading
    const std::vector<Arc> cross3 = {{1, 3, 1}, {2, 4, 1}, {3, 5, 1}};
    CHECK(count_k_crossings(cross3, 3, true) == 1);
    CHECK(count_k_crossings(cross3, 3, false) == 0);
}

TEST_CASE("nine-vertex interval of the permutation example, both directions") {
    // openers 1..4, a shared vertex at 5, closers 6..9; upper layer reading
    const std::vector<Arc> interval = {{1, 9, 1}, {2, 5, 1}, {3, 6, 1}, {4, 7, 1}, {5, 8, 1}};
    CHECK(count_k_nestings(interval, 2, true) == 4);
    CHECK(count_k_crossings(interval, 4, true) == 1);
    const Label li = label_of_arcs(interval, true);
    CHECK(li.nest == std::vector<std::uint64_t>{4});
    CHECK(li.cross == std::vector<std::uint64_t>{6, 4, 1});

    const std::vector<Arc> image = {{1, 5, 1}, {2, 9, 1}, {3, 8, 1}, {4, 7, 1}, {5, 6, 1}};
    CHECK(count_k_crossings(image, 2, true) == 4);
    CHECK(count_k_nestings(image, 4, true) == 1);
    const Label lo = label_of_arcs(image, true);
    CHECK(lo == li.swapped());
}

TEST_CASE("permutation labels count the upper layer enhanced, the lower plainly") {
    const ArcDiagram sigma = pd("S n=12; 9 5 6 7 8 3 2 1 4 12 11 10");
    const PermLabel pl = std::get<PermLabel>(label_of(ObjectClass::Permutation, sigma));
    CHECK(pl.upper.nest == std::vector<std::uint64_t>{5});
    CHECK(pl.upper.cross == std::vector<std::uint64_t>{6, 4, 1});
    CHECK(pl.lower.nest == std::vector<std::uint64_t>{3, 1});
    CHECK(pl.lower.cross == std::vector<std::uint64_t>{3});
    CHECK(max_crossing(ObjectClass::Permutation, sigma) == 4);
    CHECK(max_nesting(ObjectClass::Permutation, sigma) == 3);

    const ArcDiagram rho = pd("S n=12; 5 9 8 7 6 4 1 2 3 11 12 10");
    const PermLabel pr = std::get<PermLabel>(label_of(ObjectClass::Permutation, rho));
    CHECK(pr == pl.swapped());
}

TEST_CASE("enhanced labels of matchings and partitions treat fixed points as loops") {
    // fixed point 3 under the arc (2,5): a 2-nesting in the enhanced reading
    const ArcDiagram d = pd("M n=5; 1-4,2-5");
    const Label plain = lbl(ObjectClass::Matching, d, false);
    const Label enh = lbl(ObjectClass::Matching, d, true);
    CHECK(plain.nest.empty());
    CHECK(plain.cross == std::vector<std::uint64_t>{1});
    CHECK(enh.nest == std::vector<std::uint64_t>{2});
    CHECK(enh.cross == std::vector<std::uint64_t>{1});
}

TEST_CASE("pair classification is exhaustive on one-interval matchings") {
    // every pair of arcs is exactly one of crossing, nesting, alignment
    for (int n = 2; n <= 8; n += 2) {
        for_each_perfect_matching(n, [&](const ArcDiagram& d) {
            const std::uint64_t m = d.upper.size();
            const std::uint64_t pairs = m * (m - 1) / 2;
            const std::uint64_t c2 = count_k_crossings(d.upper, 2, false);
            const std::uint64_t n2 = count_k_nestings(d.upper, 2, false);
            CHECK(n2 + c2 + oracle::alignment_pairs(d.upper) == pairs);
        });
    }
}

TEST_CASE("chain counts agree with subset enumeration on every small object") {
    for (int n = 0; n <= 7; ++n) {
        for_each_partial_matching(n, [&](const ArcDiagram& d) {
            for (bool enhanced : {false, true}) {
                const Label got = lbl(ObjectClass::Matching, d, enhanced);
                CHECK(got == oracle::label_single(d, enhanced));
            }
        });
    }
    for (int n = 0; n <= 6; ++n) {
        for_each_set_partition(n, [&](const ArcDiagram& d) {
            for (bool enhanced : {false, true}) {
                const Label got = lbl(ObjectClass::SetPartition, d, enhanced);
                CHECK(got == oracle::label_single(d, enhanced));
            }
        });
    }
    for (int n = 0; n <= 5; ++n) {
        for_each_permutation(n, [&](const ArcDiagram& d) {
            const PermLabel got = std::get<PermLabel>(label_of(ObjectClass::Permutation, d));
            const PermLabel want = oracle::label_permutation(d);
            CHECK(got == want);
        });
    }
}

TEST_CASE("chain counts agree with subset enumeration on random wide diagrams") {
    // seeded, reproducible samples with up to 12 arcs
    std::mt19937 rng(20240917);
    for (int trial = 0; trial < 40; ++trial) {
        const int m = 8 + static_cast<int>(rng() % 5);  // 8..12 arcs
        const int n = 2 * m;
        std::vector<int> verts(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) verts[static_cast<size_t>(i)] = i + 1;
        std::shuffle(verts.begin(), verts.end(), rng);
        ArcDiagram d;
        d.n = n;
        for (int i = 0; i < m; ++i) {
            int a = verts[static_cast<size_t>(2 * i)], b = verts[static_cast<size_t>(2 * i + 1)];
            if (a > b) std::swap(a, b);
            d.upper.push_back({a, b, 1 + static_cast<int>(rng() % 3)});
        }
        canonicalize(d);
        // full coloured label: chains are counted within each colour class
        CHECK(label_of_arcs(d.upper, false) == oracle::label_of_layer(d.n, d.upper, {}, false));
        // raw chain counts take one colour class at a time
        ArcDiagram mono = d;
        for (Arc& a : mono.upper) a.colour = 1;
        for (int k = 2; k <= 5; ++k) {
            const oracle::Expansion plain_e = oracle::expand(mono.n, mono.upper, {}, false);
            CHECK(count_k_crossings(mono.upper, k, false) ==
                  oracle::count_chains(plain_e.arcs, k, true));
            CHECK(count_k_nestings(mono.upper, k, false) ==
                  oracle::count_chains(plain_e.arcs, k, false));
        }
    }
}

TEST_CASE("coloured labels sum the monochromatic sub-diagrams") {
    // exhaustive over all 2-colourings of matchings on up to 6 vertices; a
    // chain lives inside one colour class, so the label of the whole diagram
    // is the sum over its single-colour slices (fixed-point loops of the
    // enhanced reading carry colour 1 and belong to that slice)
    const auto accumulate = [](Label& sum, const Label& li) {
        if (li.nest.size() > sum.nest.size()) sum.nest.resize(li.nest.size());
        if (li.cross.size() > sum.cross.size()) sum.cross.resize(li.cross.size());
        for (size_t t = 0; t < li.nest.size(); ++t) sum.nest[t] += li.nest[t];
        for (size_t t = 0; t < li.cross.size(); ++t) sum.cross[t] += li.cross[t];
    };
    for (int n = 2; n <= 6; ++n) {
        for_each_partial_matching(n, [&](const ArcDiagram& d) {
            const int m = static_cast<int>(d.upper.size());
            for (int mask = 0; mask < (1 << m); ++mask) {
                ArcDiagram c = d;
                for (int i = 0; i < m; ++i)
                    c.upper[static_cast<size_t>(i)].colour = (mask >> i) & 1 ? 2 : 1;
                for (bool enhanced : {false, true}) {
                    std::vector<Arc> all = c.upper;
                    if (enhanced) {
                        const std::vector<Arc> loops = oracle::isolated_as_loops(c.n, c.upper);
                        all.insert(all.end(), loops.begin(), loops.end());
                    }
                    Label sum;
                    for (int colour : {1, 2}) {
                        std::vector<Arc> slice;
                        for (const Arc& a : all)
                            if (a.colour == colour) slice.push_back(a);
                        accumulate(sum, label_of_arcs(slice, enhanced));
                    }
                    const Label whole = lbl(ObjectClass::Matching, c, enhanced);
                    CHECK(whole == sum);
                    CHECK(whole == label_of_arcs(all, enhanced));
                }
            }
        });
    }
}

}  // TEST_SUITE
