#include <algorithm>
#include <stdexcept>
#include <vector>

#include "doctest.h"

#include "arcnest/diagram.hpp"
#include "arcnest/enumerate.hpp"
#include "arcnest/format.hpp"

using namespace arcnest;

namespace {

ArcDiagram pd(const std::string& line) { return parse(line).second; }

}  // namespace

TEST_SUITE("diagram") {

TEST_CASE("roles partition the vertices of a matching") {
    const ArcDiagram d = pd("M n=10; 1-9,2-5,3-6,4-7,8-10");
    const auto r = roles(d, Layer::Upper);
    const std::vector<int> openers = {1, 2, 3, 4, 8};
    const std::vector<int> closers = {5, 6, 7, 9, 10};
    for (int v : openers) CHECK(r[static_cast<size_t>(v)] == VertexRole::Opener);
    for (int v : closers) CHECK(r[static_cast<size_t>(v)] == VertexRole::Closer);
}

TEST_CASE("roles of a partition include fixed points and transitories") {
    const ArcDiagram d = pd("P n=9; {1,3,5}{2}{4,6}{7,8,9}");
    const auto r = roles(d, Layer::Upper);
    CHECK(r[2] == VertexRole::FixedPoint);
    CHECK(r[3] == VertexRole::Transitory);
    CHECK(r[8] == VertexRole::Transitory);
    for (int v : {1, 4, 7}) CHECK(r[static_cast<size_t>(v)] == VertexRole::Opener);
    for (int v : {5, 6, 9}) CHECK(r[static_cast<size_t>(v)] == VertexRole::Closer);
}

TEST_CASE("single arc roles") {
    const ArcDiagram d = pd("M n=2; 1-2");
    const auto r = roles(d, Layer::Upper);
    CHECK(r[1] == VertexRole::Opener);
    CHECK(r[2] == VertexRole::Closer);
}

TEST_CASE("loops report their own role") {
    const ArcDiagram d = pd("S n=3; 1 2 3");
    CHECK(d.loops.size() == 3);
    CHECK(d.upper.empty());
    CHECK(d.lower.empty());
    const auto r = roles(d, Layer::Upper);
    for (int v = 1; v <= 3; ++v) CHECK(r[static_cast<size_t>(v)] == VertexRole::Loop);
    CHECK(roles(d, Layer::Lower)[1] == VertexRole::FixedPoint);
}

TEST_CASE("validate rejects malformed diagrams") {
    ArcDiagram bad;
    bad.n = 3;
    bad.upper = {{2, 2, 1}};
    CHECK_THROWS_AS(validate(ObjectClass::Matching, bad), std::invalid_argument);

    bad.upper = {{1, 4, 1}};
    CHECK_THROWS_AS(validate(ObjectClass::Matching, bad), std::invalid_argument);

    // transitory vertex: fine for a partition, not for a matching
    ArcDiagram chain;
    chain.n = 3;
    chain.upper = {{1, 2, 1}, {2, 3, 1}};
    CHECK_THROWS_AS(validate(ObjectClass::Matching, chain), std::invalid_argument);
    CHECK_NOTHROW(validate(ObjectClass::SetPartition, chain));

    // two arcs opening at one vertex break every class
    ArcDiagram fork;
    fork.n = 3;
    fork.upper = {{1, 2, 1}, {1, 3, 1}};
    CHECK_THROWS_AS(validate(ObjectClass::SetPartition, fork), std::invalid_argument);

    // a permutation needs exactly one in- and one out-edge per vertex
    ArcDiagram halfperm;
    halfperm.n = 3;
    halfperm.upper = {{1, 2, 1}};
    CHECK_THROWS_AS(validate(ObjectClass::Permutation, halfperm), std::invalid_argument);
}

TEST_CASE("one-line round trip over every permutation of up to five elements") {
    for (int n = 0; n <= 5; ++n) {
        std::vector<int> sigma(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) sigma[static_cast<size_t>(i)] = i + 1;
        do {
            const ArcDiagram d = from_one_line(sigma);
            CHECK_NOTHROW(validate(ObjectClass::Permutation, d));
            CHECK(to_one_line(d) == sigma);
        } while (std::next_permutation(sigma.begin(), sigma.end()));
    }
}

TEST_CASE("upper and lower arcs of a one-line form split by direction") {
    // sigma(a) = b ascending goes up, descending goes down, fixed points loop
    const ArcDiagram d = pd("S n=12; 9 5 6 7 8 3 2 1 4 12 11 10");
    const std::vector<Arc> up = {{1, 9, 1}, {2, 5, 1}, {3, 6, 1}, {4, 7, 1}, {5, 8, 1}, {10, 12, 1}};
    const std::vector<Arc> low = {{1, 8, 1}, {2, 7, 1}, {3, 6, 1}, {4, 9, 1}, {10, 12, 1}};
    CHECK(d.upper == up);
    CHECK(d.lower == low);
    CHECK(d.loops == std::vector<Arc>{{11, 11, 1}});
}

TEST_CASE("fixed points materialize as loops and back") {
    const ArcDiagram d = pd("M n=5; 2-4");
    const ArcDiagram l = with_fixed_points_as_loops(d);
    CHECK(l.loops == std::vector<Arc>{{1, 1, 1}, {3, 3, 1}, {5, 5, 1}});
    CHECK(l.upper == d.upper);
    CHECK(with_loops_as_fixed_points(l) == d);
}

TEST_CASE("isolated vertices and transitory detection") {
    const ArcDiagram d = pd("P n=9; {1,3,5}{2}{4,6}{7,8,9}");
    CHECK(isolated_vertices(d, Layer::Upper) == std::vector<int>{2});
    CHECK(has_transitory(d, Layer::Upper));
    CHECK_FALSE(has_transitory(pd("M n=4; 1-3,2-4"), Layer::Upper));
}

TEST_CASE("canonicalize sorts arcs by opener") {
    ArcDiagram d;
    d.n = 6;
    d.upper = {{3, 5, 1}, {1, 4, 1}, {2, 6, 1}};
    canonicalize(d);
    CHECK(d.upper == std::vector<Arc>{{1, 4, 1}, {2, 6, 1}, {3, 5, 1}});
}

TEST_CASE("class and role names") {
    CHECK(std::string(to_string(ObjectClass::Matching)) == "matching");
    CHECK(std::string(to_string(ObjectClass::SetPartition)) == "set-partition");
    CHECK(std::string(to_string(ObjectClass::Permutation)) == "permutation");
    CHECK(std::string(to_string(VertexRole::Transitory)) == "transitory");
}

}  // TEST_SUITE
