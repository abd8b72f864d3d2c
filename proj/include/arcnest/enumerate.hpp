#ifndef ARCNEST_ENUMERATE_HPP
#define ARCNEST_ENUMERATE_HPP

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "arcnest/diagram.hpp"
#include "arcnest/series.hpp"

namespace arcnest {

// The four object families with closed counting series.  Permutations have
// no product-form series; they are counted by sweeping.
enum class Family { Matchings, EnhancedMatchings, SetPartitions, EnhancedSetPartitions };

const char* to_string(Family f);

// Generating series of a single indecomposable block of the given shape,
// truncated at s-degree `bound`.  Variables: s marks vertices, z connecting
// (or sole-block) arcs, x and y the arcs absorbed by the first and second
// closer blocks, p fixed points placed freely.
TruncatedSeries oc_block_series(Family f, int bound);
TruncatedSeries ococ_block_series(Family f, int bound);

// Series of one indecomposable interval: a lone vertex plus the two block
// shapes; plain set partitions additionally chain blocks through shared
// transitory vertices (a geometric sum with one vertex identified per join).
TruncatedSeries indecomposable_series(Family f, int bound);

// Full counting series: sequences of indecomposable intervals.
TruncatedSeries admissible_series(Family f, int bound);

// Coefficient sums of the full series per vertex count, indices 0..max_n.
std::vector<BigInt> admissible_counts(Family f, int max_n);

using DiagramVisitor = std::function<void(const ArcDiagram&)>;

// Exhaustive object streams on n vertices, in a deterministic order.
void for_each_partial_matching(int n, const DiagramVisitor& visit);
void for_each_perfect_matching(int n, const DiagramVisitor& visit);
void for_each_set_partition(int n, const DiagramVisitor& visit);
void for_each_permutation(int n, const DiagramVisitor& visit);

// Streams the objects of a class: partial matchings, set partitions, or
// permutations.
void for_each_object(ObjectClass cls, int n, const DiagramVisitor& visit);

BigInt factorial(int n);
BigInt binomial(int n, int k);
BigInt involution_number(int n);
BigInt bell_number(int n);
BigInt catalan_number(int n);

// Total number of objects of the class on n vertices.
BigInt count_objects(ObjectClass cls, int n);

// Brute-force count of admissible objects, independent of the series.
BigInt count_admissible(ObjectClass cls, int n, bool enhanced);

// Joint distribution of (maximal crossing, maximal nesting).  For the
// matching class the table ranges over perfect matchings of [n]; set
// partitions and permutations range over all objects on n vertices.  With
// `admissible_only` the tally is restricted to admissible diagrams.
std::map<std::pair<int, int>, BigInt> joint_table(ObjectClass cls, int n, bool enhanced,
                                                  bool admissible_only = false);

}  // namespace arcnest

#endif
