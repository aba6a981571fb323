#pragma once

#include "cref/graph.hpp"
#include "cref/partition.hpp"

namespace cref {

// Coarsest bisimulation equivalence refining the label partition: two
// states stay together iff they carry the same label and, for every class C
// of the result, either both or neither have a successor in C. Fixpoint of
// boolean refining rounds; ground truth for bisimilarity_fast.
Partition bisimilarity_naive(const TransitionSystem& ts);

// Same partition computed with the coarsest-relational-partition worklist
// discipline: a splitter block B taken from a compound block S (processing
// the smaller half) splits each class three ways by (has edge into B, has
// edge into S \ B), using counts into S and counts into B.
Partition bisimilarity_fast(const TransitionSystem& ts);

// Checks that p is a bisimulation on ts refining the label partition.
bool is_bisimulation(const TransitionSystem& ts, const Partition& p);

} // namespace cref
