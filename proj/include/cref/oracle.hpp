#pragma once

#include <vector>

#include "cref/graph.hpp"
#include "cref/partition.hpp"

namespace cref {

// Slow, obviously-correct reference implementations used as ground truth.
// All fixpoints iterate full (V,V) refining rounds; cell counts increase
// strictly until the fixpoint, so at most n - |p0| rounds run.

// Unique coarsest stable partition refining p0 (out-neighbour counts).
Partition naive_coarsest_stable(const Digraph& g, const Partition& p0);

// Undirected variant (neighbour counts).
Partition naive_coarsest_stable_undirected(const UndirectedGraph& g, const Partition& p0);

// One refining operation (R,S): cells disjoint from S unchanged; u,v in S
// stay together iff they share a cell and have equal neighbour counts into
// every cell contained in R. R and S must be unions of cells of p.
Partition apply_refining_op(const Digraph& g, const Partition& p, const std::vector<int>& R,
                            const std::vector<int>& S);
Partition apply_refining_op(const UndirectedGraph& g, const Partition& p,
                            const std::vector<int>& R, const std::vector<int>& S);

// Coarsest partition refining p0 stable under per-edge-colour out-degree
// counts.
Partition naive_edge_colour_stable(const EdgeColouredDigraph& g, const Partition& p0);

// Coarsest partition refining p0 stable under both out- and in-neighbour
// counts.
Partition naive_bistable(const Digraph& g, const Partition& p0);

} // namespace cref
