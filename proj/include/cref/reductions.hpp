#pragma once

#include <vector>

#include "cref/graph.hpp"
#include "cref/partition.hpp"
#include "cref/refine.hpp"

namespace cref {

// Re-expressions of undirected, edge-coloured and bi-stable refinement as
// plain digraph refinement, plus end-to-end pipelines returning canonical
// colourings.

// Canonical coarsest stable colouring of an undirected graph, computed on
// the doubled digraph.
Colouring refine_undirected(const UndirectedGraph& g, const Colouring& alpha,
                            WorklistPolicy policy = WorklistPolicy::stack);

struct EdgeColouredReduction {
    Digraph graph;       // n + m vertices, 2m edges
    Colouring alpha;     // originals colour 1, subdivision vertex of an edge
                         // with colour j gets colour j + 1
    std::vector<int> original_to_reduced; // identity embedding of originals
};

// Subdivides every edge e = (u,v) with a fresh vertex v_e carrying the edge
// colour; v_e is numbered n + (input edge index).
EdgeColouredReduction reduce_edge_coloured(const EdgeColouredDigraph& g);

// Canonical coarsest edge-colour stable colouring on the original vertices,
// recompressed to a surjective colouring by ascending engine colour.
Colouring refine_edge_coloured(const EdgeColouredDigraph& g,
                               WorklistPolicy policy = WorklistPolicy::stack);

// 2-edge-coloured digraph on the same vertices: each edge (u,v) contributes
// (u,v) with colour 1 and (v,u) with colour 2 (parallel edges permitted).
EdgeColouredDigraph reduce_bistable(const Digraph& g);

// Canonical coarsest bi-stable colouring of a digraph.
Colouring refine_bistable(const Digraph& g, WorklistPolicy policy = WorklistPolicy::stack);

// Restriction of a colouring to the first `count` vertices, recompressed to
// a surjective colouring by ascending colour (deterministic and
// isomorphism-invariant).
Colouring restrict_and_compress(const Colouring& c, int count);

} // namespace cref
