#pragma once

#include <vector>

#include "cref/refine.hpp"

namespace cref {

enum class SelectorPolicy { first_min_colour, smallest_class, largest_class };

struct BranchStep {
    int vertex = 0;          // individualised vertex
    int colours_before = 0;  // colour count before individualisation
    int colours_after = 0;   // colour count after re-refinement
};

struct BranchTrace {
    std::vector<BranchStep> steps;
    Colouring final_colouring; // discrete: a bijection V -> {1..n}
    CostLedger ledger;         // spans the entire branch
};

// Picks a vertex with a non-unique colour from the engine's registry of
// non-singleton classes. first_min_colour takes the first vertex of the
// lowest-numbered non-singleton class; smallest_class / largest_class take
// the first vertex of the smallest / largest one, ties to lowest colour.
// Throws if every class is a singleton.
int select_vertex(const RefineEngine& engine, SelectorPolicy policy);

struct BranchOptions {
    SelectorPolicy selector = SelectorPolicy::first_min_colour;
    WorklistPolicy policy = WorklistPolicy::stack;
    // Check is_stable at every loop head (test instrumentation).
    bool check_stability = false;
};

// One branch of individualisation-refinement: stabilise, then repeatedly
// individualise a vertex and re-stabilise, reusing the engine state so the
// whole branch stays within the refining cost bound. The result is discrete
// but not canonical.
BranchTrace branch_refine(const Digraph& g, const Colouring& alpha,
                          const BranchOptions& options = {});

} // namespace cref
