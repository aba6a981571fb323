#pragma once

#include <span>
#include <vector>

#include "cref/graph.hpp"
#include "cref/ledger.hpp"
#include "cref/partition.hpp"

namespace cref {

enum class WorklistPolicy { stack, queue };

// Mutable working set of the refinement engine. Colour classes are intrusive
// doubly linked vertex lists with O(1) removal; all scratch structures obey
// the reset invariant: at the top of each refining iteration cdeg[v] = 0 for
// all v, maxcdeg[c] = 0 and adjacent[c] empty for all c, colors_adj empty.
struct RefineState {
    int n = 0;
    WorklistPolicy policy = WorklistPolicy::stack;

    // colour classes C[c]
    std::vector<int> list_next, list_prev; // per vertex, -1 terminated
    std::vector<int> class_head, class_tail, class_size; // per colour
    std::vector<int> colour; // per vertex

    // refinement scratch
    std::vector<int> cdeg;                  // per vertex
    std::vector<std::vector<int>> adjacent; // A[c]: vertices of colour c with cdeg >= 1
    std::vector<int> colors_adj;
    std::vector<char> colors_adj_flag;
    std::vector<int> maxcdeg, mincdeg; // per colour
    std::vector<int> colors_split;
    std::vector<int> numcdeg;              // per colour degree, one split at a time
    std::vector<int> new_colour_of_degree; // per colour degree

    // worklist of refining colours
    std::vector<int> worklist;
    std::size_t queue_head = 0;
    std::vector<char> in_worklist;

    int maxcolour = 0;

    // registry of colour classes of size >= 2, doubly linked over colours
    std::vector<int> reg_next, reg_prev;
    std::vector<char> in_registry;
    int registry_head = -1;

    CostLedger ledger;

    void init(const Digraph& g, const Colouring& alpha);

    void class_append(int c, int v);
    void class_remove(int v);

    void worklist_push(int c);
    int worklist_pop();
    bool worklist_empty() const;

    void registry_add(int c);
    void registry_remove(int c);
};

// Splits colour class s by the colour degrees computed for the current
// refining class. Vertices with the minimum occurring degree keep colour s;
// higher degrees get fresh colours in increasing-degree order. Worklist
// update follows the Hopcroft rule: with s still in the worklist all new
// colours are pushed; otherwise every colour of the split is pushed except
// the one whose degree has the largest vertex count (smallest such degree on
// ties). Precondition: mincdeg[s] < maxcdeg[s].
void split_up_colour(RefineState& st, int s);

class RefineEngine {
public:
    RefineEngine(const Digraph& g, const Colouring& alpha,
                 WorklistPolicy policy = WorklistPolicy::stack, bool debug_checks = false);

    // Pushes the given colours (sorted ascending) onto the empty worklist.
    void seed_worklist(std::span<const int> colours);

    // Processes refining colours until the worklist is empty.
    void run();

    // Moves v into a fresh colour class of its own and seeds the worklist
    // with exactly that colour. Requires an empty worklist and a non-unique
    // current colour for v. Returns the new colour.
    int individualise(int v);

    Colouring current_colouring() const;
    Partition current_partition() const;
    int colour_count() const { return st_.maxcolour; }
    bool worklist_empty() const { return st_.worklist_empty(); }

    const CostLedger& ledger() const { return st_.ledger; }
    const Digraph& graph() const { return *g_; }
    RefineState& state() { return st_; }
    const RefineState& state() const { return st_; }

private:
    void process_refining_colour(int r);
    void assert_scratch_clean() const;

    const Digraph* g_;
    RefineState st_;
    bool debug_checks_ = false;
};

struct RefineOptions {
    WorklistPolicy policy = WorklistPolicy::stack;
    bool debug_checks = false;
};

struct RefineResult {
    Colouring beta;
    CostLedger ledger;
};

// Canonical colour refinement: beta is the canonical surjective k-colouring
// whose partition is the coarsest stable partition refining alpha's.
// `sufficient` must be a sufficient refining colour set for alpha
// ({1..alpha.classes} always is).
RefineResult refine(const Digraph& g, const Colouring& alpha, std::span<const int> sufficient,
                    const RefineOptions& options = {});

// Convenience overload seeding the full colour set {1..alpha.classes}.
RefineResult refine(const Digraph& g, const Colouring& alpha, const RefineOptions& options = {});

// True iff for all cells S, R of p and u,v in S: |N+(u) cap R| = |N+(v) cap R|.
bool is_stable(const Digraph& g, const Partition& p);

// Undirected stability: neighbour counts in place of out-neighbour counts.
bool is_stable_undirected(const UndirectedGraph& g, const Partition& p);

} // namespace cref
