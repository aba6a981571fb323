#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cref/graph.hpp"
#include "cref/partition.hpp"

namespace cref {

// Adversarial instance families forcing any partition-refinement strategy to
// spend (n+m) log n work, plus the cost model and machine checks of the
// structural facts behind the bound.

// Recursive and-gadget: the coarsest stable partition refining a partition
// of the in-terminals into binary blocks distinguishes the two
// out-terminals iff every in-terminal pair is distinguished.
struct Gadget {
    UndirectedGraph graph;
    std::array<int, 2> out_terminals; // a0, a1
    std::vector<int> in_terminals;    // b0 .. b_{2^level - 1}
    int level = 0;

    struct Recursion {
        int core_offset = 0;  // the level-2 gadget on top
        int left_offset = 0;  // first level-(l-1) child
        int right_offset = 0; // second child
        int child_vertex_count = 0;
    };
    std::optional<Recursion> recursion; // engaged for level >= 3
};

// level 1: two disjoint terminal edges; level 2: the 10-vertex core with
// 12 edges; level >= 3: a level-2 core atop two level-(l-1) children with
// four bridge edges.
Gadget gen_and_gadget(int level);

struct VertexRole {
    enum class Kind { x, cal_x, cal_y, y, gadget, v0, v1, v2 };
    Kind kind = Kind::x;
    int index = -1;        // i for x / cal_x / cal_y / y
    int sup = -1;          // j (1..k) for cal_x / cal_y
    int gadget_level = -1; // for gadget-internal vertices
};

class LowerBoundInstance {
public:
    int k = 0;
    UndirectedGraph graph{1, {}};

    struct EmbeddedGadget {
        int level = 0;
        int offset = 0;
        int vertex_count = 0;
        std::array<int, 2> out_terminals{};
        std::vector<int> in_terminals;
    };
    std::vector<EmbeddedGadget> gadgets; // levels 1..k-1 in order
    std::array<int, 3> start{};          // v0, v1, v2

    int block_count() const { return 1 << k; }
    int x_vertex(int i) const { return i; }
    int cal_x_vertex(int i, int j) const { return block_count() + i * k + (j - 1); }
    int cal_y_vertex(int i, int j) const {
        return block_count() * (1 + k) + i * k + (j - 1);
    }
    int y_vertex(int i) const { return block_count() * (1 + 2 * k) + i; }

    VertexRole role(int v) const;
    bool is_cal_x(int v) const;
    bool is_cal_y(int v) const;
    bool is_xy_edge(int u, int v) const;

    // Binary-block vertex sets; level L in 0..k, q in 0..2^L - 1.
    std::vector<int> x_block(int level, int q) const;
    std::vector<int> y_block(int level, int q) const;
    std::vector<int> cal_x_block(int level, int q) const;
    std::vector<int> cal_y_block(int level, int q) const;
    std::vector<int> cal_xy_vertices() const;

    // The spanning subgraph with all cal_x -- cal_y edges removed.
    UndirectedGraph graph_without_xy() const;
    // The spanning subgraph with only the cal_x -- cal_y edges.
    UndirectedGraph xy_subgraph() const;
};

LowerBoundInstance gen_gk(int k);

// Directed version of the same construction with a constant labelling:
// flow runs X -> gadgets -> Y -> cal_y -> cal_x -> X and X -> start.
// Vertex numbering matches gen_gk(k).
TransitionSystem gen_sk(int k);

// tau_{Q,l}: the partition of cal_x + cal_y with cells cal_x^{l+1}_q for all
// q, cal_y^l_q for q in Q, and the two level-(l+1) halves for q outside Q.
struct BlockPartitionSpec {
    int level = 0;      // l in 0..k-1
    std::vector<int> q_set; // nonempty subset of 0..2^l-1
    int k = 0;
};

std::vector<std::vector<int>> tau_partition(const BlockPartitionSpec& spec,
                                            const LowerBoundInstance& inst);

// Coarsest stable partition of the xy-stripped graph refining tau + rest.
Partition pi_partition(const BlockPartitionSpec& spec, const LowerBoundInstance& inst);

// Cost of a refining operation: ordered pairs (u,v) with uv an edge, u in R,
// v in S; an edge inside R cap S counts twice.
std::int64_t cost_of_op(const UndirectedGraph& g, const std::vector<int>& R,
                        const std::vector<int>& S);

struct ElementaryOp {
    int r_cell = 0;
    int s_cell = 0;
    std::int64_t cost = 0;
    Partition result;
};

// All cell pairs (R,S) of p whose refining operation strictly refines p.
std::vector<ElementaryOp> enumerate_effective_elementary(const UndirectedGraph& g,
                                                         const Partition& p);

// All partitions of {0 .. 2^level - 1} into binary blocks.
std::vector<std::vector<std::vector<int>>> binary_block_partitions(int level);

struct GadgetCase {
    std::vector<std::vector<int>> psi; // index blocks over in-terminals
    bool agrees_on_b = false;
    bool out_terminals_distinguished = false;
    bool all_pairs_distinguished = false;
    bool ok = false;
    Partition rho;
};

struct GadgetSplitReport {
    int level = 0;
    std::vector<GadgetCase> cases;
    bool all_ok = false;
};

// For every binary-block psi: the coarsest stable partition of the gadget
// refining psi agrees with psi on the in-terminals, and distinguishes the
// out-terminals iff psi distinguishes every in-terminal pair. The number of
// binary-block partitions grows doubly exponentially, hence the level cap.
GadgetSplitReport verify_gadget_splitting(int level, int max_level = 4);

struct DiscreteXReport {
    int k = 0;
    bool x_discrete = false;
    int samples_checked = 0;
    bool all_agree_tau = false;
    bool all_refined_by_omega = false;
    bool ok = false;
};

// omega = coarsest stable partition of the doubled instance from unit:
// checks omega restricted to X is discrete, each sampled pi agrees with its
// tau on cal_x + cal_y, and omega refines each sampled pi.
DiscreteXReport verify_discrete_on_x(int k);

struct ScriptStep {
    std::vector<int> refining_set;
    std::vector<int> target_set;
};

struct RefinementScript {
    std::vector<ScriptStep> steps;
};

struct ScriptResult {
    Partition final_partition;
    std::int64_t total_cost = 0;
};

// Sequential application with cost accumulation; a closedness violation at
// step i raises contract_error naming i.
ScriptResult script_cost(const UndirectedGraph& g, const Partition& p0,
                         const RefinementScript& script);

struct CanonicalScript {
    Partition initial_partition; // pi at level 0 with Q = {0}
    RefinementScript script;
    std::int64_t total_cost = 0;
    std::int64_t xy_cost = 0;                  // cost restricted to cal_x--cal_y edges
    std::vector<std::int64_t> paid_step_costs; // xy costs of the paying steps
    Partition final_partition;
};

// Greedy level-by-level script from the level-0 pi partition: exhaust
// effective elementary operations of zero xy-cost, then pay for one block
// split, until no effective elementary operation remains. Its total xy-cost
// certifies the lattice bound from above.
CanonicalScript build_canonical_script(const LowerBoundInstance& inst);

struct RecurrenceReport {
    int k = 0;
    int partitions_checked = 0;
    bool ops_match_prediction = false;
    bool costs_match = false;
    bool results_ordered = false;
    bool both_choices_equal = false;
    std::int64_t dp_total = 0;
    std::int64_t bound = 0;
    bool ok = false;
    std::string first_failure;
};

// Exhaustive over the (Q, l) lattice (k <= 4): the effective elementary
// operations on pi_{Q,l} are exactly the predicted block pairs of cost
// k^2 2^{k-(l+1)}, pi_{Q\{q},l} refines each result, and the lattice
// dynamic program totals at least 2^{k-1} k^3.
RecurrenceReport verify_cost_recurrence(int k);

struct GkAudit {
    std::int64_t x_count = 0, cal_x_count = 0, cal_y_count = 0, y_count = 0;
    std::int64_t gadget_vertices = 0;
    std::int64_t xy_edges = 0, x_calx_edges = 0, y_caly_edges = 0;
    std::int64_t gadget_internal_edges = 0, a_to_x_edges = 0, b_to_y_edges = 0;
    std::int64_t start_edges = 0;
    bool ok = false;
};

// Recounts components from the graph and role map and compares them with
// the closed forms.
GkAudit audit_gk(const LowerBoundInstance& inst);

// Closed forms for the gadget recursion.
int and_gadget_vertex_count(int level);
int and_gadget_edge_count(int level);

} // namespace cref
