#include "cref/lowerbound.hpp"

#include <algorithm>
#include <map>

#include "cref/oracle.hpp"
#include "cref/refine.hpp"

namespace cref {

namespace {

// Gadget wiring with edges oriented in the flow direction (X-side towards
// Y-side); gen_gk drops the orientation, gen_sk keeps it.
struct GadgetWiring {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> flow_edges;
    std::array<int, 2> out_terminals{};
    std::vector<int> in_terminals;
    std::optional<Gadget::Recursion> recursion;
};

GadgetWiring and_gadget_wiring(int level) {
    if (level < 1)
        throw contract_error("and gadget level must be at least 1");
    GadgetWiring w;
    if (level == 1) {
        // a0, a1, b0, b1
        w.vertex_count = 4;
        w.flow_edges = {{0, 2}, {1, 3}};
        w.out_terminals = {0, 1};
        w.in_terminals = {2, 3};
        return w;
    }
    if (level == 2) {
        // a0, a1, b0..b3, c0..c3
        w.vertex_count = 10;
        w.flow_edges = {
            {0, 6}, {0, 7}, {1, 8}, {1, 9},                 // a-row -> c-row
            {6, 2}, {8, 2}, {7, 3}, {9, 3},                 // c-row -> b0, b1
            {7, 4}, {8, 4}, {6, 5}, {9, 5},                 // c-row -> b2, b3
        };
        w.out_terminals = {0, 1};
        w.in_terminals = {2, 3, 4, 5};
        return w;
    }
    const GadgetWiring core = and_gadget_wiring(2);
    const GadgetWiring child = and_gadget_wiring(level - 1);
    const int left = core.vertex_count;
    const int right = left + child.vertex_count;
    w.vertex_count = right + child.vertex_count;
    w.flow_edges = core.flow_edges;
    for (int offset : {left, right})
        for (const auto& [u, v] : child.flow_edges)
            w.flow_edges.emplace_back(u + offset, v + offset);
    // bridges: the core's in-terminal pairs feed the children's out-terminals
    w.flow_edges.emplace_back(core.in_terminals[0], left + child.out_terminals[0]);
    w.flow_edges.emplace_back(core.in_terminals[1], left + child.out_terminals[1]);
    w.flow_edges.emplace_back(core.in_terminals[2], right + child.out_terminals[0]);
    w.flow_edges.emplace_back(core.in_terminals[3], right + child.out_terminals[1]);
    w.out_terminals = core.out_terminals;
    for (int b : child.in_terminals)
        w.in_terminals.push_back(b + left);
    for (int b : child.in_terminals)
        w.in_terminals.push_back(b + right);
    w.recursion = Gadget::Recursion{0, left, right, child.vertex_count};
    return w;
}

// Complete flow-oriented wiring of the instance; shared by gen_gk / gen_sk
// so both use identical vertex numbering.
struct InstanceWiring {
    int k = 0;
    int n = 0;
    std::vector<std::pair<int, int>> flow_edges;
    std::vector<LowerBoundInstance::EmbeddedGadget> gadgets;
    std::array<int, 3> start{};
};

InstanceWiring build_instance_wiring(int k) {
    if (k < 2)
        throw contract_error("gen_gk / gen_sk require k >= 2");
    InstanceWiring w;
    w.k = k;
    const int blocks = 1 << k;
    const auto x = [&](int i) { return i; };
    const auto cx = [&](int i, int j) { return blocks + i * k + (j - 1); };
    const auto cy = [&](int i, int j) { return blocks * (1 + k) + i * k + (j - 1); };
    const auto y = [&](int i) { return blocks * (1 + 2 * k) + i; };

    int next = blocks * (2 + 2 * k);
    for (int level = 1; level <= k - 1; ++level) {
        GadgetWiring gw = and_gadget_wiring(level);
        LowerBoundInstance::EmbeddedGadget eg;
        eg.level = level;
        eg.offset = next;
        eg.vertex_count = gw.vertex_count;
        eg.out_terminals = {gw.out_terminals[0] + next, gw.out_terminals[1] + next};
        for (int b : gw.in_terminals)
            eg.in_terminals.push_back(b + next);
        w.gadgets.push_back(std::move(eg));
        next += gw.vertex_count;
    }
    w.start = {next, next + 1, next + 2};
    w.n = next + 3;

    auto& edges = w.flow_edges;
    for (int i = 0; i < blocks; ++i)
        for (int j = 1; j <= k; ++j)
            edges.emplace_back(cx(i, j), x(i));
    for (int i = 0; i < blocks; ++i)
        for (int j1 = 1; j1 <= k; ++j1)
            for (int j2 = 1; j2 <= k; ++j2)
                edges.emplace_back(cy(i, j2), cx(i, j1));
    for (int i = 0; i < blocks; ++i)
        for (int j = 1; j <= k; ++j)
            edges.emplace_back(y(i), cy(i, j));

    for (const auto& eg : w.gadgets) {
        const GadgetWiring gw = and_gadget_wiring(eg.level);
        for (const auto& [u, v] : gw.flow_edges)
            edges.emplace_back(u + eg.offset, v + eg.offset);
        // out-terminal a_i covers the X-blocks X^{level+1}_{2q+i}
        const int half = 1 << (k - eg.level - 1); // block size at level+1
        for (int i = 0; i < 2; ++i)
            for (int q = 0; q < (1 << eg.level); ++q)
                for (int t = (2 * q + i) * half; t < (2 * q + i + 1) * half; ++t)
                    edges.emplace_back(x(t), eg.out_terminals[i]);
        // in-terminal b_t covers the Y-block Y^{level}_t
        const int bsize = 1 << (k - eg.level);
        for (int t = 0; t < (1 << eg.level); ++t)
            for (int i = t * bsize; i < (t + 1) * bsize; ++i)
                edges.emplace_back(eg.in_terminals[t], y(i));
    }

    // Start-gadget orientation: v0 points into its X-half while the other
    // half points at v1 and v1 at v2. With all three start edges running
    // X-wards, v0 and v2 would both be sinks and successor-only
    // bisimilarity could not tell them apart, breaking the class-for-class
    // correspondence with the undirected instance.
    for (int i = 0; i < blocks / 2; ++i)
        edges.emplace_back(w.start[0], x(i));
    for (int i = blocks / 2; i < blocks; ++i)
        edges.emplace_back(x(i), w.start[1]);
    edges.emplace_back(w.start[1], w.start[2]);
    return w;
}

} // namespace

int and_gadget_vertex_count(int level) {
    if (level == 1)
        return 4;
    if (level == 2)
        return 10;
    return 10 + 2 * and_gadget_vertex_count(level - 1);
}

int and_gadget_edge_count(int level) {
    if (level == 1)
        return 2;
    if (level == 2)
        return 12;
    return 16 + 2 * and_gadget_edge_count(level - 1);
}

Gadget gen_and_gadget(int level) {
    GadgetWiring w = and_gadget_wiring(level);
    return Gadget{
        UndirectedGraph(w.vertex_count, w.flow_edges),
        w.out_terminals,
        w.in_terminals,
        level,
        w.recursion,
    };
}

VertexRole LowerBoundInstance::role(int v) const {
    const int blocks = block_count();
    VertexRole r;
    if (v < blocks) {
        r.kind = VertexRole::Kind::x;
        r.index = v;
    } else if (v < blocks * (1 + k)) {
        r.kind = VertexRole::Kind::cal_x;
        r.index = (v - blocks) / k;
        r.sup = (v - blocks) % k + 1;
    } else if (v < blocks * (1 + 2 * k)) {
        r.kind = VertexRole::Kind::cal_y;
        r.index = (v - blocks * (1 + k)) / k;
        r.sup = (v - blocks * (1 + k)) % k + 1;
    } else if (v < blocks * (2 + 2 * k)) {
        r.kind = VertexRole::Kind::y;
        r.index = v - blocks * (1 + 2 * k);
    } else if (v == start[0]) {
        r.kind = VertexRole::Kind::v0;
    } else if (v == start[1]) {
        r.kind = VertexRole::Kind::v1;
    } else if (v == start[2]) {
        r.kind = VertexRole::Kind::v2;
    } else {
        r.kind = VertexRole::Kind::gadget;
        for (const auto& g : gadgets)
            if (v >= g.offset && v < g.offset + g.vertex_count)
                r.gadget_level = g.level;
    }
    return r;
}

bool LowerBoundInstance::is_cal_x(int v) const {
    const int blocks = block_count();
    return v >= blocks && v < blocks * (1 + k);
}

bool LowerBoundInstance::is_cal_y(int v) const {
    const int blocks = block_count();
    return v >= blocks * (1 + k) && v < blocks * (1 + 2 * k);
}

bool LowerBoundInstance::is_xy_edge(int u, int v) const {
    return (is_cal_x(u) && is_cal_y(v)) || (is_cal_y(u) && is_cal_x(v));
}

namespace {

void check_block(int k, int level, int q) {
    if (level < 0 || level > k || q < 0 || q >= (1 << level))
        throw contract_error("binary block out of range");
}

} // namespace

std::vector<int> LowerBoundInstance::x_block(int level, int q) const {
    check_block(k, level, q);
    std::vector<int> out;
    for (int i = q << (k - level); i < ((q + 1) << (k - level)); ++i)
        out.push_back(x_vertex(i));
    return out;
}

std::vector<int> LowerBoundInstance::y_block(int level, int q) const {
    check_block(k, level, q);
    std::vector<int> out;
    for (int i = q << (k - level); i < ((q + 1) << (k - level)); ++i)
        out.push_back(y_vertex(i));
    return out;
}

std::vector<int> LowerBoundInstance::cal_x_block(int level, int q) const {
    check_block(k, level, q);
    std::vector<int> out;
    for (int i = q << (k - level); i < ((q + 1) << (k - level)); ++i)
        for (int j = 1; j <= k; ++j)
            out.push_back(cal_x_vertex(i, j));
    return out;
}

std::vector<int> LowerBoundInstance::cal_y_block(int level, int q) const {
    check_block(k, level, q);
    std::vector<int> out;
    for (int i = q << (k - level); i < ((q + 1) << (k - level)); ++i)
        for (int j = 1; j <= k; ++j)
            out.push_back(cal_y_vertex(i, j));
    return out;
}

std::vector<int> LowerBoundInstance::cal_xy_vertices() const {
    std::vector<int> out;
    const int blocks = block_count();
    for (int v = blocks; v < blocks * (1 + 2 * k); ++v)
        out.push_back(v);
    return out;
}

UndirectedGraph LowerBoundInstance::graph_without_xy() const {
    std::vector<std::pair<int, int>> edges;
    for (const auto& [u, v] : graph.edges())
        if (!is_xy_edge(u, v))
            edges.emplace_back(u, v);
    return UndirectedGraph(graph.vertex_count(), std::move(edges));
}

UndirectedGraph LowerBoundInstance::xy_subgraph() const {
    std::vector<std::pair<int, int>> edges;
    for (const auto& [u, v] : graph.edges())
        if (is_xy_edge(u, v))
            edges.emplace_back(u, v);
    return UndirectedGraph(graph.vertex_count(), std::move(edges));
}

LowerBoundInstance gen_gk(int k) {
    InstanceWiring w = build_instance_wiring(k);
    LowerBoundInstance inst;
    inst.k = k;
    inst.graph = UndirectedGraph(w.n, std::move(w.flow_edges));
    inst.gadgets = std::move(w.gadgets);
    inst.start = w.start;
    return inst;
}

TransitionSystem gen_sk(int k) {
    InstanceWiring w = build_instance_wiring(k);
    return TransitionSystem(w.n, std::move(w.flow_edges), std::vector<int>(w.n, 1));
}

std::vector<std::vector<int>> tau_partition(const BlockPartitionSpec& spec,
                                            const LowerBoundInstance& inst) {
    if (spec.k != inst.k)
        throw contract_error("tau_partition: spec and instance disagree on k");
    const int level = spec.level;
    if (level < 0 || level > inst.k - 1)
        throw contract_error("tau_partition: level out of range");
    if (spec.q_set.empty())
        throw contract_error("tau_partition: Q must be nonempty");
    std::vector<char> in_q(1 << level, 0);
    for (int q : spec.q_set) {
        if (q < 0 || q >= (1 << level))
            throw contract_error("tau_partition: Q member out of range");
        in_q[q] = 1;
    }
    std::vector<std::vector<int>> cells;
    for (int q = 0; q < (1 << (level + 1)); ++q)
        cells.push_back(inst.cal_x_block(level + 1, q));
    for (int q = 0; q < (1 << level); ++q) {
        if (in_q[q]) {
            cells.push_back(inst.cal_y_block(level, q));
        } else {
            cells.push_back(inst.cal_y_block(level + 1, 2 * q));
            cells.push_back(inst.cal_y_block(level + 1, 2 * q + 1));
        }
    }
    return cells;
}

Partition pi_partition(const BlockPartitionSpec& spec, const LowerBoundInstance& inst) {
    std::vector<std::vector<int>> cells = tau_partition(spec, inst);
    std::vector<char> covered(inst.graph.vertex_count(), 0);
    for (const auto& cell : cells)
        for (int v : cell)
            covered[v] = 1;
    std::vector<int> rest;
    for (int v = 0; v < inst.graph.vertex_count(); ++v)
        if (!covered[v])
            rest.push_back(v);
    cells.push_back(std::move(rest));
    const Partition p0 = Partition::from_cells(inst.graph.vertex_count(), std::move(cells));
    return naive_coarsest_stable(doubled(inst.graph_without_xy()), p0);
}

std::int64_t cost_of_op(const UndirectedGraph& g, const std::vector<int>& R,
                        const std::vector<int>& S) {
    std::vector<char> in_r(g.vertex_count(), 0), in_s(g.vertex_count(), 0);
    for (int v : R)
        in_r[v] = 1;
    for (int v : S)
        in_s[v] = 1;
    std::int64_t cost = 0;
    for (const auto& [u, v] : g.edges()) {
        if (in_r[u] && in_s[v])
            ++cost;
        if (in_r[v] && in_s[u])
            ++cost;
    }
    return cost;
}

std::vector<ElementaryOp> enumerate_effective_elementary(const UndirectedGraph& g,
                                                         const Partition& p) {
    if (p.ground_size() != g.vertex_count())
        throw contract_error("enumerate_effective_elementary: ground-set mismatch");
    // only cell pairs joined by at least one edge can split anything
    std::vector<std::pair<int, int>> candidates;
    for (const auto& [u, v] : g.edges()) {
        const int cu = p.cell_of(u), cv = p.cell_of(v);
        candidates.emplace_back(cu, cv);
        candidates.emplace_back(cv, cu);
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    std::vector<ElementaryOp> out;
    for (const auto& [r, s] : candidates) {
        Partition result = apply_refining_op(g, p, p.cell(r), p.cell(s));
        if (result.order() > p.order())
            out.push_back({r, s, cost_of_op(g, p.cell(r), p.cell(s)), std::move(result)});
    }
    return out;
}

std::vector<std::vector<std::vector<int>>> binary_block_partitions(int level) {
    // partitions of the index block (L, q); a block either stays whole or
    // splits into partitions of its two halves
    struct Builder {
        int depth;
        std::vector<std::vector<std::vector<int>>> of_block(int L, int q) {
            std::vector<int> whole;
            const int width = 1 << (depth - L);
            for (int i = q * width; i < (q + 1) * width; ++i)
                whole.push_back(i);
            std::vector<std::vector<std::vector<int>>> out = {{whole}};
            if (L == depth)
                return out;
            const auto lefts = of_block(L + 1, 2 * q);
            const auto rights = of_block(L + 1, 2 * q + 1);
            for (const auto& a : lefts)
                for (const auto& b : rights) {
                    std::vector<std::vector<int>> merged = a;
                    merged.insert(merged.end(), b.begin(), b.end());
                    out.push_back(std::move(merged));
                }
            return out;
        }
    };
    if (level < 0)
        throw contract_error("binary_block_partitions: negative level");
    return Builder{level}.of_block(0, 0);
}

GadgetSplitReport verify_gadget_splitting(int level, int max_level) {
    if (level > max_level)
        throw contract_error("verify_gadget_splitting: level exceeds the configured bound");
    const Gadget gadget = gen_and_gadget(level);
    const Digraph doubled_gadget = doubled(gadget.graph);
    const int n = gadget.graph.vertex_count();

    GadgetSplitReport report;
    report.level = level;
    report.all_ok = true;
    for (const auto& psi : binary_block_partitions(level)) {
        GadgetCase c;
        c.psi = psi;
        std::vector<std::vector<int>> cells;
        std::vector<std::vector<int>> psi_vertex_cells;
        for (const auto& block : psi) {
            std::vector<int> cell;
            for (int idx : block)
                cell.push_back(gadget.in_terminals[idx]);
            psi_vertex_cells.push_back(cell);
            cells.push_back(std::move(cell));
        }
        std::vector<char> is_terminal(n, 0);
        for (int b : gadget.in_terminals)
            is_terminal[b] = 1;
        std::vector<int> rest;
        for (int v = 0; v < n; ++v)
            if (!is_terminal[v])
                rest.push_back(v);
        cells.push_back(std::move(rest));

        c.rho = naive_coarsest_stable(doubled_gadget,
                                      Partition::from_cells(n, std::move(cells)));
        c.agrees_on_b = induced_cells(c.rho, gadget.in_terminals) ==
                        normalised_cells(psi_vertex_cells);
        c.out_terminals_distinguished =
            c.rho.cell_of(gadget.out_terminals[0]) != c.rho.cell_of(gadget.out_terminals[1]);
        c.all_pairs_distinguished = true;
        std::vector<int> cell_of_index(1 << level);
        for (std::size_t ci = 0; ci < psi.size(); ++ci)
            for (int idx : psi[ci])
                cell_of_index[idx] = static_cast<int>(ci);
        for (int pair = 0; pair < (1 << (level - 1)); ++pair)
            if (cell_of_index[2 * pair] == cell_of_index[2 * pair + 1])
                c.all_pairs_distinguished = false;
        c.ok = c.agrees_on_b && (c.out_terminals_distinguished == c.all_pairs_distinguished);
        report.all_ok = report.all_ok && c.ok;
        report.cases.push_back(std::move(c));
    }
    return report;
}

namespace {

std::vector<BlockPartitionSpec> sampled_specs(int k) {
    std::vector<BlockPartitionSpec> specs;
    for (int level = 0; level <= k - 1; ++level) {
        const int width = 1 << level;
        if (k <= 3) {
            for (int mask = 1; mask < (1 << width); ++mask) {
                BlockPartitionSpec spec{level, {}, k};
                for (int q = 0; q < width; ++q)
                    if (mask & (1 << q))
                        spec.q_set.push_back(q);
                specs.push_back(std::move(spec));
            }
            continue;
        }
        std::vector<std::vector<int>> qs;
        std::vector<int> full(width);
        for (int q = 0; q < width; ++q)
            full[q] = q;
        qs.push_back(full);
        qs.push_back({0});
        if (width > 1) {
            qs.push_back({width - 1});
            std::vector<int> evens;
            for (int q = 0; q < width; q += 2)
                evens.push_back(q);
            qs.push_back(evens);
        }
        for (auto& q_set : qs)
            specs.push_back({level, std::move(q_set), k});
    }
    return specs;
}

} // namespace

DiscreteXReport verify_discrete_on_x(int k) {
    const LowerBoundInstance inst = gen_gk(k);
    const int n = inst.graph.vertex_count();
    DiscreteXReport report;
    report.k = k;

    const Colouring omega_colouring =
        refine(doubled(inst.graph), Colouring::unit(n)).beta;
    const Partition omega = partition_of(omega_colouring);

    const auto x_cells = induced_cells(omega, inst.x_block(0, 0));
    report.x_discrete = static_cast<int>(x_cells.size()) == inst.block_count();

    report.all_agree_tau = true;
    report.all_refined_by_omega = true;
    const std::vector<int> cal_xy = inst.cal_xy_vertices();
    for (const auto& spec : sampled_specs(k)) {
        const auto tau = tau_partition(spec, inst);
        const Partition pi = pi_partition(spec, inst);
        if (induced_cells(pi, cal_xy) != normalised_cells(tau))
            report.all_agree_tau = false;
        if (!refines(omega, pi))
            report.all_refined_by_omega = false;
        ++report.samples_checked;
    }
    report.ok = report.x_discrete && report.all_agree_tau && report.all_refined_by_omega;
    return report;
}

ScriptResult script_cost(const UndirectedGraph& g, const Partition& p0,
                         const RefinementScript& script) {
    Partition p = p0;
    std::int64_t total = 0;
    for (std::size_t i = 0; i < script.steps.size(); ++i) {
        const auto& step = script.steps[i];
        total += cost_of_op(g, step.refining_set, step.target_set);
        try {
            p = apply_refining_op(g, p, step.refining_set, step.target_set);
        } catch (const contract_error& e) {
            throw contract_error("script step " + std::to_string(i) + ": " + e.what());
        }
    }
    return {std::move(p), total};
}

CanonicalScript build_canonical_script(const LowerBoundInstance& inst) {
    const UndirectedGraph& g = inst.graph;
    const UndirectedGraph xy = inst.xy_subgraph();
    CanonicalScript out;
    out.initial_partition = pi_partition({0, {0}, inst.k}, inst);
    Partition p = out.initial_partition;

    auto apply_step = [&](const std::vector<int>& R, const std::vector<int>& S,
                          Partition&& result) {
        const std::int64_t step_cost = cost_of_op(g, R, S);
        const std::int64_t step_xy = cost_of_op(xy, R, S);
        out.script.steps.push_back({R, S});
        out.total_cost += step_cost;
        out.xy_cost += step_xy;
        if (step_xy > 0)
            out.paid_step_costs.push_back(step_xy);
        p = std::move(result);
    };

    for (;;) {
        auto ops = enumerate_effective_elementary(g, p);
        if (ops.empty())
            break;
        // prefer a zero xy-cost operation; otherwise pay for the split with
        // the smallest (min target vertex, min refining vertex)
        int chosen = -1;
        std::pair<int, int> best_key{0, 0};
        for (std::size_t i = 0; i < ops.size(); ++i) {
            if (cost_of_op(xy, p.cell(ops[i].r_cell), p.cell(ops[i].s_cell)) == 0) {
                chosen = static_cast<int>(i);
                break;
            }
        }
        if (chosen == -1) {
            for (std::size_t i = 0; i < ops.size(); ++i) {
                const std::pair<int, int> key{
                    *std::min_element(p.cell(ops[i].s_cell).begin(), p.cell(ops[i].s_cell).end()),
                    *std::min_element(p.cell(ops[i].r_cell).begin(), p.cell(ops[i].r_cell).end())};
                if (chosen == -1 || key < best_key) {
                    chosen = static_cast<int>(i);
                    best_key = key;
                }
            }
        }
        ElementaryOp& op = ops[chosen];
        apply_step(p.cell(op.r_cell), p.cell(op.s_cell), std::move(op.result));
    }
    out.final_partition = std::move(p);
    return out;
}

RecurrenceReport verify_cost_recurrence(int k) {
    if (k < 2 || k > 4)
        throw contract_error("verify_cost_recurrence supports 2 <= k <= 4");
    const LowerBoundInstance inst = gen_gk(k);
    RecurrenceReport report;
    report.k = k;
    report.ops_match_prediction = true;
    report.costs_match = true;
    report.results_ordered = true;
    report.both_choices_equal = true;

    auto fail = [&](bool& flag, const std::string& what) {
        flag = false;
        if (report.first_failure.empty())
            report.first_failure = what;
    };

    // pi for every (level, Q-mask)
    std::map<std::pair<int, int>, Partition> pi;
    auto pi_of = [&](int level, int mask) -> const Partition& {
        auto it = pi.find({level, mask});
        if (it == pi.end()) {
            BlockPartitionSpec spec{level, {}, k};
            for (int q = 0; q < (1 << level); ++q)
                if (mask & (1 << q))
                    spec.q_set.push_back(q);
            it = pi.emplace(std::pair{level, mask}, pi_partition(spec, inst)).first;
        }
        return it->second;
    };

    for (int level = 0; level <= k - 1; ++level) {
        const int width = 1 << level;
        const std::int64_t expected_cost =
            static_cast<std::int64_t>(k) * k * (1 << (k - level - 1));
        for (int mask = 1; mask < (1 << width); ++mask) {
            ++report.partitions_checked;
            const Partition& p = pi_of(level, mask);
            const auto ops = enumerate_effective_elementary(inst.graph, p);

            // predicted: (cal_x^{l+1}_{2q} or _{2q+1}, cal_y^l_q) for q in Q
            std::vector<std::pair<std::vector<int>, std::vector<int>>> predicted;
            for (int q = 0; q < width; ++q) {
                if (!(mask & (1 << q)))
                    continue;
                for (int i = 0; i < 2; ++i) {
                    auto r = inst.cal_x_block(level + 1, 2 * q + i);
                    auto s = inst.cal_y_block(level, q);
                    std::sort(r.begin(), r.end());
                    std::sort(s.begin(), s.end());
                    predicted.emplace_back(std::move(r), std::move(s));
                }
            }
            std::sort(predicted.begin(), predicted.end());
            std::vector<std::pair<std::vector<int>, std::vector<int>>> actual;
            for (const auto& op : ops) {
                auto r = p.cell(op.r_cell);
                auto s = p.cell(op.s_cell);
                std::sort(r.begin(), r.end());
                std::sort(s.begin(), s.end());
                actual.emplace_back(std::move(r), std::move(s));
            }
            std::sort(actual.begin(), actual.end());
            if (actual != predicted)
                fail(report.ops_match_prediction,
                     "unexpected effective operation set at level " + std::to_string(level) +
                         " mask " + std::to_string(mask));
            for (const auto& op : ops)
                if (op.cost != expected_cost)
                    fail(report.costs_match, "operation cost " + std::to_string(op.cost) +
                                                 " != " + std::to_string(expected_cost));

            // ordering and equal-choice checks per q
            for (int q = 0; q < width; ++q) {
                if (!(mask & (1 << q)))
                    continue;
                std::vector<const Partition*> results;
                for (const auto& op : ops) {
                    const auto& s_cell = p.cell(op.s_cell);
                    const auto target = inst.cal_y_block(level, q);
                    if (normalised_cells({s_cell}) == normalised_cells({target}))
                        results.push_back(&op.result);
                }
                if (results.size() == 2 && !(*results[0] == *results[1]))
                    fail(report.both_choices_equal,
                         "the two refining choices disagree at q=" + std::to_string(q));
                const int rest_mask = mask & ~(1 << q);
                const Partition* successor = nullptr;
                if (rest_mask != 0)
                    successor = &pi_of(level, rest_mask);
                else if (level < k - 1)
                    successor = &pi_of(level + 1, (1 << (2 * width)) - 1);
                if (successor)
                    for (const Partition* r : results)
                        if (!refines(*successor, *r))
                            fail(report.results_ordered,
                                 "successor does not refine the operation result");
            }
        }
    }

    // lattice dynamic program over measured costs
    std::map<std::pair<int, int>, std::int64_t> memo;
    auto dp = [&](auto&& self, int level, int mask) -> std::int64_t {
        if (mask == 0) {
            if (level < k - 1)
                return self(self, level + 1, (1 << (1 << (level + 1))) - 1);
            return 0;
        }
        auto it = memo.find({level, mask});
        if (it != memo.end())
            return it->second;
        const std::int64_t op_cost = static_cast<std::int64_t>(k) * k * (1 << (k - level - 1));
        std::int64_t best = -1;
        for (int q = 0; q < (1 << level); ++q) {
            if (!(mask & (1 << q)))
                continue;
            const std::int64_t value = op_cost + self(self, level, mask & ~(1 << q));
            if (best == -1 || value < best)
                best = value;
        }
        memo[{level, mask}] = best;
        return best;
    };
    report.dp_total = dp(dp, 0, 1);
    report.bound = static_cast<std::int64_t>(k) * k * k * (1 << (k - 1));
    if (report.dp_total < report.bound)
        fail(report.results_ordered, "lattice total below the bound");

    report.ok = report.ops_match_prediction && report.costs_match && report.results_ordered &&
                report.both_choices_equal && report.dp_total >= report.bound;
    return report;
}

GkAudit audit_gk(const LowerBoundInstance& inst) {
    GkAudit a;
    const int k = inst.k;
    const std::int64_t blocks = inst.block_count();
    for (int v = 0; v < inst.graph.vertex_count(); ++v) {
        switch (inst.role(v).kind) {
        case VertexRole::Kind::x: ++a.x_count; break;
        case VertexRole::Kind::cal_x: ++a.cal_x_count; break;
        case VertexRole::Kind::cal_y: ++a.cal_y_count; break;
        case VertexRole::Kind::y: ++a.y_count; break;
        case VertexRole::Kind::gadget: ++a.gadget_vertices; break;
        default: break;
        }
    }
    for (const auto& [u, v] : inst.graph.edges()) {
        const auto ru = inst.role(u).kind;
        const auto rv = inst.role(v).kind;
        auto unordered_is = [&](VertexRole::Kind a1, VertexRole::Kind a2) {
            return (ru == a1 && rv == a2) || (ru == a2 && rv == a1);
        };
        if (unordered_is(VertexRole::Kind::cal_x, VertexRole::Kind::cal_y))
            ++a.xy_edges;
        else if (unordered_is(VertexRole::Kind::x, VertexRole::Kind::cal_x))
            ++a.x_calx_edges;
        else if (unordered_is(VertexRole::Kind::y, VertexRole::Kind::cal_y))
            ++a.y_caly_edges;
        else if (ru == VertexRole::Kind::gadget && rv == VertexRole::Kind::gadget)
            ++a.gadget_internal_edges;
        else if (unordered_is(VertexRole::Kind::x, VertexRole::Kind::gadget))
            ++a.a_to_x_edges;
        else if (unordered_is(VertexRole::Kind::y, VertexRole::Kind::gadget))
            ++a.b_to_y_edges;
        else
            ++a.start_edges;
    }
    std::int64_t expected_gadget_vertices = 0, expected_gadget_edges = 0;
    for (int level = 1; level <= k - 1; ++level) {
        expected_gadget_vertices += and_gadget_vertex_count(level);
        expected_gadget_edges += and_gadget_edge_count(level);
    }
    a.ok = a.x_count == blocks && a.y_count == blocks && a.cal_x_count == blocks * k &&
           a.cal_y_count == blocks * k && a.xy_edges == blocks * k * k &&
           a.x_calx_edges == blocks * k && a.y_caly_edges == blocks * k &&
           a.gadget_vertices == expected_gadget_vertices &&
           a.gadget_internal_edges == expected_gadget_edges &&
           a.a_to_x_edges == blocks * (k - 1) && a.b_to_y_edges == blocks * (k - 1) &&
           a.start_edges == blocks + 1 &&
           static_cast<int>(inst.gadgets.size()) == k - 1;
    return a;
}

} // namespace cref
