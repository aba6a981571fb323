#include "cref/refine.hpp"

#include <algorithm>

namespace cref {

void RefineState::init(const Digraph& g, const Colouring& alpha) {
    n = g.vertex_count();
    const int cap = n + 1; // colours are 1..n
    list_next.assign(n, -1);
    list_prev.assign(n, -1);
    class_head.assign(cap, -1);
    class_tail.assign(cap, -1);
    class_size.assign(cap, 0);
    colour.assign(n, 0);
    cdeg.assign(n, 0);
    adjacent.assign(cap, {});
    colors_adj.clear();
    colors_adj_flag.assign(cap, 0);
    maxcdeg.assign(cap, 0);
    mincdeg.assign(cap, 0);
    colors_split.clear();
    const int degree_cap = std::max(n, g.max_out_degree()) + 2;
    numcdeg.assign(degree_cap, 0);
    new_colour_of_degree.assign(degree_cap, 0);
    worklist.clear();
    queue_head = 0;
    in_worklist.assign(cap, 0);
    maxcolour = alpha.classes;
    reg_next.assign(cap, -1);
    reg_prev.assign(cap, -1);
    in_registry.assign(cap, 0);
    registry_head = -1;
    ledger.begin(n);
    for (int v = 0; v < n; ++v) {
        colour[v] = alpha.colour[v];
        class_append(alpha.colour[v], v);
    }
}

void RefineState::class_append(int c, int v) {
    list_next[v] = -1;
    list_prev[v] = class_tail[c];
    if (class_tail[c] != -1)
        list_next[class_tail[c]] = v;
    else
        class_head[c] = v;
    class_tail[c] = v;
    if (++class_size[c] == 2)
        registry_add(c);
}

void RefineState::class_remove(int v) {
    const int c = colour[v];
    if (list_prev[v] != -1)
        list_next[list_prev[v]] = list_next[v];
    else
        class_head[c] = list_next[v];
    if (list_next[v] != -1)
        list_prev[list_next[v]] = list_prev[v];
    else
        class_tail[c] = list_prev[v];
    if (--class_size[c] == 1)
        registry_remove(c);
}

void RefineState::worklist_push(int c) {
    if (in_worklist[c])
        throw contract_error("worklist_push: colour already queued");
    in_worklist[c] = 1;
    worklist.push_back(c);
}

int RefineState::worklist_pop() {
    int c;
    if (policy == WorklistPolicy::stack) {
        c = worklist.back();
        worklist.pop_back();
    } else {
        c = worklist[queue_head++];
        if (queue_head == worklist.size()) {
            worklist.clear();
            queue_head = 0;
        }
    }
    in_worklist[c] = 0;
    return c;
}

bool RefineState::worklist_empty() const {
    return policy == WorklistPolicy::stack ? worklist.empty()
                                           : queue_head == worklist.size();
}

void RefineState::registry_add(int c) {
    if (in_registry[c])
        return;
    in_registry[c] = 1;
    reg_prev[c] = -1;
    reg_next[c] = registry_head;
    if (registry_head != -1)
        reg_prev[registry_head] = c;
    registry_head = c;
}

void RefineState::registry_remove(int c) {
    if (!in_registry[c])
        return;
    in_registry[c] = 0;
    if (reg_prev[c] != -1)
        reg_next[reg_prev[c]] = reg_next[c];
    else
        registry_head = reg_next[c];
    if (reg_next[c] != -1)
        reg_prev[reg_next[c]] = reg_prev[c];
}

void split_up_colour(RefineState& st, int s) {
    const int maxd = st.maxcdeg[s];
    const int mind = st.mincdeg[s];
    if (mind >= maxd)
        throw contract_error("split_up_colour: colour class does not split");

    for (int i = 1; i <= maxd; ++i)
        st.numcdeg[i] = 0;
    st.numcdeg[0] = st.class_size[s] - static_cast<int>(st.adjacent[s].size());
    for (int v : st.adjacent[s])
        ++st.numcdeg[st.cdeg[v]];

    int b = 0;
    for (int i = 1; i <= maxd; ++i)
        if (st.numcdeg[i] > st.numcdeg[b])
            b = i;

    const bool instack = st.in_worklist[s];
    for (int i = 0; i <= maxd; ++i) {
        if (st.numcdeg[i] < 1)
            continue;
        if (i == mind) {
            st.new_colour_of_degree[i] = s;
            if (!instack && b != i)
                st.worklist_push(s);
        } else {
            st.new_colour_of_degree[i] = ++st.maxcolour;
            if (instack || i != b)
                st.worklist_push(st.maxcolour);
        }
    }
    // Only vertices with cdeg >= 1 can move; a vertex of degree 0 keeps s,
    // and enumerating it would break the per-iteration cost bound.
    for (int v : st.adjacent[s]) {
        const int c = st.new_colour_of_degree[st.cdeg[v]];
        if (c != s) {
            st.class_remove(v);
            st.class_append(c, v);
            st.colour[v] = c;
        }
    }
}

RefineEngine::RefineEngine(const Digraph& g, const Colouring& alpha, WorklistPolicy policy,
                           bool debug_checks)
    : g_(&g), debug_checks_(debug_checks) {
    if (alpha.size() != g.vertex_count())
        throw contract_error("refine: colouring size does not match graph");
    if (!alpha.is_surjective())
        throw contract_error("refine: initial colouring is not surjective");
    st_.policy = policy;
    st_.init(g, alpha);
}

void RefineEngine::seed_worklist(std::span<const int> colours) {
    if (!st_.worklist_empty())
        throw contract_error("seed_worklist: worklist not empty");
    std::vector<int> sorted(colours.begin(), colours.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int c : sorted) {
        if (c < 1 || c > st_.maxcolour)
            throw contract_error("seed_worklist: colour outside 1..l");
        st_.worklist_push(c);
    }
}

void RefineEngine::run() {
    while (!st_.worklist_empty()) {
        const int r = st_.worklist_pop();
        process_refining_colour(r);
        if (debug_checks_)
            assert_scratch_clean();
    }
}

void RefineEngine::process_refining_colour(int r) {
    RefineState& st = st_;
    const std::int64_t size_r = st.class_size[r];
    std::int64_t indeg_sum = 0;

    for (int v = st.class_head[r]; v != -1; v = st.list_next[v]) {
        st.ledger.note_member(v, size_r);
        for (int w : g_->in_neighbours(v)) {
            ++indeg_sum;
            const int d = ++st.cdeg[w];
            const int cw = st.colour[w];
            if (d == 1)
                st.adjacent[cw].push_back(w);
            if (!st.colors_adj_flag[cw]) {
                st.colors_adj_flag[cw] = 1;
                st.colors_adj.push_back(cw);
            }
            if (d > st.maxcdeg[cw])
                st.maxcdeg[cw] = d;
        }
    }

    for (int c : st.colors_adj) {
        if (static_cast<int>(st.adjacent[c].size()) != st.class_size[c]) {
            st.mincdeg[c] = 0;
        } else {
            int mn = st.maxcdeg[c];
            for (int v : st.adjacent[c])
                mn = std::min(mn, st.cdeg[v]);
            st.mincdeg[c] = mn;
        }
    }

    st.colors_split.clear();
    for (int c : st.colors_adj)
        if (st.mincdeg[c] < st.maxcdeg[c])
            st.colors_split.push_back(c);
    // Split in increasing colour order; the split list is small enough that
    // a comparison sort stays within the iteration budget.
    std::sort(st.colors_split.begin(), st.colors_split.end());

    const int colours_before = st.maxcolour;
    const int split_sort_size = static_cast<int>(st.colors_split.size());
    for (int s : st.colors_split)
        split_up_colour(st, s);

    st.ledger.record_iteration(r, size_r, indeg_sum, st.maxcolour - colours_before,
                               split_sort_size);

    // Reset touched scratch only; a full sweep would break the cost bound.
    for (int c : st.colors_adj) {
        for (int v : st.adjacent[c])
            st.cdeg[v] = 0;
        st.maxcdeg[c] = 0;
        st.adjacent[c].clear();
        st.colors_adj_flag[c] = 0;
    }
    st.colors_adj.clear();
}

void RefineEngine::assert_scratch_clean() const {
    const RefineState& st = st_;
    auto ensure = [](bool ok, const char* what) {
        if (!ok)
            throw contract_error(std::string("debug sweep: ") + what);
    };
    for (int v = 0; v < st.n; ++v)
        ensure(st.cdeg[v] == 0, "cdeg not reset");
    for (int c = 1; c <= st.maxcolour; ++c) {
        ensure(st.maxcdeg[c] == 0, "maxcdeg not reset");
        ensure(st.adjacent[c].empty(), "adjacency list not reset");
        ensure(!st.colors_adj_flag[c], "touched-colour flag not reset");
    }
    ensure(st.colors_adj.empty(), "touched-colour list not reset");
    std::vector<char> live(st.maxcolour + 1, 0);
    for (std::size_t i = st.policy == WorklistPolicy::stack ? 0 : st.queue_head;
         i < st.worklist.size(); ++i)
        live[st.worklist[i]] = 1;
    for (int c = 1; c <= st.maxcolour; ++c)
        ensure(st.in_worklist[c] == live[c], "worklist flag out of sync");
    for (int c = 1; c <= st.maxcolour; ++c)
        ensure(static_cast<bool>(st.in_registry[c]) == (st.class_size[c] >= 2),
               "non-singleton registry out of sync");
    // the classes 1..maxcolour form a partition of V into nonempty cells and
    // the tracked sizes equal the true list lengths
    int covered = 0;
    for (int c = 1; c <= st.maxcolour; ++c) {
        int length = 0;
        for (int v = st.class_head[c]; v != -1; v = st.list_next[v]) {
            ensure(st.colour[v] == c, "vertex listed under the wrong colour");
            ++length;
        }
        ensure(length == st.class_size[c], "tracked class size mismatch");
        ensure(length >= 1, "empty colour class");
        covered += length;
    }
    ensure(covered == st.n, "colour classes do not cover the vertex set");
}

int RefineEngine::individualise(int v) {
    if (!st_.worklist_empty())
        throw contract_error("individualise: worklist not empty");
    if (v < 0 || v >= st_.n)
        throw contract_error("individualise: vertex out of range");
    if (st_.class_size[st_.colour[v]] < 2)
        throw contract_error("individualise: vertex colour already unique");
    st_.class_remove(v);
    const int fresh = ++st_.maxcolour;
    st_.class_append(fresh, v);
    st_.colour[v] = fresh;
    st_.worklist_push(fresh);
    return fresh;
}

Colouring RefineEngine::current_colouring() const {
    Colouring beta;
    beta.colour = st_.colour;
    beta.classes = st_.maxcolour;
    return beta;
}

Partition RefineEngine::current_partition() const {
    return partition_of(current_colouring());
}

RefineResult refine(const Digraph& g, const Colouring& alpha, std::span<const int> sufficient,
                    const RefineOptions& options) {
    RefineEngine engine(g, alpha, options.policy, options.debug_checks);
    engine.seed_worklist(sufficient);
    engine.run();
    return {engine.current_colouring(), engine.ledger()};
}

RefineResult refine(const Digraph& g, const Colouring& alpha, const RefineOptions& options) {
    std::vector<int> all(alpha.classes);
    for (int c = 1; c <= alpha.classes; ++c)
        all[c - 1] = c;
    return refine(g, alpha, all, options);
}

namespace {

template <typename NeighbourFn>
bool stable_generic(int n, const Partition& p, NeighbourFn&& neighbours) {
    if (p.ground_size() != n)
        throw contract_error("is_stable: ground-set mismatch");
    // signature of v: sorted (cell, count) pairs over neighbours
    std::vector<std::vector<std::pair<int, int>>> sig(n);
    std::vector<int> buffer;
    for (int v = 0; v < n; ++v) {
        buffer.clear();
        for (int u : neighbours(v))
            buffer.push_back(p.cell_of(u));
        std::sort(buffer.begin(), buffer.end());
        auto& s = sig[v];
        for (std::size_t i = 0; i < buffer.size(); ++i) {
            if (s.empty() || s.back().first != buffer[i])
                s.emplace_back(buffer[i], 1);
            else
                ++s.back().second;
        }
    }
    for (const auto& cell : p.cells())
        for (std::size_t i = 1; i < cell.size(); ++i)
            if (sig[cell[i]] != sig[cell[0]])
                return false;
    return true;
}

} // namespace

bool is_stable(const Digraph& g, const Partition& p) {
    return stable_generic(g.vertex_count(), p, [&](int v) { return g.out_neighbours(v); });
}

bool is_stable_undirected(const UndirectedGraph& g, const Partition& p) {
    return stable_generic(g.vertex_count(), p, [&](int v) { return g.neighbours(v); });
}

} // namespace cref
