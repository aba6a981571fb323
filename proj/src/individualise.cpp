#include "cref/individualise.hpp"

namespace cref {

int select_vertex(const RefineEngine& engine, SelectorPolicy policy) {
    const RefineState& st = engine.state();
    if (st.registry_head == -1)
        throw contract_error("select_vertex: every colour class is a singleton");
    int best = -1;
    for (int c = st.registry_head; c != -1; c = st.reg_next[c]) {
        if (best == -1) {
            best = c;
            continue;
        }
        switch (policy) {
        case SelectorPolicy::first_min_colour:
            if (c < best)
                best = c;
            break;
        case SelectorPolicy::smallest_class:
            if (st.class_size[c] < st.class_size[best] ||
                (st.class_size[c] == st.class_size[best] && c < best))
                best = c;
            break;
        case SelectorPolicy::largest_class:
            if (st.class_size[c] > st.class_size[best] ||
                (st.class_size[c] == st.class_size[best] && c < best))
                best = c;
            break;
        }
    }
    return st.class_head[best];
}

BranchTrace branch_refine(const Digraph& g, const Colouring& alpha,
                          const BranchOptions& options) {
    RefineEngine engine(g, alpha, options.policy);
    std::vector<int> seed(alpha.classes);
    for (int c = 1; c <= alpha.classes; ++c)
        seed[c - 1] = c;
    engine.seed_worklist(seed);
    engine.run();

    BranchTrace trace;
    const int n = g.vertex_count();
    while (engine.colour_count() < n) {
        if (options.check_stability && !is_stable(g, engine.current_partition()))
            throw contract_error("branch_refine: partition not stable at loop head");
        const int v = select_vertex(engine, options.selector);
        const int before = engine.colour_count();
        engine.individualise(v);
        engine.run();
        trace.steps.push_back({v, before, engine.colour_count()});
        if (engine.colour_count() <= before)
            throw contract_error("branch_refine: colour count failed to increase");
    }
    if (options.check_stability && !is_stable(g, engine.current_partition()))
        throw contract_error("branch_refine: final partition not stable");
    trace.final_colouring = engine.current_colouring();
    trace.ledger = engine.ledger();
    return trace;
}

} // namespace cref
