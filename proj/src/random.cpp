#include "cref/random.hpp"

namespace cref {

Digraph random_digraph(Rng& rng, int n, double edge_probability) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && rng.chance(edge_probability))
                edges.emplace_back(u, v);
    return Digraph(n, std::move(edges), Digraph::Mode::simple);
}

UndirectedGraph random_undirected(Rng& rng, int n, double edge_probability) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.chance(edge_probability))
                edges.emplace_back(u, v);
    return UndirectedGraph(n, std::move(edges));
}

EdgeColouredDigraph random_edge_coloured(Rng& rng, int n, double edge_probability,
                                         int max_colours) {
    std::vector<EcEdge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && rng.chance(edge_probability))
                edges.push_back({u, v, rng.range(1, max_colours)});
    return EdgeColouredDigraph(n, std::move(edges));
}

TransitionSystem random_transition_system(Rng& rng, int n, double edge_probability,
                                          int max_labels) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (rng.chance(edge_probability))
                edges.emplace_back(u, v);
    std::vector<int> labels(n);
    for (int v = 0; v < n; ++v)
        labels[v] = rng.range(1, max_labels);
    return TransitionSystem(n, std::move(edges), std::move(labels));
}

Colouring random_colouring(Rng& rng, int n, int max_classes) {
    Colouring c;
    c.colour.resize(n);
    const int bound = std::min(n, max_classes);
    for (int v = 0; v < n; ++v)
        c.colour[v] = rng.range(1, bound);
    c.classes = densify_labels(c.colour);
    return c;
}

Partition random_partition(Rng& rng, int n, int max_cells) {
    return partition_of(random_colouring(rng, n, max_cells));
}

std::vector<int> random_permutation(Rng& rng, int n) {
    std::vector<int> h(n);
    for (int v = 0; v < n; ++v)
        h[v] = v;
    for (int i = n - 1; i > 0; --i)
        std::swap(h[i], h[rng.below(i + 1)]);
    return h;
}

Digraph permuted(const Digraph& g, const std::vector<int>& h) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.edges().size());
    for (const auto& [u, v] : g.edges())
        edges.emplace_back(h[u], h[v]);
    return Digraph(g.vertex_count(), std::move(edges), g.mode());
}

Colouring permuted(const Colouring& alpha, const std::vector<int>& h) {
    Colouring out;
    out.colour.assign(alpha.size(), 0);
    out.classes = alpha.classes;
    for (int v = 0; v < alpha.size(); ++v)
        out.colour[h[v]] = alpha.colour[v];
    return out;
}

} // namespace cref
