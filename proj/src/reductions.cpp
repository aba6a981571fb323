#include "cref/reductions.hpp"

#include <algorithm>
#include <map>

namespace cref {

Colouring refine_undirected(const UndirectedGraph& g, const Colouring& alpha,
                            WorklistPolicy policy) {
    return refine(doubled(g), alpha, RefineOptions{policy}).beta;
}

EdgeColouredReduction reduce_edge_coloured(const EdgeColouredDigraph& g) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    std::vector<std::pair<int, int>> edges;
    edges.reserve(2 * m);
    std::vector<int> colour(n + m, 1);
    for (int i = 0; i < m; ++i) {
        const EcEdge& e = g.edges()[i];
        const int mid = n + i;
        edges.emplace_back(e.from, mid);
        edges.emplace_back(mid, e.to);
        // shift the whole colour scale up by one so originals can take 1
        colour[mid] = e.colour + 1;
    }
    EdgeColouredReduction out{
        Digraph(n + m, std::move(edges), Digraph::Mode::simple),
        Colouring{},
        std::vector<int>(n),
    };
    out.alpha.colour = std::move(colour);
    out.alpha.classes = densify_labels(out.alpha.colour);
    for (int v = 0; v < n; ++v)
        out.original_to_reduced[v] = v;
    return out;
}

Colouring restrict_and_compress(const Colouring& c, int count) {
    Colouring out;
    out.colour.assign(c.colour.begin(), c.colour.begin() + count);
    out.classes = densify_labels(out.colour);
    return out;
}

Colouring refine_edge_coloured(const EdgeColouredDigraph& g, WorklistPolicy policy) {
    EdgeColouredReduction red = reduce_edge_coloured(g);
    Colouring beta = refine(red.graph, red.alpha, RefineOptions{policy}).beta;
    return restrict_and_compress(beta, g.vertex_count());
}

EdgeColouredDigraph reduce_bistable(const Digraph& g) {
    std::vector<EcEdge> edges;
    edges.reserve(2 * g.edge_count());
    for (const auto& [u, v] : g.edges()) {
        edges.push_back({u, v, 1});
        edges.push_back({v, u, 2});
    }
    return EdgeColouredDigraph(g.vertex_count(), std::move(edges));
}

Colouring refine_bistable(const Digraph& g, WorklistPolicy policy) {
    return refine_edge_coloured(reduce_bistable(g), policy);
}

} // namespace cref
