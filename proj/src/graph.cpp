#include "cref/graph.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace cref {

namespace {

void check_vertex_range(int v, int n) {
    if (v < 0 || v >= n)
        throw contract_error("vertex index out of range");
}

// Builds a CSR adjacency from (from, to) pairs keyed on `key_of`.
template <typename Pairs, typename KeyFn, typename ValFn, typename Out>
void build_csr(int n, const Pairs& pairs, KeyFn key_of, ValFn val_of,
               std::vector<int>& start, Out& flat) {
    start.assign(n + 1, 0);
    for (const auto& e : pairs)
        ++start[key_of(e) + 1];
    for (int v = 0; v < n; ++v)
        start[v + 1] += start[v];
    flat.resize(pairs.size());
    std::vector<int> cursor(start.begin(), start.end() - 1);
    for (const auto& e : pairs)
        flat[cursor[key_of(e)]++] = val_of(e);
}

} // namespace

Digraph::Digraph(int n, std::vector<std::pair<int, int>> edges, Mode mode)
    : n_(n), mode_(mode), edges_(std::move(edges)) {
    if (n <= 0)
        throw contract_error("digraph must have at least one vertex");
    for (const auto& [u, v] : edges_) {
        check_vertex_range(u, n);
        check_vertex_range(v, n);
    }
    if (mode_ == Mode::simple) {
        std::set<std::pair<int, int>> seen;
        for (const auto& e : edges_) {
            if (e.first == e.second)
                throw contract_error("self-loop not allowed in simple mode");
            if (!seen.insert(e).second)
                throw contract_error("duplicate edge in simple mode");
        }
    }
    build_csr(n_, edges_, [](const auto& e) { return e.first; },
              [](const auto& e) { return e.second; }, out_start_, out_adj_);
    build_csr(n_, edges_, [](const auto& e) { return e.second; },
              [](const auto& e) { return e.first; }, in_start_, in_adj_);
}

int Digraph::max_out_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v)
        d = std::max(d, out_degree(v));
    return d;
}

UndirectedGraph::UndirectedGraph(int n, std::vector<std::pair<int, int>> edges)
    : n_(n), edges_(std::move(edges)) {
    if (n <= 0)
        throw contract_error("graph must have at least one vertex");
    std::set<std::pair<int, int>> seen;
    for (const auto& [u, v] : edges_) {
        check_vertex_range(u, n);
        check_vertex_range(v, n);
        if (u == v)
            throw contract_error("self-loop not allowed in an undirected graph");
        if (!seen.insert({std::min(u, v), std::max(u, v)}).second)
            throw contract_error("duplicate undirected edge");
    }
    std::vector<std::pair<int, int>> half;
    half.reserve(edges_.size() * 2);
    for (const auto& [u, v] : edges_) {
        half.emplace_back(u, v);
        half.emplace_back(v, u);
    }
    build_csr(n_, half, [](const auto& e) { return e.first; },
              [](const auto& e) { return e.second; }, start_, adj_);
}

Digraph doubled(const UndirectedGraph& g) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.edge_count() * 2);
    for (const auto& [u, v] : g.edges()) {
        edges.emplace_back(u, v);
        edges.emplace_back(v, u);
    }
    return Digraph(g.vertex_count(), std::move(edges), Digraph::Mode::simple);
}

int densify_labels(std::vector<int>& labels) {
    std::map<int, int> remap;
    for (int x : labels)
        remap[x] = 0;
    int next = 0;
    for (auto& [raw, dense] : remap)
        dense = ++next;
    for (int& x : labels)
        x = remap[x];
    return next;
}

EdgeColouredDigraph::EdgeColouredDigraph(int n, std::vector<EcEdge> edges)
    : n_(n), edges_(std::move(edges)) {
    if (n <= 0)
        throw contract_error("edge-coloured digraph must have at least one vertex");
    std::vector<int> colours;
    colours.reserve(edges_.size());
    for (const auto& e : edges_) {
        check_vertex_range(e.from, n);
        check_vertex_range(e.to, n);
        if (e.colour <= 0)
            throw contract_error("edge colour must be positive");
        colours.push_back(e.colour);
    }
    p_ = densify_labels(colours);
    for (std::size_t i = 0; i < edges_.size(); ++i)
        edges_[i].colour = colours[i];
    build_csr(n_, edges_, [](const EcEdge& e) { return e.from; },
              [](const EcEdge& e) { return std::pair<int, int>(e.to, e.colour); },
              start_, out_);
}

TransitionSystem::TransitionSystem(int n, std::vector<std::pair<int, int>> edges,
                                   std::vector<int> labels)
    : n_(n), edges_(std::move(edges)), labels_(std::move(labels)),
      underlying_(n, edges_, Digraph::Mode::multi) {
    if (static_cast<int>(labels_.size()) != n)
        throw contract_error("transition system label array size mismatch");
    for (int x : labels_)
        if (x <= 0)
            throw contract_error("transition system labels must be positive");
    label_count_ = densify_labels(labels_);
}

} // namespace cref
