#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "cref/errors.hpp"

namespace cref {

// Vertices are 0-based throughout the library; file formats are 1-based and
// the io layer converts. Adjacency is stored as contiguous per-vertex
// segments built once at construction; graphs are immutable afterwards.

class Digraph {
public:
    enum class Mode { simple, multi };

    Digraph(int n, std::vector<std::pair<int, int>> edges, Mode mode = Mode::simple);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    Mode mode() const { return mode_; }

    std::span<const int> out_neighbours(int v) const {
        return {out_adj_.data() + out_start_[v], out_adj_.data() + out_start_[v + 1]};
    }
    std::span<const int> in_neighbours(int v) const {
        return {in_adj_.data() + in_start_[v], in_adj_.data() + in_start_[v + 1]};
    }
    int out_degree(int v) const { return out_start_[v + 1] - out_start_[v]; }
    int in_degree(int v) const { return in_start_[v + 1] - in_start_[v]; }
    int max_out_degree() const;

    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

private:
    int n_ = 0;
    Mode mode_ = Mode::simple;
    std::vector<std::pair<int, int>> edges_;
    std::vector<int> out_adj_, in_adj_;
    std::vector<int> out_start_, in_start_;
};

class UndirectedGraph {
public:
    UndirectedGraph(int n, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    std::span<const int> neighbours(int v) const {
        return {adj_.data() + start_[v], adj_.data() + start_[v + 1]};
    }
    int degree(int v) const { return start_[v + 1] - start_[v]; }

    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<int> adj_;
    std::vector<int> start_;
};

// Replaces every undirected edge {u,v} by the two directed edges (u,v), (v,u).
Digraph doubled(const UndirectedGraph& g);

struct EcEdge {
    int from = 0;
    int to = 0;
    int colour = 0; // 1..p after normalisation
};

// Edge-coloured digraph; parallel edges and loops permitted. Edge colours are
// densified to 1..p (order-preservingly) on construction.
class EdgeColouredDigraph {
public:
    EdgeColouredDigraph(int n, std::vector<EcEdge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int colour_count() const { return p_; }

    const std::vector<EcEdge>& edges() const { return edges_; }

    // Per-vertex out-edges as (target, edge colour) pairs.
    std::span<const std::pair<int, int>> out_edges(int v) const {
        return {out_.data() + start_[v], out_.data() + start_[v + 1]};
    }

private:
    int n_ = 0;
    int p_ = 0;
    std::vector<EcEdge> edges_;
    std::vector<std::pair<int, int>> out_;
    std::vector<int> start_;
};

// Vertex-labelled directed graph. Labels are densified to 1..L.
class TransitionSystem {
public:
    TransitionSystem(int n, std::vector<std::pair<int, int>> edges, std::vector<int> labels);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int label_count() const { return label_count_; }
    int label(int v) const { return labels_[v]; }
    const std::vector<int>& labels() const { return labels_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    std::span<const int> successors(int v) const { return underlying_.out_neighbours(v); }
    std::span<const int> predecessors(int v) const { return underlying_.in_neighbours(v); }

    const Digraph& underlying_digraph() const { return underlying_; }

private:
    int n_ = 0;
    int label_count_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<int> labels_;
    Digraph underlying_;
};

// Densifies arbitrary positive labels to 1..L preserving their relative
// order. Returns the number of distinct labels.
int densify_labels(std::vector<int>& labels);

} // namespace cref
