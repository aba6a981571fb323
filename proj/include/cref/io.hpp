#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "cref/graph.hpp"
#include "cref/partition.hpp"

namespace cref {

enum class GraphKind { digraph, graph, ecdigraph, ts };

// Result of parsing one graph file. Exactly the member matching `kind` is
// engaged. `colouring` holds the densified vertex colours when the file has
// "c" lines (or the default unit colouring otherwise); for transition
// systems the labels live inside the TransitionSystem and `had_colour_lines`
// still reports whether any were given explicitly.
struct ParsedGraph {
    GraphKind kind = GraphKind::digraph;
    std::optional<Digraph> digraph;
    std::optional<UndirectedGraph> undirected;
    std::optional<EdgeColouredDigraph> edge_coloured;
    std::optional<TransitionSystem> ts;
    Colouring colouring;
    bool had_colour_lines = false;

    int vertex_count() const;
};

// Text format, one record per line, '#' starts a comment:
//   header: "digraph n m" | "graph n m" | "ecdigraph n m p" | "ts n m"
//   edges:  "e u v" | "e u v j" (ecdigraph only)
//   vertex colours/labels: "c v x" (optional; default x = 1)
// Vertices are 1-based in files.
ParsedGraph parse_graph(std::string_view text);
ParsedGraph parse_graph_file(const std::string& path);

// Output colouring format: one line "v <vertex> <colour>" per vertex in
// vertex order (1-based), then "classes <k>".
std::string format_colouring(const Colouring& c);
// The same data as a single self-describing JSON document.
std::string format_colouring_json(const Colouring& c);

std::string format_graph(const UndirectedGraph& g);
std::string format_graph(const Digraph& g);
std::string format_graph(const EdgeColouredDigraph& g);
std::string format_graph(const TransitionSystem& g);

} // namespace cref
