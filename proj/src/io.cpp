#include "cref/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

namespace cref {

namespace {

struct Line {
    int number = 0;
    std::vector<std::string_view> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        ++number;
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        Line out;
        out.number = number;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
                ++i;
            std::size_t j = i;
            while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
                ++j;
            if (j > i)
                out.tokens.push_back(line.substr(i, j - i));
            i = j;
        }
        if (!out.tokens.empty())
            lines.push_back(std::move(out));
        if (end == text.size())
            break;
        pos = end + 1;
    }
    return lines;
}

[[noreturn]] void fail(int line, const std::string& message) {
    throw parse_error("line " + std::to_string(line) + ": " + message);
}

// Hard ceilings keeping every parsed quantity within int range.
constexpr long long max_vertices = 10'000'000;
constexpr long long max_edges = 1'000'000'000;
constexpr long long max_label = 1'000'000'000;

long long to_int(std::string_view tok, int line) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        fail(line, "expected an integer, got '" + std::string(tok) + "'");
    return value;
}

int vertex_1based(std::string_view tok, int n, int line) {
    long long v = to_int(tok, line);
    if (v < 1 || v > n)
        fail(line, "vertex " + std::to_string(v) + " out of range 1.." + std::to_string(n));
    return static_cast<int>(v - 1);
}

} // namespace

int ParsedGraph::vertex_count() const {
    switch (kind) {
    case GraphKind::digraph: return digraph->vertex_count();
    case GraphKind::graph: return undirected->vertex_count();
    case GraphKind::ecdigraph: return edge_coloured->vertex_count();
    case GraphKind::ts: return ts->vertex_count();
    }
    return 0;
}

ParsedGraph parse_graph(std::string_view text) {
    auto lines = tokenize(text);
    if (lines.empty())
        throw parse_error("empty graph file");

    const Line& header = lines[0];
    ParsedGraph out;
    std::size_t expect = 0;
    if (header.tokens[0] == "digraph")
        out.kind = GraphKind::digraph, expect = 3;
    else if (header.tokens[0] == "graph")
        out.kind = GraphKind::graph, expect = 3;
    else if (header.tokens[0] == "ecdigraph")
        out.kind = GraphKind::ecdigraph, expect = 4;
    else if (header.tokens[0] == "ts")
        out.kind = GraphKind::ts, expect = 3;
    else
        fail(header.number, "unknown header '" + std::string(header.tokens[0]) + "'");
    if (header.tokens.size() != expect)
        fail(header.number, "malformed header");

    const long long n_raw = to_int(header.tokens[1], header.number);
    const long long m_raw = to_int(header.tokens[2], header.number);
    if (n_raw < 1)
        fail(header.number, "vertex count must be at least 1");
    if (n_raw > max_vertices)
        fail(header.number, "vertex count too large");
    if (m_raw < 0)
        fail(header.number, "negative edge count");
    if (m_raw > max_edges)
        fail(header.number, "edge count too large");
    const int n = static_cast<int>(n_raw);
    long long p_declared = 0;
    if (out.kind == GraphKind::ecdigraph) {
        p_declared = to_int(header.tokens[3], header.number);
        if (p_declared < 0 || p_declared > max_label)
            fail(header.number, "edge-colour count out of range");
    }

    std::vector<std::pair<int, int>> plain_edges;
    std::vector<EcEdge> ec_edges;
    std::vector<int> raw_colour(n, 1);

    for (std::size_t li = 1; li < lines.size(); ++li) {
        const Line& line = lines[li];
        if (line.tokens[0] == "e") {
            const bool coloured = out.kind == GraphKind::ecdigraph;
            if (line.tokens.size() != (coloured ? 4u : 3u))
                fail(line.number, "malformed edge record");
            int u = vertex_1based(line.tokens[1], n, line.number);
            int v = vertex_1based(line.tokens[2], n, line.number);
            if (coloured) {
                long long j = to_int(line.tokens[3], line.number);
                if (j < 1 || j > max_label)
                    fail(line.number, "edge colour out of range");
                ec_edges.push_back({u, v, static_cast<int>(j)});
            } else {
                plain_edges.emplace_back(u, v);
            }
        } else if (line.tokens[0] == "c") {
            if (line.tokens.size() != 3)
                fail(line.number, "malformed colour record");
            int v = vertex_1based(line.tokens[1], n, line.number);
            long long x = to_int(line.tokens[2], line.number);
            if (x < 1)
                fail(line.number, "non-positive colour");
            if (x > max_label)
                fail(line.number, "colour label too large");
            raw_colour[v] = static_cast<int>(x);
            out.had_colour_lines = true;
        } else {
            fail(line.number, "unknown record '" + std::string(line.tokens[0]) + "'");
        }
    }

    const long long m_seen = out.kind == GraphKind::ecdigraph
                                 ? static_cast<long long>(ec_edges.size())
                                 : static_cast<long long>(plain_edges.size());
    if (m_seen != m_raw)
        throw parse_error("header declares " + std::to_string(m_raw) + " edges but file has " +
                          std::to_string(m_seen));

    out.colouring.colour = raw_colour;
    out.colouring.classes = densify_labels(out.colouring.colour);

    try {
        switch (out.kind) {
        case GraphKind::digraph:
            out.digraph.emplace(n, std::move(plain_edges), Digraph::Mode::simple);
            break;
        case GraphKind::graph:
            out.undirected.emplace(n, std::move(plain_edges));
            break;
        case GraphKind::ecdigraph:
            out.edge_coloured.emplace(n, std::move(ec_edges));
            if (p_declared != out.edge_coloured->colour_count())
                throw parse_error("header declares " + std::to_string(p_declared) +
                                  " edge colours but file uses " +
                                  std::to_string(out.edge_coloured->colour_count()));
            break;
        case GraphKind::ts:
            out.ts.emplace(n, std::move(plain_edges), raw_colour);
            break;
        }
    } catch (const contract_error& e) {
        throw parse_error(e.what());
    }
    return out;
}

ParsedGraph parse_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw parse_error("cannot open file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_graph(buffer.str());
}

std::string format_colouring(const Colouring& c) {
    std::string out;
    for (int v = 0; v < c.size(); ++v) {
        out += "v ";
        out += std::to_string(v + 1);
        out += ' ';
        out += std::to_string(c.colour[v]);
        out += '\n';
    }
    out += "classes " + std::to_string(c.classes) + "\n";
    return out;
}

std::string format_colouring_json(const Colouring& c) {
    nlohmann::json doc;
    doc["type"] = "colouring";
    doc["n"] = c.size();
    doc["classes"] = c.classes;
    doc["colours"] = c.colour;
    return doc.dump() + "\n";
}

namespace {

std::string format_plain(const char* head, int n, const std::vector<std::pair<int, int>>& edges,
                         const std::vector<int>* labels) {
    std::string out = std::string(head) + " " + std::to_string(n) + " " +
                      std::to_string(edges.size()) + "\n";
    for (const auto& [u, v] : edges)
        out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
    if (labels)
        for (int v = 0; v < n; ++v)
            if ((*labels)[v] != 1)
                out += "c " + std::to_string(v + 1) + " " + std::to_string((*labels)[v]) + "\n";
    return out;
}

} // namespace

std::string format_graph(const UndirectedGraph& g) {
    return format_plain("graph", g.vertex_count(), g.edges(), nullptr);
}

std::string format_graph(const Digraph& g) {
    return format_plain("digraph", g.vertex_count(), g.edges(), nullptr);
}

std::string format_graph(const EdgeColouredDigraph& g) {
    std::string out = "ecdigraph " + std::to_string(g.vertex_count()) + " " +
                      std::to_string(g.edge_count()) + " " + std::to_string(g.colour_count()) +
                      "\n";
    for (const auto& e : g.edges())
        out += "e " + std::to_string(e.from + 1) + " " + std::to_string(e.to + 1) + " " +
               std::to_string(e.colour) + "\n";
    return out;
}

std::string format_graph(const TransitionSystem& g) {
    return format_plain("ts", g.vertex_count(), g.edges(), &g.labels());
}

} // namespace cref
