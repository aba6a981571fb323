#include "cref/oracle.hpp"

#include <algorithm>
#include <cstdint>

namespace cref {

namespace {

// Signatures are flat integer sequences compared lexicographically; the
// encoding per vertex is produced by a callback so the same fixpoint driver
// serves every stability notion.
using Signature = std::vector<std::int64_t>;

// Sorted run-length encoding of `keys` appended to sig as (key, count) pairs.
void append_counted(Signature& sig, std::vector<std::int64_t>& keys) {
    std::sort(keys.begin(), keys.end());
    for (std::size_t i = 0; i < keys.size();) {
        std::size_t j = i;
        while (j < keys.size() && keys[j] == keys[i])
            ++j;
        sig.push_back(keys[i]);
        sig.push_back(static_cast<std::int64_t>(j - i));
        i = j;
    }
}

// One full (V,V)-style refining round: split every cell by signature.
template <typename SigFn>
Partition split_round(const Partition& p, SigFn&& signature_of) {
    const int n = p.ground_size();
    std::vector<Signature> sig(n);
    for (int v = 0; v < n; ++v)
        sig[v] = signature_of(v);
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v)
        order[v] = v;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (p.cell_of(a) != p.cell_of(b))
            return p.cell_of(a) < p.cell_of(b);
        if (sig[a] != sig[b])
            return sig[a] < sig[b];
        return a < b;
    });
    std::vector<std::vector<int>> cells;
    for (int i = 0; i < n; ++i) {
        const int v = order[i];
        if (i == 0 || p.cell_of(order[i - 1]) != p.cell_of(v) || sig[order[i - 1]] != sig[v])
            cells.emplace_back();
        cells.back().push_back(v);
    }
    return Partition::from_cells(n, std::move(cells));
}

// Marks whether `set` is a union of cells of p; throws otherwise.
std::vector<char> closed_mask(const Partition& p, const std::vector<int>& set,
                              const char* which) {
    std::vector<char> in(p.ground_size(), 0);
    for (int v : set) {
        if (v < 0 || v >= p.ground_size())
            throw contract_error(std::string("apply_refining_op: ") + which +
                                 " member out of range");
        in[v] = 1;
    }
    for (const auto& cell : p.cells()) {
        std::size_t hits = 0;
        for (int v : cell)
            hits += in[v];
        if (hits != 0 && hits != cell.size())
            throw contract_error(std::string("apply_refining_op: ") + which +
                                 " is not a union of cells");
    }
    return in;
}

template <typename NeighbourFn>
Partition apply_op_generic(const Partition& p, const std::vector<int>& R,
                           const std::vector<int>& S, NeighbourFn&& neighbours) {
    const std::vector<char> in_r = closed_mask(p, R, "R");
    const std::vector<char> in_s = closed_mask(p, S, "S");

    std::vector<std::vector<int>> cells;
    std::vector<std::int64_t> keys;
    for (const auto& cell : p.cells()) {
        if (!in_s[cell[0]]) {
            cells.push_back(cell);
            continue;
        }
        // split this cell by neighbour counts into the cells inside R
        std::vector<std::pair<Signature, int>> keyed;
        keyed.reserve(cell.size());
        for (int v : cell) {
            keys.clear();
            for (int u : neighbours(v))
                if (in_r[u])
                    keys.push_back(p.cell_of(u));
            Signature sig;
            append_counted(sig, keys);
            keyed.emplace_back(std::move(sig), v);
        }
        std::sort(keyed.begin(), keyed.end());
        for (std::size_t i = 0; i < keyed.size(); ++i) {
            if (i == 0 || keyed[i].first != keyed[i - 1].first)
                cells.emplace_back();
            cells.back().push_back(keyed[i].second);
        }
    }
    return Partition::from_cells(p.ground_size(), std::move(cells));
}

} // namespace

Partition naive_coarsest_stable(const Digraph& g, const Partition& p0) {
    if (p0.ground_size() != g.vertex_count())
        throw contract_error("naive_coarsest_stable: ground-set mismatch");
    Partition p = p0;
    for (;;) {
        const Partition& cur = p;
        Partition next = split_round(cur, [&](int v) {
            std::vector<std::int64_t> keys;
            for (int u : g.out_neighbours(v))
                keys.push_back(cur.cell_of(u));
            Signature sig;
            append_counted(sig, keys);
            return sig;
        });
        if (next.order() == p.order())
            return p;
        p = std::move(next);
    }
}

Partition naive_coarsest_stable_undirected(const UndirectedGraph& g, const Partition& p0) {
    if (p0.ground_size() != g.vertex_count())
        throw contract_error("naive_coarsest_stable_undirected: ground-set mismatch");
    Partition p = p0;
    for (;;) {
        const Partition& cur = p;
        Partition next = split_round(cur, [&](int v) {
            std::vector<std::int64_t> keys;
            for (int u : g.neighbours(v))
                keys.push_back(cur.cell_of(u));
            Signature sig;
            append_counted(sig, keys);
            return sig;
        });
        if (next.order() == p.order())
            return p;
        p = std::move(next);
    }
}

Partition apply_refining_op(const Digraph& g, const Partition& p, const std::vector<int>& R,
                            const std::vector<int>& S) {
    if (p.ground_size() != g.vertex_count())
        throw contract_error("apply_refining_op: ground-set mismatch");
    return apply_op_generic(p, R, S, [&](int v) { return g.out_neighbours(v); });
}

Partition apply_refining_op(const UndirectedGraph& g, const Partition& p,
                            const std::vector<int>& R, const std::vector<int>& S) {
    if (p.ground_size() != g.vertex_count())
        throw contract_error("apply_refining_op: ground-set mismatch");
    return apply_op_generic(p, R, S, [&](int v) { return g.neighbours(v); });
}

Partition naive_edge_colour_stable(const EdgeColouredDigraph& g, const Partition& p0) {
    if (p0.ground_size() != g.vertex_count())
        throw contract_error("naive_edge_colour_stable: ground-set mismatch");
    const std::int64_t width = g.vertex_count() + 1;
    Partition p = p0;
    for (;;) {
        const Partition& cur = p;
        Partition next = split_round(cur, [&](int v) {
            std::vector<std::int64_t> keys;
            for (const auto& [to, j] : g.out_edges(v))
                keys.push_back(static_cast<std::int64_t>(j) * width + cur.cell_of(to));
            Signature sig;
            append_counted(sig, keys);
            return sig;
        });
        if (next.order() == p.order())
            return p;
        p = std::move(next);
    }
}

Partition naive_bistable(const Digraph& g, const Partition& p0) {
    if (p0.ground_size() != g.vertex_count())
        throw contract_error("naive_bistable: ground-set mismatch");
    Partition p = p0;
    for (;;) {
        const Partition& cur = p;
        Partition next = split_round(cur, [&](int v) {
            Signature sig;
            std::vector<std::int64_t> keys;
            for (int u : g.out_neighbours(v))
                keys.push_back(cur.cell_of(u));
            append_counted(sig, keys);
            sig.push_back(-1); // out/in separator
            keys.clear();
            for (int u : g.in_neighbours(v))
                keys.push_back(cur.cell_of(u));
            append_counted(sig, keys);
            return sig;
        });
        if (next.order() == p.order())
            return p;
        p = std::move(next);
    }
}

} // namespace cref
