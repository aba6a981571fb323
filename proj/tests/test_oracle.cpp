#include <doctest.h>

#include <algorithm>

#include "cref/oracle.hpp"
#include "cref/random.hpp"
#include "cref/refine.hpp"

using namespace cref;

TEST_CASE("path refines to discrete") {
    const Digraph path(3, {{0, 1}, {1, 2}});
    CHECK(naive_coarsest_stable(path, Partition::unit(3)).is_discrete());
}

TEST_CASE("6-cycle and two triangles are not distinguished") {
    const UndirectedGraph c6(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
    const UndirectedGraph triangles(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
    CHECK(naive_coarsest_stable(doubled(c6), Partition::unit(6)).is_unit());
    CHECK(naive_coarsest_stable(doubled(triangles), Partition::unit(6)).is_unit());
}

TEST_CASE("out-regular digraphs are stable under the unit partition") {
    const Digraph cycle(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK(naive_coarsest_stable(cycle, Partition::unit(4)).is_unit());
}

TEST_CASE("refining operation splits the undirected path by degree") {
    const UndirectedGraph path(3, {{0, 1}, {1, 2}});
    const std::vector<int> all{0, 1, 2};
    const Partition p = apply_refining_op(path, Partition::unit(3), all, all);
    CHECK(p == Partition::from_cells(3, {{0, 2}, {1}}));
}

TEST_CASE("refining operation with no edges into the target is ineffective") {
    const Digraph g(4, {{0, 1}});
    const Partition p = Partition::from_cells(4, {{0, 1}, {2, 3}});
    // R = {2,3} has no out-edges at all
    const Partition q = apply_refining_op(g, p, {2, 3}, {0, 1});
    CHECK(q == p);
}

TEST_CASE("refining operation rejects sets that are not unions of cells") {
    const Digraph g(4, {{0, 1}});
    const Partition p = Partition::from_cells(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(apply_refining_op(g, p, {0}, {2, 3}), contract_error);
    CHECK_THROWS_AS(apply_refining_op(g, p, {0, 1}, {2}), contract_error);
}

TEST_CASE("edge-colour stability distinguishes by colour counts") {
    // u -> v colour 1, u -> w colour 2
    const EdgeColouredDigraph g(3, {{0, 1, 1}, {0, 2, 2}});
    const Partition p = naive_edge_colour_stable(g, Partition::unit(3));
    CHECK(p == Partition::from_cells(3, {{0}, {1, 2}}));
}

TEST_CASE("single-colour edges degenerate to plain stability") {
    Rng rng(5);
    for (int t = 0; t < 20; ++t) {
        const int n = rng.range(1, 15);
        const Digraph g = random_digraph(rng, n, 0.3);
        std::vector<EcEdge> edges;
        for (const auto& [u, v] : g.edges())
            edges.push_back({u, v, 1});
        const EdgeColouredDigraph ec(n, std::move(edges));
        CHECK(naive_edge_colour_stable(ec, Partition::unit(n)) ==
              naive_coarsest_stable(g, Partition::unit(n)));
    }
}

TEST_CASE("parallel edges count with multiplicity") {
    // 0 -> 1 twice in one component, 2 -> 3 once in the other
    const EdgeColouredDigraph g(4, {{0, 1, 1}, {0, 1, 1}, {2, 3, 1}});
    const Partition p = naive_edge_colour_stable(g, Partition::unit(4));
    CHECK(p.cell_of(0) != p.cell_of(2));
    CHECK(p.cell_of(1) == p.cell_of(3));
}

TEST_CASE("bi-stability splits the path to discrete") {
    const Digraph path(3, {{0, 1}, {1, 2}});
    CHECK(naive_bistable(path, Partition::unit(3)).is_discrete());
}

TEST_CASE("bi-stability keeps cycles and edgeless graphs unit") {
    const Digraph cycle(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK(naive_bistable(cycle, Partition::unit(4)).is_unit());
    const Digraph empty(3, {});
    CHECK(naive_bistable(empty, Partition::unit(3)).is_unit());
}

TEST_CASE("any refining operation stays between the input and the fixpoint") {
    Rng rng(17);
    for (int t = 0; t < 50; ++t) {
        const int n = rng.range(2, 14);
        const Digraph g = random_digraph(rng, n, 0.35);
        const Partition p = random_partition(rng, n, 4);
        const Partition stable = naive_coarsest_stable(g, p);
        // pick unions of cells for R and S
        std::vector<int> r_set, s_set;
        for (const auto& cell : p.cells()) {
            if (rng.chance(0.6))
                r_set.insert(r_set.end(), cell.begin(), cell.end());
            if (rng.chance(0.6))
                s_set.insert(s_set.end(), cell.begin(), cell.end());
        }
        const Partition refined = apply_refining_op(g, p, r_set, s_set);
        CHECK(refines(refined, p));
        CHECK(refines(stable, refined));
    }
}

TEST_CASE("a compound refining operation equals the meet of its elementary parts") {
    Rng rng(23);
    for (int t = 0; t < 60; ++t) {
        const int n = rng.range(2, 8);
        const Digraph g = random_digraph(rng, n, 0.4);
        const Partition p = random_partition(rng, n, 3);
        std::vector<std::vector<int>> r_cells, s_cells;
        std::vector<int> r_set, s_set;
        for (const auto& cell : p.cells()) {
            if (rng.chance(0.7)) {
                r_cells.push_back(cell);
                r_set.insert(r_set.end(), cell.begin(), cell.end());
            }
            if (rng.chance(0.7)) {
                s_cells.push_back(cell);
                s_set.insert(s_set.end(), cell.begin(), cell.end());
            }
        }
        const Partition compound = apply_refining_op(g, p, r_set, s_set);

        // common refinement of the elementary results applied independently
        std::vector<Partition> parts;
        for (const auto& rc : r_cells)
            for (const auto& sc : s_cells)
                parts.push_back(apply_refining_op(g, p, rc, sc));
        std::vector<std::vector<int>> key(n);
        for (int v = 0; v < n; ++v) {
            key[v].push_back(p.cell_of(v));
            for (const Partition& part : parts)
                key[v].push_back(part.cell_of(v));
        }
        std::vector<int> order(n);
        for (int v = 0; v < n; ++v)
            order[v] = v;
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return key[a] < key[b]; });
        std::vector<std::vector<int>> meet_cells;
        for (int i = 0; i < n; ++i) {
            if (i == 0 || key[order[i]] != key[order[i - 1]])
                meet_cells.emplace_back();
            meet_cells.back().push_back(order[i]);
        }
        const Partition meet = Partition::from_cells(n, std::move(meet_cells));
        CHECK(meet == compound);

        // sequential application only refines further
        Partition sequential = p;
        for (const auto& rc : r_cells)
            for (const auto& sc : s_cells)
                sequential = apply_refining_op(g, sequential, rc, sc);
        CHECK(refines(sequential, compound));
    }
}

TEST_CASE("stable partitions separate vertices at different distances from a cell") {
    Rng rng(29);
    for (int t = 0; t < 30; ++t) {
        const int n = rng.range(3, 16);
        const UndirectedGraph g = random_undirected(rng, n, 0.25);
        const Partition stable = naive_coarsest_stable_undirected(g, Partition::unit(n));
        // BFS distance from each cell
        for (const auto& cell : stable.cells()) {
            std::vector<int> dist(n, -1);
            std::vector<int> queue(cell.begin(), cell.end());
            for (int v : cell)
                dist[v] = 0;
            for (std::size_t head = 0; head < queue.size(); ++head)
                for (int u : g.neighbours(queue[head]))
                    if (dist[u] == -1) {
                        dist[u] = dist[queue[head]] + 1;
                        queue.push_back(u);
                    }
            for (const auto& other : stable.cells())
                for (std::size_t i = 1; i < other.size(); ++i)
                    CHECK(dist[other[i]] == dist[other[0]]);
        }
    }
}

TEST_CASE("bi-stable partitions refine plain stable partitions") {
    Rng rng(41);
    for (int t = 0; t < 40; ++t) {
        const int n = rng.range(1, 20);
        const Digraph g = random_digraph(rng, n, 0.3);
        const Partition p0 = random_partition(rng, n, 3);
        CHECK(refines(naive_bistable(g, p0), naive_coarsest_stable(g, p0)));
    }
}
