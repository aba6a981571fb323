#include <doctest.h>

#include <cmath>

#include "cref/oracle.hpp"
#include "cref/random.hpp"
#include "cref/refine.hpp"

using namespace cref;

namespace {

// Per-run accounting invariants: refining-class sizes halve per vertex and
// the total work stays within (n+m) log2 n + n cost units.
void check_ledger_invariants(const Digraph& g, const CostLedger& ledger) {
    CHECK(ledger.halving_violations() == 0);
    const double n = g.vertex_count();
    const double m = g.edge_count();
    const double bound = (n + m) * std::log2(n) + n;
    CHECK(static_cast<double>(ledger.cost_units()) <= bound);
}

} // namespace

TEST_CASE("out-regular digraphs keep the unit colouring") {
    const Digraph cycle(3, {{0, 1}, {1, 2}, {2, 0}});
    const RefineResult r = refine(cycle, Colouring::unit(3));
    CHECK(r.beta.classes == 1);
    CHECK(r.beta.colour == std::vector<int>{1, 1, 1});
    check_ledger_invariants(cycle, r.ledger);
}

TEST_CASE("directed path gets the hand-traced colour numbers") {
    const Digraph path(3, {{0, 1}, {1, 2}});
    const RefineResult r = refine(path, Colouring::unit(3));
    CHECK(r.beta.classes == 3);
    CHECK(r.beta.colour == std::vector<int>{2, 3, 1});
    CHECK(partition_of(r.beta) == naive_coarsest_stable(path, Partition::unit(3)));
    check_ledger_invariants(path, r.ledger);
}

TEST_CASE("doubled star splits centre from leaves") {
    const UndirectedGraph star(4, {{0, 1}, {0, 2}, {0, 3}});
    const Digraph g = doubled(star);
    const RefineResult r = refine(g, Colouring::unit(4));
    CHECK(r.beta.classes == 2);
    CHECK(r.beta.colour[1] == r.beta.colour[2]);
    CHECK(r.beta.colour[1] == r.beta.colour[3]);
    CHECK(r.beta.colour[0] != r.beta.colour[1]);
    CHECK(partition_of(r.beta) == naive_coarsest_stable(g, Partition::unit(4)));
    check_ledger_invariants(g, r.ledger);
}

TEST_CASE("edgeless graphs keep the initial colouring") {
    const Digraph g(5, {});
    Colouring alpha;
    alpha.colour = {1, 2, 1, 2, 1};
    alpha.classes = 2;
    const RefineResult r = refine(g, alpha);
    CHECK(r.beta.colour == alpha.colour);
    CHECK(r.beta.classes == 2);
}

TEST_CASE("precondition violations are rejected") {
    const Digraph g(3, {{0, 1}});
    Colouring gap;
    gap.colour = {1, 3, 3};
    gap.classes = 3;
    CHECK_THROWS_AS(refine(g, gap), contract_error);

    const std::vector<int> bad_seed{5};
    CHECK_THROWS_AS(refine(g, Colouring::unit(3), bad_seed), contract_error);
    CHECK_THROWS_AS(refine(g, Colouring::unit(4)), contract_error);
}

namespace {

// State mid-iteration: colour degrees already counted for the current
// refining class, colour s about to split.
RefineState make_split_state(const Digraph& g, int classes, const std::vector<int>& cdeg) {
    Colouring alpha = Colouring::unit(g.vertex_count());
    alpha.classes = classes;
    RefineState st;
    st.policy = WorklistPolicy::stack;
    st.init(g, alpha);
    for (int v = 0; v < g.vertex_count(); ++v) {
        st.cdeg[v] = cdeg[v];
        if (cdeg[v] >= 1)
            st.adjacent[st.colour[v]].push_back(v);
    }
    for (int c = 1; c <= classes; ++c) {
        for (int v : st.adjacent[c])
            st.maxcdeg[c] = std::max(st.maxcdeg[c], st.cdeg[v]);
        if (static_cast<int>(st.adjacent[c].size()) != st.class_size[c]) {
            st.mincdeg[c] = 0;
        } else {
            st.mincdeg[c] = st.maxcdeg[c];
            for (int v : st.adjacent[c])
                st.mincdeg[c] = std::min(st.mincdeg[c], st.cdeg[v]);
        }
    }
    return st;
}

} // namespace

TEST_CASE("split keeps s for the zero-degree part and skips the popular colour") {
    // C[1] = {0,1,2}, cdeg = {0,1,1}, 1 not in the worklist: vertex 0 keeps
    // colour 1, {1,2} get colour 2; degree 1 is the most popular so the new
    // colour is skipped and colour 1 is pushed.
    const Digraph g(3, {});
    RefineState st = make_split_state(g, 1, {0, 1, 1});
    split_up_colour(st, 1);
    CHECK(st.colour == std::vector<int>{1, 2, 2});
    CHECK(st.maxcolour == 2);
    CHECK(st.worklist == std::vector<int>{1});
    CHECK(st.in_worklist[1]);
    CHECK_FALSE(st.in_worklist[2]);
}

TEST_CASE("split of a class with uniform colour degrees is a contract violation") {
    const Digraph g(3, {});
    RefineState st = make_split_state(g, 1, {1, 1, 1});
    CHECK(st.mincdeg[1] == st.maxcdeg[1]);
    CHECK_THROWS_AS(split_up_colour(st, 1), contract_error);
}

TEST_CASE("split with s in the worklist pushes every new colour") {
    // C[1] = {0,1}, cdeg = {1,2}, 1 in the worklist: 0 keeps colour 1,
    // 1 moves to colour 2, colour 2 is pushed, colour 1 stays queued.
    const Digraph g(2, {});
    RefineState st = make_split_state(g, 1, {1, 2});
    st.worklist_push(1);
    split_up_colour(st, 1);
    CHECK(st.colour == std::vector<int>{1, 2});
    CHECK(st.worklist == std::vector<int>{1, 2});
    CHECK(st.in_worklist[1]);
    CHECK(st.in_worklist[2]);
}

TEST_CASE("stability check") {
    const Digraph cycle(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(is_stable(cycle, Partition::unit(3)));
    const Digraph path(3, {{0, 1}, {1, 2}});
    CHECK_FALSE(is_stable(path, Partition::unit(3)));
    CHECK(is_stable(path, Partition::discrete(3)));
    CHECK_THROWS_AS(is_stable(path, Partition::unit(4)), contract_error);
}

TEST_CASE("engine agrees with the naive fixpoint on random instances") {
    Rng rng(1234);
    for (int t = 0; t < 120; ++t) {
        const int n = rng.range(1, 50);
        constexpr double densities[] = {0.1, 0.3, 0.5};
        const Digraph g = random_digraph(rng, n, densities[rng.below(3)]);
        const Colouring alpha = random_colouring(rng, n, 5);
        const Partition expected = naive_coarsest_stable(g, partition_of(alpha));
        for (WorklistPolicy policy : {WorklistPolicy::stack, WorklistPolicy::queue}) {
            const RefineResult r = refine(g, alpha, RefineOptions{policy});
            CHECK(partition_of(r.beta) == expected);
            CHECK(is_stable(g, partition_of(r.beta)));
            check_ledger_invariants(g, r.ledger);
        }
    }
}

TEST_CASE("colour numbers are canonical under colour-preserving isomorphisms") {
    Rng rng(99);
    for (int t = 0; t < 60; ++t) {
        const int n = rng.range(2, 24);
        const Digraph g = random_digraph(rng, n, 0.3);
        const Colouring alpha = random_colouring(rng, n, 4);
        const std::vector<int> h = random_permutation(rng, n);
        const Digraph g2 = permuted(g, h);
        const Colouring alpha2 = permuted(alpha, h);
        for (WorklistPolicy policy : {WorklistPolicy::stack, WorklistPolicy::queue}) {
            const Colouring beta = refine(g, alpha, RefineOptions{policy}).beta;
            const Colouring beta2 = refine(g2, alpha2, RefineOptions{policy}).beta;
            for (int v = 0; v < n; ++v)
                CHECK(beta2.colour[h[v]] == beta.colour[v]);
        }
    }
}

TEST_CASE("stack and queue policies compute the same partition") {
    Rng rng(7);
    for (int t = 0; t < 40; ++t) {
        const int n = rng.range(1, 40);
        const Digraph g = random_digraph(rng, n, 0.25);
        const Colouring alpha = random_colouring(rng, n, 3);
        const Colouring stack = refine(g, alpha, RefineOptions{WorklistPolicy::stack}).beta;
        const Colouring queue = refine(g, alpha, RefineOptions{WorklistPolicy::queue}).beta;
        CHECK(partition_of(stack) == partition_of(queue));
    }
}

TEST_CASE("scratch structures are clean after every iteration") {
    Rng rng(31);
    for (int t = 0; t < 20; ++t) {
        const int n = rng.range(1, 20);
        const Digraph g = random_digraph(rng, n, 0.4);
        const Colouring alpha = random_colouring(rng, n, 3);
        for (WorklistPolicy policy : {WorklistPolicy::stack, WorklistPolicy::queue}) {
            RefineOptions options{policy, true};
            CHECK_NOTHROW(refine(g, alpha, options));
        }
    }
}

TEST_CASE("self-loops count towards the colour degree") {
    // loop at 0 plus edge 0->1: out-degrees 2 and 0
    const Digraph g(2, {{0, 0}, {0, 1}}, Digraph::Mode::multi);
    const RefineResult r = refine(g, Colouring::unit(2));
    CHECK(r.beta.classes == 2);
    CHECK(partition_of(r.beta) == naive_coarsest_stable(g, Partition::unit(2)));
}

TEST_CASE("multigraphs with loops and parallel edges match the oracle") {
    Rng rng(77);
    for (int t = 0; t < 80; ++t) {
        const int n = rng.range(1, 25);
        std::vector<std::pair<int, int>> edges;
        const int m = rng.below(3 * n + 1);
        for (int e = 0; e < m; ++e)
            edges.emplace_back(rng.below(n), rng.below(n));
        const Digraph g(n, std::move(edges), Digraph::Mode::multi);
        const Colouring alpha = random_colouring(rng, n, 4);
        for (WorklistPolicy policy : {WorklistPolicy::stack, WorklistPolicy::queue}) {
            const RefineResult r = refine(g, alpha, RefineOptions{policy, true});
            CHECK(partition_of(r.beta) == naive_coarsest_stable(g, partition_of(alpha)));
            CHECK(r.ledger.halving_violations() == 0);
        }
    }
}

TEST_CASE("isomorphic components receive pairwise matching colours") {
    Rng rng(88);
    for (int t = 0; t < 40; ++t) {
        const int n = rng.range(1, 15);
        const Digraph g = random_digraph(rng, n, 0.3);
        std::vector<std::pair<int, int>> edges = g.edges();
        const std::vector<int> h = random_permutation(rng, n);
        for (const auto& [u, v] : g.edges())
            edges.emplace_back(n + h[u], n + h[v]);
        const Digraph two(2 * n, std::move(edges));
        const Colouring beta = refine(two, Colouring::unit(2 * n)).beta;
        for (int v = 0; v < n; ++v)
            CHECK(beta.colour[v] == beta.colour[n + h[v]]);
    }
}

TEST_CASE("identical runs produce identical ledgers") {
    Rng rng(101);
    const Digraph g = random_digraph(rng, 30, 0.3);
    const RefineResult a = refine(g, Colouring::unit(30));
    const RefineResult b = refine(g, Colouring::unit(30));
    CHECK(a.ledger.to_csv() == b.ledger.to_csv());
    CHECK(a.beta.colour == b.beta.colour);
}

TEST_CASE("ledger CSV layout") {
    const Digraph path(3, {{0, 1}, {1, 2}});
    const RefineResult r = refine(path, Colouring::unit(3));
    const std::string csv = r.ledger.to_csv();
    CHECK(csv.rfind("iteration,r,size_R,D_minus_R,new_colours\n", 0) == 0);
    CHECK(csv.find("\ntotal,,") != std::string::npos);
    std::int64_t size_sum = 0, indeg_sum = 0, new_sum = 0;
    for (const auto& rec : r.ledger.records()) {
        size_sum += rec.class_size;
        indeg_sum += rec.in_degree_sum;
        new_sum += rec.new_colours;
    }
    CHECK(size_sum == r.ledger.total_class_size());
    CHECK(indeg_sum == r.ledger.total_in_degree());
    CHECK(new_sum == r.ledger.total_new_colours());
}

TEST_CASE("re-seeding a stable colouring leaves it unchanged") {
    Rng rng(55);
    const Digraph g = random_digraph(rng, 12, 0.3);
    const Colouring beta = refine(g, Colouring::unit(12)).beta;
    const std::vector<int> seed{1};
    const Colouring again = refine(g, beta, seed).beta;
    CHECK(again.colour == beta.colour);
}
