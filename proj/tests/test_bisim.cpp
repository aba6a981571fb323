#include <doctest.h>

#include "cref/bisim.hpp"
#include "cref/lowerbound.hpp"
#include "cref/oracle.hpp"
#include "cref/random.hpp"
#include "cref/refine.hpp"

using namespace cref;

namespace {

TransitionSystem chain3() {
    return TransitionSystem(3, {{0, 1}, {1, 2}}, {1, 1, 1});
}

} // namespace

TEST_CASE("a chain stratifies by distance to the sink") {
    const Partition p = bisimilarity_naive(chain3());
    CHECK(p.is_discrete());
    CHECK(bisimilarity_fast(chain3()) == p);
}

TEST_CASE("bisimilarity ignores successor multiplicities") {
    // u -> s; w -> s, w -> s2; s, s2 sinks
    const TransitionSystem ts(4, {{0, 2}, {1, 2}, {1, 3}}, {1, 1, 1, 1});
    const Partition p = bisimilarity_naive(ts);
    CHECK(p == Partition::from_cells(4, {{0, 1}, {2, 3}}));
    CHECK(bisimilarity_fast(ts) == p);
    // counting refinement distinguishes u from w
    const Partition counting =
        naive_coarsest_stable(ts.underlying_digraph(), Partition::unit(4));
    CHECK(counting.cell_of(0) != counting.cell_of(1));
}

TEST_CASE("single state and label-distinct states") {
    const TransitionSystem lone(1, {}, {1});
    CHECK(bisimilarity_naive(lone).is_unit());
    CHECK(bisimilarity_fast(lone).is_unit());

    const TransitionSystem two(2, {}, {1, 2});
    CHECK(bisimilarity_fast(two).is_discrete());
}

TEST_CASE("fast and naive agree on random transition systems") {
    Rng rng(4242);
    for (int t = 0; t < 150; ++t) {
        const int n = rng.range(1, 60);
        const TransitionSystem ts =
            random_transition_system(rng, n, rng.chance(0.5) ? 0.08 : 0.3, rng.range(1, 3));
        const Partition naive = bisimilarity_naive(ts);
        const Partition fast = bisimilarity_fast(ts);
        CHECK(fast == naive);
        CHECK(is_bisimulation(ts, naive));
        CHECK(refines(naive, partition_of(Colouring{ts.labels(), ts.label_count()})));
    }
}

TEST_CASE("counting stability refines bisimilarity") {
    Rng rng(515);
    for (int t = 0; t < 60; ++t) {
        const int n = rng.range(1, 40);
        const TransitionSystem ts = random_transition_system(rng, n, 0.2, 2);
        const Partition bisim = bisimilarity_naive(ts);
        const Partition counting = naive_coarsest_stable(
            ts.underlying_digraph(),
            partition_of(Colouring{ts.labels(), ts.label_count()}));
        CHECK(refines(counting, bisim));
    }
}

TEST_CASE("directed instance classes equal the undirected colour classes") {
    for (int k = 2; k <= 3; ++k) {
        const LowerBoundInstance gk = gen_gk(k);
        const TransitionSystem sk = gen_sk(k);
        CHECK(sk.vertex_count() == gk.graph.vertex_count());
        CHECK(sk.edge_count() == gk.graph.edge_count());
        CHECK(sk.label_count() == 1);
        const Partition colours = partition_of(
            refine(doubled(gk.graph), Colouring::unit(gk.graph.vertex_count())).beta);
        const Partition bisim = bisimilarity_fast(sk);
        CHECK(bisim == colours);
        CHECK(bisimilarity_naive(sk) == colours);
    }
}
