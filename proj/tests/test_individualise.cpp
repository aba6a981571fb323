#include <doctest.h>

#include <cmath>

#include "cref/individualise.hpp"
#include "cref/random.hpp"

using namespace cref;

TEST_CASE("a directed 4-cycle needs one individualisation") {
    const Digraph cycle(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    const BranchTrace trace = branch_refine(cycle, Colouring::unit(4),
                                            {SelectorPolicy::first_min_colour,
                                             WorklistPolicy::stack, true});
    CHECK(trace.steps.size() == 1);
    CHECK(trace.final_colouring.classes == 4);
}

TEST_CASE("an already discrete colouring needs no individualisation") {
    const Digraph g(3, {{0, 1}});
    Colouring alpha;
    alpha.colour = {2, 3, 1};
    alpha.classes = 3;
    const BranchTrace trace = branch_refine(g, alpha);
    CHECK(trace.steps.empty());
    CHECK(trace.final_colouring.colour == alpha.colour);
}

TEST_CASE("the complete digraph on three vertices needs two individualisations") {
    const Digraph k3(3, {{0, 1}, {1, 0}, {0, 2}, {2, 0}, {1, 2}, {2, 1}});
    const BranchTrace trace = branch_refine(k3, Colouring::unit(3),
                                            {SelectorPolicy::first_min_colour,
                                             WorklistPolicy::stack, true});
    CHECK(trace.steps.size() == 2);
    CHECK(trace.final_colouring.classes == 3);
}

TEST_CASE("selector policies") {
    // classes: 1 -> {0}, 2 -> {1, 2} after refining the out-star by hand
    const Digraph g(5, {});
    Colouring alpha;
    alpha.colour = {1, 2, 2, 3, 3};
    alpha.classes = 3;
    RefineEngine engine(g, alpha);
    SUBCASE("first vertex of the lowest-numbered non-singleton class") {
        CHECK(select_vertex(engine, SelectorPolicy::first_min_colour) == 1);
    }
    SUBCASE("smallest and largest classes with ties to the lowest colour") {
        CHECK(select_vertex(engine, SelectorPolicy::smallest_class) == 1);
        CHECK(select_vertex(engine, SelectorPolicy::largest_class) == 1);
        engine.individualise(1); // classes: {0}, {2}, {3,4}, {1}
        engine.run();
        CHECK(select_vertex(engine, SelectorPolicy::smallest_class) == 3);
        CHECK(select_vertex(engine, SelectorPolicy::largest_class) == 3);
    }
    SUBCASE("discrete states have no candidate") {
        const Digraph d(2, {});
        Colouring discrete;
        discrete.colour = {2, 1};
        discrete.classes = 2;
        RefineEngine done(d, discrete);
        CHECK_THROWS_AS(select_vertex(done, SelectorPolicy::first_min_colour),
                        contract_error);
    }
}

TEST_CASE("classes {1:{a}, 2:{b,c}} picks the head of class 2") {
    const Digraph g(3, {});
    Colouring alpha;
    alpha.colour = {1, 2, 2};
    alpha.classes = 2;
    RefineEngine engine(g, alpha);
    CHECK(select_vertex(engine, SelectorPolicy::first_min_colour) == 1);
    CHECK(select_vertex(engine, SelectorPolicy::largest_class) == 1);
}

TEST_CASE("largest-class selector prefers the bigger class") {
    const Digraph g(5, {});
    Colouring alpha;
    alpha.colour = {1, 1, 2, 2, 2};
    alpha.classes = 2;
    RefineEngine engine(g, alpha);
    CHECK(select_vertex(engine, SelectorPolicy::largest_class) == 2);
    CHECK(select_vertex(engine, SelectorPolicy::smallest_class) == 0);
}

TEST_CASE("individualisation preconditions") {
    const Digraph g(3, {});
    Colouring alpha;
    alpha.colour = {1, 1, 2};
    alpha.classes = 2;
    RefineEngine engine(g, alpha);
    CHECK_THROWS_AS(engine.individualise(2), contract_error); // already unique
    std::vector<int> seed{1, 2};
    engine.seed_worklist(seed);
    CHECK_THROWS_AS(engine.individualise(0), contract_error); // worklist busy
}

TEST_CASE("branches end discrete with per-vertex halving across the whole run") {
    Rng rng(2024);
    for (int t = 0; t < 60; ++t) {
        const int n = rng.range(1, 40);
        const Digraph g = random_digraph(rng, n, 0.25);
        const Colouring alpha = random_colouring(rng, n, 3);
        for (SelectorPolicy selector :
             {SelectorPolicy::first_min_colour, SelectorPolicy::smallest_class,
              SelectorPolicy::largest_class}) {
            const BranchTrace trace =
                branch_refine(g, alpha, {selector, WorklistPolicy::stack, n <= 20});
            CHECK(trace.final_colouring.classes == n);
            // final colouring is a bijection onto 1..n
            std::vector<char> used(n + 1, 0);
            for (int c : trace.final_colouring.colour) {
                CHECK(!used[c]);
                used[c] = 1;
            }
            // colour counts strictly increase along the trace
            for (std::size_t i = 0; i < trace.steps.size(); ++i) {
                CHECK(trace.steps[i].colours_after > trace.steps[i].colours_before);
                if (i + 1 < trace.steps.size())
                    CHECK(trace.steps[i + 1].colours_before == trace.steps[i].colours_after);
            }
            CHECK(trace.ledger.halving_violations() == 0);
            const double bound =
                (n + g.edge_count()) * std::log2(std::max(2, n)) + n;
            CHECK(static_cast<double>(trace.ledger.cost_units()) <= bound);
        }
    }
}
