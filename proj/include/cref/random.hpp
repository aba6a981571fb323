#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "cref/graph.hpp"
#include "cref/partition.hpp"

namespace cref {

// Seeded Mersenne Twister (mt19937-64) with platform-independent derived
// draws; std::*_distribution is avoided because its output is not pinned
// across standard library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // uniform in 0..n-1 (n >= 1)
    int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

    // uniform in lo..hi inclusive
    int range(int lo, int hi) { return lo + below(hi - lo + 1); }

    // true with probability p
    bool chance(double p) {
        return (static_cast<double>(next() >> 11) * 0x1.0p-53) < p;
    }

private:
    std::mt19937_64 engine_;
};

Digraph random_digraph(Rng& rng, int n, double edge_probability);
UndirectedGraph random_undirected(Rng& rng, int n, double edge_probability);
EdgeColouredDigraph random_edge_coloured(Rng& rng, int n, double edge_probability,
                                         int max_colours);
TransitionSystem random_transition_system(Rng& rng, int n, double edge_probability,
                                          int max_labels);

// Surjective colouring with at most max_classes classes.
Colouring random_colouring(Rng& rng, int n, int max_classes);
Partition random_partition(Rng& rng, int n, int max_cells);

// h[v] = image of v under a uniform permutation.
std::vector<int> random_permutation(Rng& rng, int n);

// The image graph h(g): edge (u,v) becomes (h[u], h[v]).
Digraph permuted(const Digraph& g, const std::vector<int>& h);
// alpha' with alpha'(h(v)) = alpha(v).
Colouring permuted(const Colouring& alpha, const std::vector<int>& h);

} // namespace cref
