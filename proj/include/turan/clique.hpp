#pragma once
// Exact clique counting over bit rows: k_r(G), full profiles, and per-vertex
// clique degrees. Counts are exact 64-bit integers; anything past 2^63-1
// raises overflow_error instead of wrapping.

#include <vector>

#include "turan/graph.hpp"

namespace turan {

inline constexpr int kDefaultProfileMax = 8;

// counts[s] = number of s-vertex cliques, s = 0..rmax
struct CliqueProfile {
    std::vector<long long> counts;

    int rmax() const { return int(counts.size()) - 1; }
};

// exact number of r-cliques; k_0 = 1, k_1 = n, k_2 = |E|
long long count_cliques(const Graph& g, int r);

CliqueProfile clique_profile(const Graph& g, int rmax = kDefaultProfileMax);

// number of r-cliques containing v (degree of v in the r-clique hypergraph)
long long clique_degree(const Graph& g, int v, int r);

// k_s of the subgraph induced on N(v) minus an optional excluded set
long long neighborhood_clique_count(const Graph& g, int v, int s,
                                    const VertexSet* excluded = nullptr);

// worker count for parallel kernels: TURAN_THREADS, default = hardware
int worker_count();

}  // namespace turan
