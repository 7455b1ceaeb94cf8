#pragma once
// Lower-bound witness constructions: joins of a clique with a suitable free
// graph, and randomized even-cycle-free graphs via the deletion method.
// Every construction certifies itself against its forbidden pattern before
// returning; a failed certificate is an internal bug, not user error.

#include <cstdint>
#include <string>

#include "turan/graph.hpp"
#include "turan/pattern.hpp"

namespace turan {

struct CertificationError : std::logic_error {
    explicit CertificationError(const std::string& what) : std::logic_error(what) {}
};

struct DeletionTrace {
    int n = 0;
    int k = 0;
    double p = 0.0;
    std::uint64_t seed = 0;
    long long edges_before = 0;
    long long cycles_destroyed = 0;
    long long edges_after = 0;
    std::string rng;  // algorithm identifier

    std::string to_key_value() const;  // flat "key=value" record
};

// K_t joined with the norm graph H(q,a); certified free of t+1 disjoint
// K_{a,(a-1)!+1}. The result has t + q^(a-1)(q-1) vertices (norm-graph orders
// are not trimmable).
Graph lower_bound_kab(int t, std::int64_t q, int a);

// K_t joined with a C_2k-free graph h (checked); certified (t+1)C_2k-free.
Graph lower_bound_c2k(int t, const Graph& h, int k);

// G(n,p) followed by deleting one edge per surviving 2k-cycle until none
// remain; deterministic for fixed (n,k,p,seed). Result certified C_2k-free.
struct RandomC2kFree {
    Graph graph;
    DeletionTrace trace;
};
RandomC2kFree random_c2kfree(int n, int k, double p, std::uint64_t seed);

// the standard first-moment exponent: p = n^(-1 + 1/(2k-1))
double default_c2kfree_probability(int n, int k);

}  // namespace turan
