#include "turan/constructions.hpp"

#include <cmath>
#include <cstdio>

#include "turan/gf.hpp"
#include "turan/rng.hpp"

namespace turan {

namespace {

long long factorial_capped(int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) {
        f *= i;
        if (f > kMaxVertices) return kMaxVertices + 1;  // side size is capped anyway
    }
    return f;
}

// first 2k-cycle in a deterministic scan over edges, as a vertex list
std::optional<std::vector<int>> first_cycle(const Graph& g, int len) {
    Pattern pat = Pattern::even_cycle(len);
    auto w = contains(g, pat);
    if (!w) return std::nullopt;
    return w->embeddings.front();
}

}  // namespace

std::string DeletionTrace::to_key_value() const {
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "n=%d k=%d p=%.17g seed=%llu rng=%s edges_before=%lld "
                  "cycles_destroyed=%lld edges_after=%lld",
                  n, k, p, (unsigned long long)seed, rng.c_str(), edges_before, cycles_destroyed,
                  edges_after);
    return buf;
}

Graph lower_bound_kab(int t, std::int64_t q, int a) {
    if (t < 0) throw std::invalid_argument("lower_bound_kab: t must be >= 0");
    Graph h = norm_graph(q, a);
    if (t + h.n() > kMaxVertices) throw std::invalid_argument("lower_bound_kab: size overflow");
    Graph g = join(complete_graph(t), h);

    long long b = factorial_capped(a - 1) + 1;
    Pattern forbidden = Pattern::complete_bipartite(a, int(b)).times(t + 1);
    if (!is_free(g, forbidden))
        throw CertificationError("lower_bound_kab: certificate failed for " + forbidden.to_string());
    return g;
}

Graph lower_bound_c2k(int t, const Graph& h, int k) {
    if (t < 0) throw std::invalid_argument("lower_bound_c2k: t must be >= 0");
    if (k < 2) throw std::invalid_argument("lower_bound_c2k: k must be >= 2");
    Pattern c2k = Pattern::even_cycle(2 * k);
    if (!is_free(h, c2k))
        throw std::invalid_argument("lower_bound_c2k: host graph is not C_" +
                                    std::to_string(2 * k) + "-free");
    if (t + h.n() > kMaxVertices) throw std::invalid_argument("lower_bound_c2k: size overflow");
    Graph g = join(complete_graph(t), h);
    if (!is_free(g, c2k.times(t + 1)))
        throw CertificationError("lower_bound_c2k: certificate failed");
    return g;
}

double default_c2kfree_probability(int n, int k) {
    return std::pow(double(n), -1.0 + 1.0 / (2.0 * k - 1.0));
}

RandomC2kFree random_c2kfree(int n, int k, double p, std::uint64_t seed) {
    if (k < 2) throw std::invalid_argument("random_c2kfree: k must be >= 2");
    if (n < 2 * k) throw std::invalid_argument("random_c2kfree: n must be at least 2k");
    if (p < 0.0 || p >= 1.0) throw std::invalid_argument("random_c2kfree: p must be in [0,1)");

    // G(n,p): one draw per pair in row-major order, edge iff draw < p
    SplitMix64 rng(seed);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.next_double() < p) g.add_edge(u, v);

    DeletionTrace trace;
    trace.n = n;
    trace.k = k;
    trace.p = p;
    trace.seed = seed;
    trace.rng = kRngAlgorithm;
    trace.edges_before = g.edge_count();

    // delete the lexicographically smallest edge of the first cycle found,
    // rescan, repeat
    while (auto cyc = first_cycle(g, 2 * k)) {
        const std::vector<int>& c = *cyc;
        int bu = -1, bv = -1;
        for (size_t i = 0; i < c.size(); ++i) {
            int u = c[i], v = c[(i + 1) % c.size()];
            if (u > v) std::swap(u, v);
            if (bu < 0 || u < bu || (u == bu && v < bv)) {
                bu = u;
                bv = v;
            }
        }
        g.remove_edge(bu, bv);
        ++trace.cycles_destroyed;
    }
    trace.edges_after = g.edge_count();

    if (!is_free(g, Pattern::even_cycle(2 * k)))
        throw CertificationError("random_c2kfree: certificate failed");
    return {std::move(g), trace};
}

}  // namespace turan
