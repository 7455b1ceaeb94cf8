#include "turan/clique.hpp"

#include <bit>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include "turan/checked.hpp"

namespace turan {

namespace {

// Adjacency remapped to a vertex order, with each row masked down to the
// vertices that come later in the order. Counting cliques by picking order
// positions ascending visits every clique exactly once.
struct OrderedAdjacency {
    int n = 0;
    int words = 0;
    std::vector<std::uint64_t> later;  // n * words

    const std::uint64_t* row(int pos) const { return later.data() + size_t(pos) * words; }
};

std::vector<int> degeneracy_order(const Graph& g) {
    int n = g.n();
    std::vector<int> deg(n), order;
    std::vector<char> removed(n, 0);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    order.reserve(n);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!removed[v] && (best < 0 || deg[v] < deg[best])) best = v;
        removed[best] = 1;
        order.push_back(best);
        auto r = g.row(best);
        for (int i = 0; i < g.words(); ++i) {
            std::uint64_t w = r[i];
            while (w) {
                int u = i * 64 + std::countr_zero(w);
                w &= w - 1;
                if (!removed[u]) --deg[u];
            }
        }
    }
    return order;
}

OrderedAdjacency build_ordered(const Graph& g, const std::vector<int>& order) {
    int n = g.n();
    OrderedAdjacency oa;
    oa.n = n;
    oa.words = (n + 63) / 64;
    oa.later.assign(size_t(n) * oa.words, 0);
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    for (int v = 0; v < n; ++v) {
        int pv = pos[v];
        auto r = g.row(v);
        for (int i = 0; i < g.words(); ++i) {
            std::uint64_t w = r[i];
            while (w) {
                int u = i * 64 + std::countr_zero(w);
                w &= w - 1;
                int pu = pos[u];
                if (pu > pv) oa.later[size_t(pv) * oa.words + (pu >> 6)] |= 1ULL << (pu & 63);
            }
        }
    }
    return oa;
}

int popcount_words(const std::uint64_t* w, int words) {
    int c = 0;
    for (int i = 0; i < words; ++i) c += std::popcount(w[i]);
    return c;
}

// counts cliques of size `depth` inside the candidate set, picking positions
// in ascending order; cand rows are pre-masked to later positions
long long count_in(const OrderedAdjacency& oa, std::uint64_t* cand, int depth,
                   std::uint64_t* scratch) {
    if (depth == 1) return popcount_words(cand, oa.words);
    long long total = 0;
    for (int i = 0; i < oa.words; ++i) {
        std::uint64_t w = cand[i];
        while (w) {
            int u = i * 64 + std::countr_zero(w);
            w &= w - 1;
            const std::uint64_t* nb = oa.row(u);
            std::uint64_t* sub = scratch;
            int cnt = 0;
            for (int j = 0; j < oa.words; ++j) {
                sub[j] = cand[j] & nb[j];
                cnt += std::popcount(sub[j]);
            }
            if (cnt < depth - 1) continue;
            total = checked_add(total, count_in(oa, sub, depth - 1, scratch + oa.words));
        }
    }
    return total;
}

long long count_from_vertex(const OrderedAdjacency& oa, int pos, int r,
                            std::vector<std::uint64_t>& scratch) {
    if (r == 1) return 1;
    const std::uint64_t* nb = oa.row(pos);
    if (popcount_words(nb, oa.words) < r - 1) return 0;
    std::uint64_t* cand = scratch.data();
    for (int j = 0; j < oa.words; ++j) cand[j] = nb[j];
    return count_in(oa, cand, r - 1, scratch.data() + oa.words);
}

}  // namespace

int worker_count() {
    if (const char* env = std::getenv("TURAN_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : int(hw);
}

long long count_cliques(const Graph& g, int r) {
    if (r < 0) throw std::invalid_argument("count_cliques: negative clique size");
    if (r == 0) return 1;
    if (r == 1) return g.n();
    if (r > g.n()) return 0;

    OrderedAdjacency oa = build_ordered(g, degeneracy_order(g));
    int workers = worker_count();
    int n = oa.n;

    std::vector<long long> partial(n, 0);
    auto run_range = [&](int lo, int hi) {
        std::vector<std::uint64_t> scratch(size_t(r + 1) * oa.words);
        for (int v = lo; v < hi; ++v) partial[v] = count_from_vertex(oa, v, r, scratch);
    };
    if (workers <= 1 || n < 256) {
        run_range(0, n);
    } else {
        std::vector<std::thread> pool;
        int chunk = (n + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            int lo = w * chunk, hi = std::min(n, lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back(run_range, lo, hi);
        }
        for (auto& t : pool) t.join();
    }
    long long total = 0;
    for (int v = 0; v < n; ++v) total = checked_add(total, partial[v]);
    return total;
}

CliqueProfile clique_profile(const Graph& g, int rmax) {
    if (rmax < 0) throw std::invalid_argument("clique_profile: negative rmax");
    CliqueProfile p;
    p.counts.resize(rmax + 1);
    for (int s = 0; s <= rmax; ++s) p.counts[s] = count_cliques(g, s);
    return p;
}

long long clique_degree(const Graph& g, int v, int r) {
    if (r < 1) throw std::invalid_argument("clique_degree: r must be >= 1");
    if (v < 0 || v >= g.n()) throw std::out_of_range("clique_degree: vertex out of range");
    if (r == 1) return 1;
    // r-cliques through v are exactly the (r-1)-cliques of G[N(v)]
    return count_cliques(induced_subgraph(g, g.neighbors(v)), r - 1);
}

long long neighborhood_clique_count(const Graph& g, int v, int s, const VertexSet* excluded) {
    if (s < 0) throw std::invalid_argument("neighborhood_clique_count: negative s");
    if (v < 0 || v >= g.n()) throw std::out_of_range("neighborhood_clique_count: vertex out of range");
    VertexSet nb = g.neighbors(v);
    if (excluded) nb.subtract(*excluded);
    return count_cliques(induced_subgraph(g, nb), s);
}

}  // namespace turan
