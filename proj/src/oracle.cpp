#include "turan/oracle.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "pattern_internal.hpp"
#include "turan/bounds.hpp"
#include "turan/clique.hpp"

namespace turan {

namespace {

constexpr int kCanonMax = 11;  // 55 pair bits fit one 64-bit code

int pair_index(int i, int j) { return j * (j - 1) / 2 + i; }  // i < j, colex

// minimal-code search: place vertices position by position, prune on the
// determined prefix, branch once per twin class
struct CanonSearch {
    int n;
    std::array<std::uint16_t, kCanonMax> adj{};
    std::array<std::uint16_t, kCanonMax> twin{};
    std::array<int, kCanonMax> perm{};
    std::uint64_t best = ~0ULL;

    explicit CanonSearch(const Graph& g) : n(g.n()) {
        for (int v = 0; v < n; ++v) {
            std::uint16_t row = 0;
            for (int u = 0; u < n; ++u)
                if (u != v && g.has_edge(u, v)) row |= std::uint16_t(1) << u;
            adj[v] = row;
        }
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) {
                if (u == v) continue;
                std::uint16_t diff = adj[u] ^ adj[v];
                diff &= std::uint16_t(~((1u << u) | (1u << v)));
                if (diff == 0) twin[u] |= std::uint16_t(1) << v;
            }
    }

    void rec(int depth, std::uint64_t code, std::uint16_t used) {
        if (depth == n) {
            best = std::min(best, code);
            return;
        }
        int bits_known = (depth + 1) * depth / 2;
        std::uint64_t mask = bits_known == 0 ? 0 : ~0ULL << (64 - bits_known);

        struct Cand {
            std::uint64_t code;
            int u;
        };
        std::array<Cand, kCanonMax> cands;
        int count = 0;
        for (int u = 0; u < n; ++u) {
            if (used & (1u << u)) continue;
            std::uint64_t c = code;
            for (int i = 0; i < depth; ++i)
                if (adj[u] & (1u << perm[i])) c |= 1ULL << (63 - pair_index(i, depth));
            cands[count++] = {c, u};
        }
        std::sort(cands.begin(), cands.begin() + count,
                  [](const Cand& x, const Cand& y) { return x.code < y.code || (x.code == y.code && x.u < y.u); });

        std::uint16_t tried = 0;
        for (int idx = 0; idx < count; ++idx) {
            auto [c, u] = cands[idx];
            if (twin[u] & tried) continue;  // same subtree up to an automorphism
            tried |= std::uint16_t(1) << u;
            if (mask && (c & mask) > (best & mask)) continue;
            perm[depth] = u;
            rec(depth + 1, c, std::uint16_t(used | (1u << u)));
        }
    }
};

struct Clock {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double limit = 0.0;

    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    bool expired() const { return limit > 0.0 && elapsed() > limit; }
};

struct Incumbent {
    long long value = -1;
    std::uint64_t code = 0;

    void offer(long long v, std::uint64_t c) {
        if (v > value) {
            value = v;
            code = c;
        }
    }
};

// shared augmentation search tracking incumbents for several clique sizes
struct Core {
    int n;
    const Pattern& pat;
    std::vector<int> sizes;
    std::vector<Incumbent> best;
    long long nodes = 0;
    bool complete = true;
    Clock clock;

    Core(int n_, const Pattern& p, std::vector<int> sz, double timeout)
        : n(n_), pat(p), sizes(std::move(sz)), best(sizes.size()) {
        clock.limit = timeout;
    }

    void offer_graph(const Graph& g, std::uint64_t code) {
        for (size_t i = 0; i < sizes.size(); ++i) best[i].offer(count_cliques(g, sizes[i]), code);
    }

    void run() {
        Graph empty(n);
        if (!is_free(empty, pat))
            throw std::invalid_argument("no pattern-free graphs exist on this vertex count");

        // if the complete graph is free nothing can beat it
        Graph full = complete_graph(n);
        if (is_free(full, pat)) {
            nodes = 1;
            std::uint64_t code = canonical_code(full);
            for (size_t i = 0; i < sizes.size(); ++i) best[i] = {binomial(n, sizes[i]), code};
            return;
        }

        std::vector<std::uint64_t> frontier{canonical_code(empty)};
        nodes = 1;
        offer_graph(empty, frontier[0]);

        while (!frontier.empty()) {
            std::sort(frontier.begin(), frontier.end());
            std::unordered_set<std::uint64_t> next;
            if (!expand(frontier, next)) {
                complete = false;
                return;
            }
            frontier.assign(next.begin(), next.end());
            std::sort(frontier.begin(), frontier.end());
            nodes += (long long)frontier.size();
            for (std::uint64_t code : frontier) offer_graph(decode_code(code, n), code);
        }
    }

    // expand one level into `next`; false on timeout. Worker chunks merge
    // into one set, so the outcome never depends on the thread count.
    bool expand(const std::vector<std::uint64_t>& frontier,
                std::unordered_set<std::uint64_t>& next) {
        auto expand_one = [&](std::uint64_t code, std::unordered_set<std::uint64_t>& sink) {
            Graph g = decode_code(code, n);
            for (int u = 0; u < n; ++u) {
                for (int v = u + 1; v < n; ++v) {
                    if (g.has_edge(u, v)) continue;
                    g.add_edge(u, v);
                    if (detail::still_free_after_edge(g, pat, u, v)) sink.insert(canonical_code(g));
                    g.remove_edge(u, v);
                }
            }
        };

        int workers = worker_count();
        if (workers <= 1 || frontier.size() < 64) {
            for (std::uint64_t code : frontier) {
                if (clock.expired()) return false;
                expand_one(code, next);
            }
            return true;
        }

        workers = std::min<int>(workers, int(frontier.size()));
        std::vector<std::unordered_set<std::uint64_t>> locals(workers);
        std::atomic<bool> timed_out{false};
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (size_t i = w; i < frontier.size(); i += size_t(workers)) {
                    if (timed_out.load(std::memory_order_relaxed)) return;
                    if (clock.expired()) {
                        timed_out.store(true, std::memory_order_relaxed);
                        return;
                    }
                    expand_one(frontier[i], locals[w]);
                }
            });
        }
        for (auto& t : pool) t.join();
        if (timed_out.load()) return false;
        for (auto& l : locals) next.merge(l);
        return true;
    }
};

void validate_common(int n, int r, const Pattern& pat) {
    if (n < 0) throw std::invalid_argument("extremal search: n must be >= 0");
    if (r < 0 || r > std::max(n, 0)) throw std::invalid_argument("extremal search: need 0 <= r <= n");
    (void)pat;
}

SearchResult finish(Core& core, int r, size_t idx, SearchMethod method) {
    SearchResult res;
    res.value = core.best[idx].value;
    res.witness = decode_code(core.best[idx].code, core.n);
    res.nodes_explored = core.nodes;
    res.elapsed_seconds = core.clock.elapsed();
    res.method = method;
    res.complete = core.complete;
    // witness soundness: free, and its clique count equals the reported value
    if (!is_free(res.witness, core.pat) || count_cliques(res.witness, r) != res.value)
        throw std::logic_error("extremal search produced an unsound witness");
    return res;
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
    if (g.n() > kCanonMax) throw std::invalid_argument("canonical_code: graph too large");
    if (g.n() <= 1) return 0;
    CanonSearch s(g);
    s.rec(0, 0, 0);
    return s.best;
}

Graph decode_code(std::uint64_t code, int n) {
    Graph g(n);
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (code & (1ULL << (63 - pair_index(u, v)))) g.add_edge(u, v);
    return g;
}

SearchResult extremal_number(int n, int r, const Pattern& pat, const OracleOptions& opts) {
    validate_common(n, r, pat);
    int cap = std::min(opts.n_cap, 10);
    if (n > cap) throw std::invalid_argument("extremal_number: n exceeds the search cap");

    if (r <= 1) {
        // every n-vertex graph has k_0 = 1 and k_1 = n; the empty graph
        // witnesses the value whenever any admissible graph exists at all
        Graph empty(n);
        if (!is_free(empty, pat))
            throw std::invalid_argument("no pattern-free graphs exist on this vertex count");
        SearchResult res;
        res.value = r == 0 ? 1 : n;
        res.witness = empty;
        res.nodes_explored = 1;
        res.method = SearchMethod::CanonicalAugmentation;
        return res;
    }

    Core core(n, pat, {r}, opts.timeout_seconds);
    core.run();
    return finish(core, r, 0, SearchMethod::CanonicalAugmentation);
}

SearchResult extremal_number_naive(int n, int r, const Pattern& pat, const OracleOptions& opts) {
    validate_common(n, r, pat);
    if (n > 7) throw std::invalid_argument("extremal_number_naive: n exceeds the cap of 7");

    Clock clock;
    clock.limit = opts.timeout_seconds;

    Graph empty(n);
    if (!is_free(empty, pat))
        throw std::invalid_argument("no pattern-free graphs exist on this vertex count");

    int pairs = n * (n - 1) / 2;
    long long value = -1;
    Graph witness;
    long long nodes = 0;
    bool complete = true;
    for (std::uint64_t mask = 0; mask < (1ULL << pairs); ++mask) {
        if ((mask & 0xfff) == 0 && clock.expired()) {
            complete = false;
            break;
        }
        Graph g(n);
        int bit = 0;
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u, ++bit)
                if (mask & (1ULL << bit)) g.add_edge(u, v);
        ++nodes;
        if (!is_free(g, pat)) continue;
        long long k = count_cliques(g, r);
        if (k > value) {
            value = k;
            witness = g;
        }
    }

    SearchResult res;
    res.value = value;
    res.witness = witness;
    res.nodes_explored = nodes;
    res.elapsed_seconds = clock.elapsed();
    res.method = SearchMethod::NaiveLabeled;
    res.complete = complete;
    if (complete && (!is_free(res.witness, pat) || count_cliques(res.witness, r) != res.value))
        throw std::logic_error("naive search produced an unsound witness");
    return res;
}

std::vector<long long> ex_profile(int n, int rmax, const Pattern& pat, const OracleOptions& opts) {
    if (rmax < 0) throw std::invalid_argument("ex_profile: rmax must be >= 0");
    validate_common(n, std::min(rmax, n), pat);
    int cap = std::min(opts.n_cap, 10);
    if (n > cap) throw std::invalid_argument("ex_profile: n exceeds the search cap");

    std::vector<int> sizes;
    for (int i = 0; i <= std::min(rmax, n); ++i) sizes.push_back(i);
    Core core(n, pat, sizes, opts.timeout_seconds);
    core.run();
    if (!core.complete) throw std::runtime_error("ex_profile: search timed out");

    std::vector<long long> values(rmax + 1, 0);
    values[0] = 1;
    if (rmax >= 1) values[1] = n;
    for (int i = 2; i <= std::min(rmax, n); ++i) values[i] = core.best[i].value;
    return values;
}

}  // namespace turan
