#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <functional>
#include <unordered_set>

#include "turan/pattern.hpp"

// Containment and packing searches. Every search runs inside an `allowed`
// vertex set so the packing recursion can carve vertices away without
// rebuilding graphs. Embeddings come back in base-graph vertex order.

namespace turan {

namespace {

using Words = std::vector<std::uint64_t>;

VertexSet neighbors_in(const Graph& g, int v, const VertexSet& allowed) {
    VertexSet s = allowed;
    auto r = g.row(v);
    for (int i = 0; i < g.words(); ++i) s.words()[i] &= r[i];
    return s;
}

// ---------- single-copy searches ----------

bool clique_rec(const Graph& g, const VertexSet& cand, int need, std::vector<int>& out) {
    if (need == 0) return true;
    if (cand.count() < need) return false;
    for (int v = cand.first(); v >= 0; v = cand.next(v)) {
        VertexSet sub = neighbors_in(g, v, cand);
        // keep only vertices after v so each clique is seen once
        for (int w = sub.first(); w >= 0 && w <= v; w = sub.next(w)) sub.reset(w);
        out.push_back(v);
        if (clique_rec(g, sub, need - 1, out)) return true;
        out.pop_back();
    }
    return false;
}

std::optional<std::vector<int>> find_clique(const Graph& g, const VertexSet& allowed, int r) {
    std::vector<int> out;
    if (r == 0) return out;
    if (clique_rec(g, allowed, r, out)) return out;
    return std::nullopt;
}

// A-side chosen ascending; common holds the candidates for the B side.
bool bipartite_rec(const Graph& g, const VertexSet& allowed, int a, int b, int from,
                   VertexSet common, std::vector<int>& aside, std::vector<int>& out) {
    if (int(aside.size()) == a) {
        if (common.count() < b) return false;
        out = aside;
        int v = common.first();
        for (int i = 0; i < b; ++i, v = common.next(v)) out.push_back(v);
        return true;
    }
    for (int v = (from < 0 ? allowed.first() : allowed.next(from)); v >= 0;
         v = allowed.next(v)) {
        VertexSet next_common = common;
        next_common.and_with(g.neighbors(v));
        if (next_common.count() < b) continue;
        aside.push_back(v);
        if (bipartite_rec(g, allowed, a, b, v, std::move(next_common), aside, out)) return true;
        aside.pop_back();
    }
    return false;
}

std::optional<std::vector<int>> find_bipartite(const Graph& g, const VertexSet& allowed, int a,
                                               int b) {
    std::vector<int> aside, out;
    if (bipartite_rec(g, allowed, a, b, -1, allowed, aside, out)) return out;
    return std::nullopt;
}

std::vector<int> bfs_dist(const Graph& g, const VertexSet& allowed, int src) {
    std::vector<int> dist(g.n(), -1);
    std::deque<int> q;
    dist[src] = 0;
    q.push_back(src);
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        VertexSet nb = neighbors_in(g, v, allowed);
        for (int w = nb.first(); w >= 0; w = nb.next(w)) {
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push_back(w);
            }
        }
    }
    return dist;
}

// simple path of `extra` more vertices from `current` whose end closes to `target`
bool cycle_path_rec(const Graph& g, const VertexSet& allowed, const std::vector<int>& dist_to_target,
                    int target, int current, int extra, VertexSet& used, std::vector<int>& out) {
    if (extra == 0) return g.has_edge(current, target);
    VertexSet nb = neighbors_in(g, current, allowed);
    for (int w = nb.first(); w >= 0; w = nb.next(w)) {
        if (used.test(w)) continue;
        if (dist_to_target[w] < 0 || dist_to_target[w] > extra) continue;
        used.set(w);
        out.push_back(w);
        if (cycle_path_rec(g, allowed, dist_to_target, target, w, extra - 1, used, out)) return true;
        out.pop_back();
        used.reset(w);
    }
    return false;
}

std::optional<std::vector<int>> find_cycle(const Graph& g, const VertexSet& allowed, int len) {
    if (allowed.count() < len) return std::nullopt;
    for (int u = allowed.first(); u >= 0; u = allowed.next(u)) {
        VertexSet nb = neighbors_in(g, u, allowed);
        if (nb.empty()) continue;
        std::vector<int> dist = bfs_dist(g, allowed, u);
        for (int v = nb.first(); v >= 0; v = nb.next(v)) {
            if (v <= u) continue;  // each edge tried once
            VertexSet used(g.n());
            used.set(u);
            used.set(v);
            std::vector<int> out{u, v};
            if (cycle_path_rec(g, allowed, dist, u, v, len - 2, used, out)) return out;
        }
    }
    return std::nullopt;
}

bool path_rec(const Graph& g, const VertexSet& allowed, int len, VertexSet& used,
              std::vector<int>& out) {
    if (int(out.size()) == len) return true;
    VertexSet nb = neighbors_in(g, out.back(), allowed);
    for (int w = nb.first(); w >= 0; w = nb.next(w)) {
        if (used.test(w)) continue;
        used.set(w);
        out.push_back(w);
        if (path_rec(g, allowed, len, used, out)) return true;
        out.pop_back();
        used.reset(w);
    }
    return false;
}

std::optional<std::vector<int>> find_path(const Graph& g, const VertexSet& allowed, int len) {
    if (allowed.count() < len) return std::nullopt;
    for (int s = allowed.first(); s >= 0; s = allowed.next(s)) {
        VertexSet used(g.n());
        used.set(s);
        std::vector<int> out{s};
        if (len == 1 || path_rec(g, allowed, len, used, out)) return out;
    }
    return std::nullopt;
}

// backtracking injection for arbitrary shapes; forced maps pattern vertex -> host
struct GenericSearch {
    const Graph& g;
    const VertexSet& allowed;
    const Graph& shape;
    std::vector<int> order;        // pattern vertices in assignment order
    std::vector<int> map;          // pattern vertex -> host vertex or -1
    VertexSet used;
    bool enumerate = false;        // keep going after the first hit
    std::function<void(const std::vector<int>&)> sink;
    bool found = false;

    GenericSearch(const Graph& g_, const VertexSet& allowed_, const Graph& shape_)
        : g(g_), allowed(allowed_), shape(shape_), map(shape_.n(), -1), used(g_.n()) {
        // connected expansion order, highest degree first among ties
        std::vector<char> placed(shape.n(), 0);
        auto degree_of = [&](int p) { return shape.degree(p); };
        while (int(order.size()) < shape.n()) {
            int best = -1, best_attached = -1;
            for (int p = 0; p < shape.n(); ++p) {
                if (placed[p]) continue;
                int attached = 0;
                for (int q : order)
                    if (shape.has_edge(p, q)) ++attached;
                if (best < 0 || attached > best_attached ||
                    (attached == best_attached && degree_of(p) > degree_of(best))) {
                    best = p;
                    best_attached = attached;
                }
            }
            placed[best] = 1;
            order.push_back(best);
        }
    }

    bool feasible(int p, int h) {
        if (used.test(h)) return false;
        VertexSet nb = neighbors_in(g, h, allowed);
        if (nb.count() < shape.degree(p)) return false;
        for (int q = 0; q < shape.n(); ++q)
            if (map[q] >= 0 && shape.has_edge(p, q) && !g.has_edge(h, map[q])) return false;
        return true;
    }

    bool run(size_t depth) {
        if (depth == order.size()) {
            found = true;
            if (sink) sink(map);
            return !enumerate;
        }
        int p = order[depth];
        if (map[p] >= 0) return run(depth + 1);  // pre-forced
        for (int h = allowed.first(); h >= 0; h = allowed.next(h)) {
            if (!feasible(p, h)) continue;
            map[p] = h;
            used.set(h);
            if (run(depth + 1)) return true;
            used.reset(h);
            map[p] = -1;
        }
        return false;
    }
};

std::optional<std::vector<int>> find_generic(const Graph& g, const VertexSet& allowed,
                                             const Graph& shape) {
    if (allowed.count() < shape.n()) return std::nullopt;
    GenericSearch s(g, allowed, shape);
    s.run(0);
    if (s.found) return s.map;
    return std::nullopt;
}

std::optional<std::vector<int>> find_base(const Graph& g, const VertexSet& allowed,
                                          const Pattern& pat) {
    switch (pat.kind) {
        case PatternKind::Clique: return find_clique(g, allowed, pat.size);
        case PatternKind::CompleteBipartite: return find_bipartite(g, allowed, pat.a, pat.b);
        case PatternKind::EvenCycle: return find_cycle(g, allowed, pat.size);
        case PatternKind::Path: return find_path(g, allowed, pat.size);
        case PatternKind::Arbitrary: return find_generic(g, allowed, pat.shape);
    }
    return std::nullopt;
}

// ---------- enumeration of copies through a fixed vertex ----------

Words set_key(const Graph& g, const std::vector<int>& embedding) {
    Words w(size_t(g.words()), 0);
    for (int v : embedding) w[v >> 6] |= 1ULL << (v & 63);
    return w;
}

struct WordsHash {
    size_t operator()(const Words& w) const {
        std::uint64_t h = 1469598103934665603ULL;
        for (auto x : w) {
            h ^= x;
            h *= 1099511628211ULL;
        }
        return size_t(h);
    }
};

using CopySink = std::function<void(const std::vector<int>&)>;

void combos(const std::vector<int>& pool, int k, size_t from, std::vector<int>& cur,
            const std::function<void(const std::vector<int>&)>& emit) {
    if (k == 0) {
        emit(cur);
        return;
    }
    for (size_t i = from; i + size_t(k) <= pool.size(); ++i) {
        cur.push_back(pool[i]);
        combos(pool, k - 1, i + 1, cur, emit);
        cur.pop_back();
    }
}

void enumerate_cliques_through(const Graph& g, const VertexSet& allowed, int r, int v,
                               const CopySink& sink) {
    if (r == 1) {
        sink({v});
        return;
    }
    VertexSet cand = neighbors_in(g, v, allowed);
    std::vector<int> cur{v};
    std::function<void(const VertexSet&, int)> rec = [&](const VertexSet& c, int need) {
        if (need == 0) {
            sink(cur);
            return;
        }
        for (int w = c.first(); w >= 0; w = c.next(w)) {
            VertexSet sub = neighbors_in(g, w, c);
            for (int x = sub.first(); x >= 0 && x <= w; x = sub.next(x)) sub.reset(x);
            if (sub.count() < need - 1) continue;
            cur.push_back(w);
            rec(sub, need - 1);
            cur.pop_back();
        }
    };
    rec(cand, r - 1);
}

void enumerate_bipartite_through(const Graph& g, const VertexSet& allowed, int a, int b, int v,
                                 const CopySink& sink) {
    // v on the A side: pick the other a-1 A vertices anywhere in allowed
    {
        std::vector<int> aside{v};
        VertexSet common = neighbors_in(g, v, allowed);
        std::function<void(int, const VertexSet&)> rec = [&](int from, const VertexSet& com) {
            if (int(aside.size()) == a) {
                if (com.count() < b) return;
                std::vector<int> pool = com.to_vector();
                std::vector<int> bside;
                combos(pool, b, 0, bside, [&](const std::vector<int>& bs) {
                    std::vector<int> emb = aside;
                    emb.insert(emb.end(), bs.begin(), bs.end());
                    sink(emb);
                });
                return;
            }
            for (int w = (from < 0 ? allowed.first() : allowed.next(from)); w >= 0;
                 w = allowed.next(w)) {
                if (w == v) continue;
                VertexSet next = com;
                next.and_with(g.neighbors(w));
                if (next.count() < b) continue;
                aside.push_back(w);
                rec(w, next);
                aside.pop_back();
            }
        };
        rec(-1, common);
    }
    // v on the B side: the whole A side must sit inside N(v)
    {
        VertexSet apool = neighbors_in(g, v, allowed);
        std::vector<int> aside;
        std::function<void(int, VertexSet)> rec = [&](int from, VertexSet com) {
            if (int(aside.size()) == a) {
                if (!com.test(v)) return;
                VertexSet rest = com;
                rest.reset(v);
                if (rest.count() < b - 1) return;
                std::vector<int> pool = rest.to_vector();
                std::vector<int> btail;
                combos(pool, b - 1, 0, btail, [&](const std::vector<int>& bs) {
                    std::vector<int> emb = aside;
                    emb.push_back(v);
                    emb.insert(emb.end(), bs.begin(), bs.end());
                    sink(emb);
                });
                return;
            }
            for (int w = (from < 0 ? apool.first() : apool.next(from)); w >= 0;
                 w = apool.next(w)) {
                VertexSet next = com;
                next.and_with(g.neighbors(w));
                if (!next.test(v) || next.count() < b) continue;
                aside.push_back(w);
                rec(w, next);
                aside.pop_back();
            }
        };
        rec(-1, allowed);
    }
}

void enumerate_cycles_through(const Graph& g, const VertexSet& allowed, int len, int v,
                              const CopySink& sink) {
    std::vector<int> dist = bfs_dist(g, allowed, v);
    VertexSet used(g.n());
    used.set(v);
    std::vector<int> out{v};
    std::function<void(int)> rec = [&](int current) {
        int placed = int(out.size());
        if (placed == len) {
            if (g.has_edge(current, v) && out[1] < out.back()) sink(out);  // one direction only
            return;
        }
        VertexSet nb = neighbors_in(g, current, allowed);
        for (int w = nb.first(); w >= 0; w = nb.next(w)) {
            if (used.test(w)) continue;
            if (dist[w] < 0 || dist[w] > len - placed) continue;
            used.set(w);
            out.push_back(w);
            rec(w);
            out.pop_back();
            used.reset(w);
        }
    };
    rec(v);
}

void enumerate_generic_through(const Graph& g, const VertexSet& allowed, const Graph& shape,
                               int v, const CopySink& sink) {
    for (int p = 0; p < shape.n(); ++p) {
        GenericSearch s(g, allowed, shape);
        s.enumerate = true;
        s.sink = sink;
        if (!s.feasible(p, v)) continue;
        s.map[p] = v;
        s.used.set(v);
        s.run(0);
    }
}

void copies_through(const Graph& g, const VertexSet& allowed, const Pattern& base, int v,
                    const CopySink& sink) {
    switch (base.kind) {
        case PatternKind::Clique: enumerate_cliques_through(g, allowed, base.size, v, sink); break;
        case PatternKind::CompleteBipartite:
            enumerate_bipartite_through(g, allowed, base.a, base.b, v, sink);
            break;
        case PatternKind::EvenCycle: enumerate_cycles_through(g, allowed, base.size, v, sink); break;
        case PatternKind::Path:
            enumerate_generic_through(g, allowed, base.base_graph(), v, sink);
            break;
        case PatternKind::Arbitrary: enumerate_generic_through(g, allowed, base.shape, v, sink); break;
    }
}

// ---------- enumeration of copies using a fixed edge ----------

// sink returns false to abort; enumerators return false when aborted
using EdgeSink = std::function<bool(const std::vector<int>&)>;

bool cliques_through_edge(const Graph& g, const VertexSet& allowed, int r, int u, int v,
                          const EdgeSink& sink) {
    std::vector<int> cur{u, v};
    if (r == 2) return sink(cur);
    VertexSet common = neighbors_in(g, u, allowed);
    common.and_with(g.neighbors(v));
    std::function<bool(const VertexSet&, int)> rec = [&](const VertexSet& c, int need) {
        if (need == 0) return sink(cur);
        for (int w = c.first(); w >= 0; w = c.next(w)) {
            VertexSet sub = neighbors_in(g, w, c);
            for (int x = sub.first(); x >= 0 && x <= w; x = sub.next(x)) sub.reset(x);
            if (sub.count() < need - 1) continue;
            cur.push_back(w);
            bool keep = rec(sub, need - 1);
            cur.pop_back();
            if (!keep) return false;
        }
        return true;
    };
    return rec(common, r - 2);
}

bool bipartite_through_edge(const Graph& g, const VertexSet& allowed, int a, int b, int u, int v,
                            const EdgeSink& sink) {
    // one K_{a,b} copy per (A,B) with u in A and v in B; when a == b the
    // unordered sides make this exhaustive already
    auto one_role = [&](int au, int bv) {
        std::vector<int> aside{au};
        VertexSet apool = neighbors_in(g, bv, allowed);
        apool.reset(au);
        VertexSet common = neighbors_in(g, au, allowed);
        std::function<bool(int, const VertexSet&)> rec = [&](int from, const VertexSet& com) {
            if (int(aside.size()) == a) {
                VertexSet rest = com;
                rest.reset(bv);
                if (rest.count() < b - 1) return true;
                std::vector<int> pool = rest.to_vector();
                std::vector<int> btail;
                bool keep = true;
                std::function<void(size_t, int)> pick = [&](size_t from2, int need) {
                    if (!keep) return;
                    if (need == 0) {
                        std::vector<int> emb = aside;
                        emb.push_back(bv);
                        emb.insert(emb.end(), btail.begin(), btail.end());
                        keep = sink(emb);
                        return;
                    }
                    for (size_t i = from2; i + size_t(need) <= pool.size() && keep; ++i) {
                        btail.push_back(pool[i]);
                        pick(i + 1, need - 1);
                        btail.pop_back();
                    }
                };
                pick(0, b - 1);
                return keep;
            }
            for (int w = (from < 0 ? apool.first() : apool.next(from)); w >= 0;
                 w = apool.next(w)) {
                VertexSet next = com;
                next.and_with(g.neighbors(w));
                if (next.count() < b) continue;
                aside.push_back(w);
                bool keep = rec(w, next);
                aside.pop_back();
                if (!keep) return false;
            }
            return true;
        };
        return rec(-1, common);
    };
    if (!one_role(u, v)) return false;
    if (a != b && !one_role(v, u)) return false;
    return true;
}

bool cycles_through_edge(const Graph& g, const VertexSet& allowed, int len, int u, int v,
                         const EdgeSink& sink) {
    std::vector<int> dist = bfs_dist(g, allowed, u);
    VertexSet used(g.n());
    used.set(u);
    used.set(v);
    std::vector<int> out{u, v};
    std::function<bool(int, int)> rec = [&](int current, int extra) {
        if (extra == 0) {
            if (g.has_edge(current, u)) return sink(out);
            return true;
        }
        VertexSet nb = neighbors_in(g, current, allowed);
        for (int w = nb.first(); w >= 0; w = nb.next(w)) {
            if (used.test(w)) continue;
            if (dist[w] < 0 || dist[w] > extra) continue;
            used.set(w);
            out.push_back(w);
            bool keep = rec(w, extra - 1);
            out.pop_back();
            used.reset(w);
            if (!keep) return false;
        }
        return true;
    };
    return rec(v, len - 2);
}

// ---------- exact packing ----------

struct MemoKey {
    Words set;
    int need;
    bool operator==(const MemoKey&) const = default;
};

struct MemoHash {
    size_t operator()(const MemoKey& k) const {
        return WordsHash{}(k.set) * 31 + size_t(k.need);
    }
};

constexpr size_t kMemoCap = 1 << 21;

struct Packer {
    const Graph& g;
    Pattern base;  // copies == 1
    int base_n;
    std::unordered_set<MemoKey, MemoHash> failed;
    std::vector<std::vector<int>> chosen;

    Packer(const Graph& g_, const Pattern& pat) : g(g_), base(pat), base_n(pat.base_vertex_count()) {
        base.copies = 1;
    }

    // exhaustive: can `need` disjoint base copies fit inside `allowed`?
    bool can_pack(const VertexSet& allowed, int need) {
        if (need <= 0) return true;
        if (allowed.count() < need * base_n) return false;
        auto first = find_base(g, allowed, base);
        if (!first) return false;
        chosen.push_back(*first);
        if (need == 1) return true;
        chosen.pop_back();

        MemoKey key{Words(allowed.words().begin(), allowed.words().end()), need};
        if (failed.contains(key)) return false;

        // any packing either keeps `first` or uses a copy through one of its
        // vertices, so branching over copies meeting V(first) is complete
        std::vector<std::vector<int>> branches{*first};
        std::unordered_set<Words, WordsHash> seen{set_key(g, *first)};
        for (int v : *first) {
            copies_through(g, allowed, base, v, [&](const std::vector<int>& emb) {
                Words k = set_key(g, emb);
                if (seen.insert(std::move(k)).second) branches.push_back(emb);
            });
        }
        for (const auto& emb : branches) {
            VertexSet next = allowed;
            for (int v : emb) next.reset(v);
            chosen.push_back(emb);
            if (can_pack(next, need - 1)) return true;
            chosen.pop_back();
        }
        if (failed.size() < kMemoCap) failed.insert(std::move(key));
        return false;
    }
};

void verify_witness(const Graph& g, const Pattern& base, const std::vector<std::vector<int>>& embs) {
    Graph shape = base.base_graph();
    VertexSet seen(g.n());
    for (const auto& emb : embs) {
        if (!verify_embedding(g, shape, emb))
            throw std::logic_error("packing search produced an invalid embedding");
        for (int v : emb) {
            if (seen.test(v)) throw std::logic_error("packing search produced overlapping copies");
            seen.set(v);
        }
    }
}

}  // namespace

std::optional<Witness> contains(const Graph& g, const Pattern& pat) {
    VertexSet all = VertexSet::all(g.n());
    if (pat.copies == 1) {
        auto emb = find_base(g, all, pat);
        if (!emb) return std::nullopt;
        Witness w;
        w.embeddings.push_back(*emb);
        verify_witness(g, pat, w.embeddings);
        return w;
    }
    Packer packer(g, pat);
    if (!packer.can_pack(all, pat.copies)) return std::nullopt;
    Witness w;
    w.embeddings = packer.chosen;
    verify_witness(g, packer.base, w.embeddings);
    return w;
}

PackingResult max_disjoint_copies(const Graph& g, const Pattern& pat, int cap) {
    if (cap < 1) throw std::invalid_argument("max_disjoint_copies: cap must be >= 1");
    Packer packer(g, pat);
    VertexSet all = VertexSet::all(g.n());
    int target = cap * pat.copies;

    int best = 0;
    std::vector<std::vector<int>> best_embs;
    while (best < target) {
        packer.chosen.clear();
        if (!packer.can_pack(all, best + 1)) break;
        ++best;
        best_embs = packer.chosen;
    }

    PackingResult res;
    res.count = best / pat.copies;
    best_embs.resize(size_t(res.count) * pat.copies);
    res.witness.embeddings = std::move(best_embs);
    verify_witness(g, packer.base, res.witness.embeddings);
    return res;
}

bool is_free(const Graph& g, const Pattern& pat) {
    Packer packer(g, pat);
    return !packer.can_pack(VertexSet::all(g.n()), pat.copies);
}

}  // namespace turan

#include "pattern_internal.hpp"

namespace turan::detail {

bool still_free_after_edge(const Graph& g, const Pattern& pat, int u, int v) {
    if (pat.kind == PatternKind::Path || pat.kind == PatternKind::Arbitrary)
        return is_free(g, pat);  // no edge-local shortcut for these

    VertexSet all = VertexSet::all(g.n());
    auto through_edge = [&](const std::function<bool(const std::vector<int>&)>& sink) {
        switch (pat.kind) {
            case PatternKind::Clique:
                return cliques_through_edge(g, all, pat.size, u, v, sink);
            case PatternKind::CompleteBipartite:
                return bipartite_through_edge(g, all, pat.a, pat.b, u, v, sink);
            case PatternKind::EvenCycle:
                return cycles_through_edge(g, all, pat.size, u, v, sink);
            default: return true;
        }
    };

    if (pat.copies == 1) {
        // free iff no copy runs through the new edge
        return through_edge([](const std::vector<int>&) { return false; });
    }

    // a new packing must use a copy through the new edge
    std::vector<std::vector<int>> copies;
    std::unordered_set<Words, WordsHash> seen;
    through_edge([&](const std::vector<int>& emb) {
        if (seen.insert(set_key(g, emb)).second) copies.push_back(emb);
        return true;
    });
    if (copies.empty()) return true;

    Packer packer(g, pat);
    for (const auto& emb : copies) {
        VertexSet rest = all;
        for (int w : emb) rest.reset(w);
        packer.chosen.clear();
        if (packer.can_pack(rest, pat.copies - 1)) return false;
    }
    return true;
}

}  // namespace turan::detail
