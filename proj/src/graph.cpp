#include "turan/graph.hpp"

#include <bit>
#include <stdexcept>

namespace turan {

namespace {
int word_count(int n) { return (n + 63) / 64; }
}  // namespace

VertexSet::VertexSet(int n) : n_(n), w_(word_count(n), 0) {
    if (n < 0 || n > kMaxVertices) throw std::invalid_argument("VertexSet: bad universe size");
}

VertexSet VertexSet::all(int n) {
    VertexSet s(n);
    for (int i = 0; i < word_count(n); ++i) s.w_[i] = ~0ULL;
    if (n % 64 != 0 && n > 0) s.w_.back() &= (1ULL << (n % 64)) - 1;
    return s;
}

VertexSet VertexSet::of(int n, std::initializer_list<int> vs) {
    VertexSet s(n);
    for (int v : vs) s.set(v);
    return s;
}

bool VertexSet::test(int v) const {
    if (v < 0 || v >= n_) return false;
    return (w_[v >> 6] >> (v & 63)) & 1ULL;
}

void VertexSet::set(int v) {
    if (v < 0 || v >= n_) throw std::out_of_range("VertexSet::set: vertex out of range");
    w_[v >> 6] |= 1ULL << (v & 63);
}

void VertexSet::reset(int v) {
    if (v < 0 || v >= n_) throw std::out_of_range("VertexSet::reset: vertex out of range");
    w_[v >> 6] &= ~(1ULL << (v & 63));
}

int VertexSet::count() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
}

bool VertexSet::contains(const VertexSet& other) const {
    if (other.n_ != n_) throw std::invalid_argument("VertexSet::contains: universe mismatch");
    for (size_t i = 0; i < w_.size(); ++i)
        if (other.w_[i] & ~w_[i]) return false;
    return true;
}

void VertexSet::and_with(const VertexSet& other) {
    if (other.n_ != n_) throw std::invalid_argument("VertexSet: universe mismatch");
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= other.w_[i];
}

void VertexSet::or_with(const VertexSet& other) {
    if (other.n_ != n_) throw std::invalid_argument("VertexSet: universe mismatch");
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= other.w_[i];
}

void VertexSet::subtract(const VertexSet& other) {
    if (other.n_ != n_) throw std::invalid_argument("VertexSet: universe mismatch");
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~other.w_[i];
}

int VertexSet::first() const {
    for (size_t i = 0; i < w_.size(); ++i)
        if (w_[i]) return int(i) * 64 + std::countr_zero(w_[i]);
    return -1;
}

int VertexSet::next(int v) const {
    int start = v + 1;
    if (start >= n_) return -1;
    size_t i = size_t(start >> 6);
    std::uint64_t w = w_[i] & (~0ULL << (start & 63));
    while (true) {
        if (w) return int(i) * 64 + std::countr_zero(w);
        if (++i >= w_.size()) return -1;
        w = w_[i];
    }
}

std::vector<int> VertexSet::to_vector() const {
    std::vector<int> out;
    for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
    return out;
}

Graph::Graph(int n) : n_(n), words_(word_count(n)), rows_(size_t(n) * word_count(n), 0) {
    if (n < 0 || n > kMaxVertices) throw std::invalid_argument("Graph: vertex count out of range");
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("Graph: vertex out of range");
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (rows_[size_t(u) * words_ + (v >> 6)] >> (v & 63)) & 1ULL;
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("Graph: loops are not allowed");
    rows_[size_t(u) * words_ + (v >> 6)] |= 1ULL << (v & 63);
    rows_[size_t(v) * words_ + (u >> 6)] |= 1ULL << (u & 63);
}

void Graph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    rows_[size_t(u) * words_ + (v >> 6)] &= ~(1ULL << (v & 63));
    rows_[size_t(v) * words_ + (u >> 6)] &= ~(1ULL << (u & 63));
}

int Graph::degree(int v) const {
    check_vertex(v);
    int d = 0;
    for (int i = 0; i < words_; ++i) d += std::popcount(rows_[size_t(v) * words_ + i]);
    return d;
}

long long Graph::edge_count() const {
    long long total = 0;
    for (int v = 0; v < n_; ++v) total += degree(v);
    return total / 2;
}

std::span<const std::uint64_t> Graph::row(int v) const {
    check_vertex(v);
    return {rows_.data() + size_t(v) * words_, size_t(words_)};
}

VertexSet Graph::neighbors(int v) const {
    check_vertex(v);
    VertexSet s(n_);
    auto r = row(v);
    for (int i = 0; i < words_; ++i) s.words()[i] = r[i];
    return s;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u) {
        auto r = row(u);
        for (int i = (u + 1) >> 6; i < words_; ++i) {
            std::uint64_t w = r[i];
            if (i == ((u + 1) >> 6)) w &= ~0ULL << ((u + 1) & 63);
            while (w) {
                int v = i * 64 + std::countr_zero(w);
                out.emplace_back(u, v);
                w &= w - 1;
            }
        }
    }
    return out;
}

Graph complete_graph(int r) {
    Graph g(r);
    for (int u = 0; u < r; ++u)
        for (int v = u + 1; v < r; ++v) g.add_edge(u, v);
    return g;
}

Graph complete_bipartite(int a, int b) {
    if (a < 0 || b < 0) throw std::invalid_argument("complete_bipartite: negative side");
    if (a + b > kMaxVertices) throw std::invalid_argument("complete_bipartite: size overflow");
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) g.add_edge(u, v);
    return g;
}

Graph cycle(int m) {
    if (m < 3) throw std::invalid_argument("cycle: needs at least 3 vertices");
    Graph g(m);
    for (int v = 0; v < m; ++v) g.add_edge(v, (v + 1) % m);
    return g;
}

Graph path(int num_vertices) {
    if (num_vertices < 1) throw std::invalid_argument("path: needs at least 1 vertex");
    Graph g(num_vertices);
    for (int v = 0; v + 1 < num_vertices; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph join(const Graph& g, const Graph& h) {
    long long total = (long long)g.n() + h.n();
    if (total > kMaxVertices) throw std::invalid_argument("join: size overflow");
    Graph out{int(total)};
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    for (auto [u, v] : h.edges()) out.add_edge(g.n() + u, g.n() + v);
    for (int u = 0; u < g.n(); ++u)
        for (int v = 0; v < h.n(); ++v) out.add_edge(u, g.n() + v);
    return out;
}

Graph disjoint_union(int t, const Graph& f) {
    if (t < 0) throw std::invalid_argument("disjoint_union: negative count");
    long long total = (long long)t * f.n();
    if (total > kMaxVertices) throw std::invalid_argument("disjoint_union: size overflow");
    Graph out{int(total)};
    for (int c = 0; c < t; ++c)
        for (auto [u, v] : f.edges()) out.add_edge(c * f.n() + u, c * f.n() + v);
    return out;
}

Graph induced_subgraph(const Graph& g, const VertexSet& x) {
    if (x.universe() != g.n()) throw std::invalid_argument("induced_subgraph: universe mismatch");
    std::vector<int> keep = x.to_vector();
    Graph out{int(keep.size())};
    for (size_t i = 0; i < keep.size(); ++i)
        for (size_t j = i + 1; j < keep.size(); ++j)
            if (g.has_edge(keep[i], keep[j])) out.add_edge(int(i), int(j));
    return out;
}

}  // namespace turan
