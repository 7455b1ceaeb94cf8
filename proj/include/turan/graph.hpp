#pragma once
// Simple undirected graphs on dense vertex ids 0..n-1. Adjacency is kept as
// fixed-width bit rows (64-bit words), which is what every counting and
// search kernel in this project operates on. Graphs are built once and then
// treated as immutable; concurrent readers are fine.

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace turan {

inline constexpr int kMaxVertices = 4096;

// Bit vector over the vertex range 0..n-1 of some host graph.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int n);
    static VertexSet all(int n);
    static VertexSet of(int n, std::initializer_list<int> vs);

    int universe() const { return n_; }
    bool test(int v) const;
    void set(int v);
    void reset(int v);
    int count() const;
    bool empty() const { return count() == 0; }
    bool contains(const VertexSet& other) const;  // other subset of this
    void and_with(const VertexSet& other);
    void or_with(const VertexSet& other);
    void subtract(const VertexSet& other);
    // lowest set bit, -1 when empty
    int first() const;
    // next set bit strictly after v, -1 when none
    int next(int v) const;
    std::vector<int> to_vector() const;

    std::span<const std::uint64_t> words() const { return w_; }
    std::span<std::uint64_t> words() { return w_; }

    bool operator==(const VertexSet&) const = default;

private:
    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int n() const { return n_; }
    int words() const { return words_; }
    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    int degree(int v) const;
    long long edge_count() const;

    // adjacency row of v as bit words
    std::span<const std::uint64_t> row(int v) const;
    VertexSet neighbors(int v) const;

    // edges in lexicographic order (u < v, sorted by u then v)
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> rows_;  // n_ * words_, row-major
};

// standard constructions
Graph complete_graph(int r);
Graph complete_bipartite(int a, int b);
Graph cycle(int m);                         // m >= 3
Graph path(int num_vertices);               // >= 1
Graph join(const Graph& g, const Graph& h); // g's vertices first
Graph disjoint_union(int t, const Graph& f);
Graph induced_subgraph(const Graph& g, const VertexSet& x);  // keeps vertex order

}  // namespace turan
