#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "turan/graph.hpp"
#include "turan/graph6.hpp"
#include "turan/oracle.hpp"
#include "turan/rng.hpp"

using namespace turan;

namespace {

// Reference graph6 encoder written straight from the published format
// definition, independent of the production encoder: N(n) header, then the
// column-ordered upper triangle padded to 6-bit groups, all bytes + 63.
std::string ref_graph6(const Graph& g) {
    std::string s;
    int n = g.n();
    if (n <= 62) {
        s.push_back(char(63 + n));
    } else {
        s.push_back(char(126));
        s.push_back(char(63 + ((n >> 12) & 63)));
        s.push_back(char(63 + ((n >> 6) & 63)));
        s.push_back(char(63 + (n & 63)));
    }
    std::vector<int> bits;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) bits.push_back(g.has_edge(u, v) ? 1 : 0);
    while (bits.size() % 6 != 0) bits.push_back(0);
    for (size_t i = 0; i < bits.size(); i += 6) {
        int x = 0;
        for (size_t j = 0; j < 6; ++j) x = x * 2 + bits[i + j];
        s.push_back(char(63 + x));
    }
    return s;
}

Graph random_graph(int n, double p, SplitMix64& rng) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.next_double() < p) g.add_edge(u, v);
    return g;
}

int component_count(const Graph& g) {
    std::vector<int> comp(g.n(), -1);
    int c = 0;
    for (int s = 0; s < g.n(); ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{s};
        comp[s] = c;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u = 0; u < g.n(); ++u)
                if (g.has_edge(v, u) && comp[u] < 0) {
                    comp[u] = c;
                    stack.push_back(u);
                }
        }
        ++c;
    }
    return c;
}

}  // namespace

TEST_CASE("complete graphs") {
    CHECK(complete_graph(0).n() == 0);
    CHECK(complete_graph(0).edge_count() == 0);
    CHECK(complete_graph(3).edge_count() == 3);
    CHECK(complete_graph(5).edge_count() == 10);
    CHECK_THROWS_AS(complete_graph(kMaxVertices + 1), std::invalid_argument);
}

TEST_CASE("complete bipartite graphs") {
    Graph k11 = complete_bipartite(1, 1);
    CHECK(k11.n() == 2);
    CHECK(k11.edge_count() == 1);

    Graph k22 = complete_bipartite(2, 2);
    CHECK(k22.n() == 4);
    CHECK(k22.edge_count() == 4);
    for (int v = 0; v < 4; ++v) CHECK(k22.degree(v) == 2);  // K_{2,2} is the 4-cycle
    CHECK(canonical_code(k22) == canonical_code(cycle(4)));

    Graph k23 = complete_bipartite(2, 3);
    CHECK(k23.n() == 5);
    CHECK(k23.edge_count() == 6);
}

TEST_CASE("cycles and paths") {
    Graph c4 = cycle(4);
    CHECK(c4.n() == 4);
    CHECK(c4.edge_count() == 4);
    for (int v = 0; v < 4; ++v) CHECK(c4.degree(v) == 2);
    CHECK_THROWS_AS(cycle(2), std::invalid_argument);

    Graph p1 = path(1);
    CHECK(p1.n() == 1);
    CHECK(p1.edge_count() == 0);

    Graph p4 = path(4);
    CHECK(p4.edge_count() == 3);
    std::vector<int> degs;
    for (int v = 0; v < 4; ++v) degs.push_back(p4.degree(v));
    CHECK(degs == std::vector<int>{1, 2, 2, 1});
    CHECK_THROWS_AS(path(0), std::invalid_argument);
}

TEST_CASE("join") {
    Graph k4 = join(complete_graph(2), complete_graph(2));
    CHECK(k4.n() == 4);
    CHECK(k4.edge_count() == 6);
    CHECK(canonical_code(k4) == canonical_code(complete_graph(4)));

    Graph h = cycle(5);
    Graph same = join(Graph(0), h);
    CHECK(same == h);

    // |E(K_t v H)| = t(t-1)/2 + |E(H)| + t|V(H)|
    Graph g = join(complete_graph(3), cycle(4));
    CHECK(g.edge_count() == 3 + 4 + 12);
}

TEST_CASE("join is symmetric up to isomorphism and obeys the edge formula") {
    SplitMix64 rng(42);
    for (int it = 0; it < 30; ++it) {
        int a = 1 + int(rng.next() % 5), b = 1 + int(rng.next() % 5);
        Graph g = random_graph(a, 0.5, rng), h = random_graph(b, 0.5, rng);
        Graph gh = join(g, h), hg = join(h, g);
        CHECK(gh.edge_count() == g.edge_count() + h.edge_count() + (long long)a * b);
        CHECK(canonical_code(gh) == canonical_code(hg));
    }
}

TEST_CASE("disjoint union") {
    CHECK(disjoint_union(0, cycle(4)).n() == 0);
    CHECK(disjoint_union(1, cycle(4)) == cycle(4));

    Graph g = disjoint_union(3, cycle(4));
    CHECK(g.n() == 12);
    CHECK(g.edge_count() == 12);
    CHECK(component_count(g) == 3);

    SplitMix64 rng(7);
    for (int it = 0; it < 10; ++it) {
        Graph f = random_graph(3 + int(rng.next() % 4), 0.5, rng);
        int t = int(rng.next() % 4);
        Graph u = disjoint_union(t, f);
        CHECK(u.edge_count() == t * f.edge_count());
        CHECK(component_count(u) == t * component_count(f));
    }
}

TEST_CASE("induced subgraphs") {
    Graph k3 = induced_subgraph(complete_graph(4), VertexSet::of(4, {0, 1, 2}));
    CHECK(k3 == complete_graph(3));

    CHECK(induced_subgraph(cycle(5), VertexSet(5)).n() == 0);

    Graph p3 = induced_subgraph(cycle(5), VertexSet::of(5, {0, 1, 2}));
    CHECK(p3 == path(3));

    SplitMix64 rng(9);
    for (int it = 0; it < 10; ++it) {
        Graph g = random_graph(8, 0.4, rng);
        CHECK(induced_subgraph(g, VertexSet::all(8)) == g);
    }

    CHECK_THROWS(induced_subgraph(complete_graph(3), VertexSet::of(5, {4})));
}

TEST_CASE("vertex set operations") {
    VertexSet s = VertexSet::of(70, {0, 63, 64, 69});
    CHECK(s.count() == 4);
    CHECK(s.first() == 0);
    CHECK(s.next(0) == 63);
    CHECK(s.next(63) == 64);
    CHECK(s.next(69) == -1);
    CHECK(s.to_vector() == std::vector<int>{0, 63, 64, 69});
    s.reset(64);
    CHECK(s.count() == 3);
    CHECK(VertexSet::all(70).contains(s));
}

TEST_CASE("graph6 matches the reference encoder") {
    // two pendant edges into vertex 4, the classic D?o shape
    Graph g(5);
    g.add_edge(0, 4);
    g.add_edge(1, 4);
    CHECK(ref_graph6(g) == "D?o");
    CHECK(to_graph6(g) == "D?o");
    CHECK(from_graph6("D?o") == g);

    CHECK(to_graph6(Graph(1)) == "@");
    CHECK(from_graph6("@") == Graph(1));
    CHECK(to_graph6(Graph(0)) == "?");
    CHECK(to_graph6(complete_graph(5)) == ref_graph6(complete_graph(5)));
    CHECK(to_graph6(cycle(5)) == ref_graph6(cycle(5)));

    // header form switches at 63 vertices
    Graph big(63);
    big.add_edge(0, 62);
    CHECK(to_graph6(big) == ref_graph6(big));
    CHECK(from_graph6(to_graph6(big)) == big);

    // round-trip survives at the vertex cap
    Graph cap(kMaxVertices);
    cap.add_edge(0, kMaxVertices - 1);
    cap.add_edge(1000, 3000);
    CHECK(from_graph6(to_graph6(cap)) == cap);
    CHECK(to_graph6(cap) == ref_graph6(cap));
}

TEST_CASE("graph6 round-trips random graphs") {
    SplitMix64 rng(2024);
    for (int it = 0; it < 1000; ++it) {
        int n = int(rng.next() % 61);
        Graph g = random_graph(n, 0.3, rng);
        std::string enc = to_graph6(g);
        CHECK(enc == ref_graph6(g));
        CHECK(from_graph6(enc) == g);
    }
}

TEST_CASE("graph6 rejects malformed input") {
    CHECK_THROWS_AS(from_graph6(""), Graph6Error);
    CHECK_THROWS_AS(from_graph6("\x3e"), Graph6Error);    // header byte < 63
    CHECK_THROWS_AS(from_graph6("A"), Graph6Error);       // missing body
    CHECK_THROWS_AS(from_graph6("A??"), Graph6Error);     // extra body
    CHECK_THROWS_AS(from_graph6("A@"), Graph6Error);      // nonzero padding
    CHECK_THROWS_AS(from_graph6("D?\x1f"), Graph6Error);  // body byte out of range
    CHECK_THROWS_AS(from_graph6("~~????"), Graph6Error);  // 36-bit count unsupported
    CHECK(from_graph6(">>graph6<<D?o").n() == 5);         // optional prefix accepted
}

TEST_CASE("graph6 line streams") {
    std::string text = to_graph6(cycle(4)) + "\n" + to_graph6(complete_graph(3)) + "\n\n";
    auto graphs = read_graph6_lines(text);
    REQUIRE(graphs.size() == 2);
    CHECK(graphs[0] == cycle(4));
    CHECK(graphs[1] == complete_graph(3));
}
