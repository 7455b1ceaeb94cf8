#pragma once
// Forbidden-structure patterns and containment/packing decisions.
// A pattern is t >= 1 vertex-disjoint copies of a base shape; the base is a
// complete bipartite graph, an even cycle, a path, a clique, or an arbitrary
// small graph. Containment is ordinary (not induced) subgraph containment.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

enum class PatternKind { CompleteBipartite, EvenCycle, Path, Clique, Arbitrary };

struct Pattern {
    int copies = 1;  // t disjoint copies; 1 = the base shape itself
    PatternKind kind = PatternKind::Clique;
    int a = 0, b = 0;  // CompleteBipartite, normalized a <= b
    int size = 0;      // EvenCycle: cycle length; Path: vertices; Clique: r
    Graph shape;       // Arbitrary

    static Pattern complete_bipartite(int a, int b);
    static Pattern even_cycle(int length);
    static Pattern path(int vertices);
    static Pattern clique(int r);
    static Pattern arbitrary(Graph g);
    Pattern times(int t) const;  // t disjoint copies of this base

    int base_vertex_count() const;
    // one copy of the base as a concrete graph; fixes the embedding order
    // (bipartite: side A then side B; cycle and path: traversal order)
    Graph base_graph() const;
    std::string to_string() const;
};

struct PatternParseError : std::runtime_error {
    size_t offset;  // byte offset into the input
    PatternParseError(const std::string& what, size_t off)
        : std::runtime_error(what + " (at byte " + std::to_string(off) + ")"), offset(off) {}
};

// pattern := [INT "*"] base ; base := "K" INT | "K(" INT "," INT ")" |
//            "C" INT | "P" INT ; whitespace insensitive
Pattern parse_pattern(std::string_view text);

// embeddings[i][j] = host vertex playing base-graph vertex j in copy i;
// pairwise vertex-disjoint when produced by packing search
struct Witness {
    std::vector<std::vector<int>> embeddings;
};

struct PackingResult {
    int count = 0;
    Witness witness;
};

// single witness (pat.copies embeddings) when g contains the pattern
std::optional<Witness> contains(const Graph& g, const Pattern& pat);

// min(cap, maximum number of pairwise disjoint copies of the base shape
// packable pat.copies at a time); witness holds count*pat.copies base
// embeddings. Exact; cap must be >= 1.
PackingResult max_disjoint_copies(const Graph& g, const Pattern& pat, int cap);

bool is_free(const Graph& g, const Pattern& pat);

// every base-graph edge must be present between the mapped host vertices
bool verify_embedding(const Graph& g, const Graph& shape, const std::vector<int>& embedding);

}  // namespace turan
