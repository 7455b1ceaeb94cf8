#pragma once
// Exact small-n extremal oracle: the maximum number of r-cliques over all
// pattern-free graphs on n vertices, with an extremal witness. Two
// independent methods: level-by-level edge augmentation deduplicated by
// canonical code (default, n <= 10), and plain enumeration of all labeled
// graphs (n <= 7, for cross-validation).

#include <vector>

#include "turan/pattern.hpp"

namespace turan {

enum class SearchMethod { CanonicalAugmentation, NaiveLabeled };

struct SearchResult {
    long long value = 0;
    Graph witness;
    long long nodes_explored = 0;
    double elapsed_seconds = 0.0;
    SearchMethod method = SearchMethod::CanonicalAugmentation;
    bool complete = true;  // false after a timeout: value is a lower bound only
};

struct OracleOptions {
    double timeout_seconds = 0.0;  // 0 = no timeout
    int n_cap = 10;                // may be lowered, never raised past 10
};

SearchResult extremal_number(int n, int r, const Pattern& pat, const OracleOptions& opts = {});
SearchResult extremal_number_naive(int n, int r, const Pattern& pat,
                                   const OracleOptions& opts = {});

// values[i] for i = 0..rmax, with values[0] = 1 and values[1] = n by
// convention; computed in one augmentation pass
std::vector<long long> ex_profile(int n, int rmax, const Pattern& pat,
                                  const OracleOptions& opts = {});

// canonical form helpers (n <= 11): minimum adjacency bit string over all
// vertex orders, packed colex pair (i,j) -> bit 63 - (j(j-1)/2 + i)
std::uint64_t canonical_code(const Graph& g);
Graph decode_code(std::uint64_t code, int n);

}  // namespace turan
