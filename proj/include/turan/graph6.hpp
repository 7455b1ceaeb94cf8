#pragma once
// graph6 encoding (the printable-ASCII format used by nauty/geng).
// Header N(n), then the upper triangle in column order (0,1),(0,2),(1,2),...
// packed into 6-bit groups, each group + 63. Strict parser: bad header,
// nonzero padding bits, wrong length and out-of-range bytes are all errors.

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

struct Graph6Error : std::runtime_error {
    explicit Graph6Error(const std::string& what) : std::runtime_error(what) {}
};

// One graph per call; input must be exactly one encoded graph, no newline.
// The optional ">>graph6<<" prefix is accepted and stripped.
Graph from_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

// newline-delimited stream; blank lines are skipped
std::vector<Graph> read_graph6_lines(std::string_view text);

}  // namespace turan
