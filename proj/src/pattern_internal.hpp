#pragma once
// Internals shared between the pattern searches and the extremal oracle.

#include "turan/pattern.hpp"

namespace turan::detail {

// g minus the edge (u,v) is known pat-free; decide whether g still is.
// Only structures through the new edge are examined where the pattern kind
// allows; otherwise falls back to a full check.
bool still_free_after_edge(const Graph& g, const Pattern& pat, int u, int v);

}  // namespace turan::detail
