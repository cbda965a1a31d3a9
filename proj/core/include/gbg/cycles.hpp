#pragma once

#include <cstddef>
#include <vector>

#include "gbg/graph.hpp"

namespace gbg {

/// Every simple cycle of g (length >= 3) exactly once, as a vertex list
/// starting at its least vertex and continuing towards the smaller of that
/// vertex's two cycle neighbours. `max_length` <= 0 means unbounded.
/// Throws Unsupported if more than `limit` cycles exist.
std::vector<std::vector<VertexId>> simple_cycles(const FiniteGraph& g,
                                                 int max_length = 0,
                                                 std::size_t limit = 500000);

EdgeMask cycle_edges(const FiniteGraph& g, const std::vector<VertexId>& cycle);

inline VertexMask vertex_mask(const std::vector<VertexId>& vs) {
  VertexMask m = 0;
  for (VertexId v : vs) m |= bit(v);
  return m;
}

/// True if the induced subgraph on `within` contains a cycle.
bool has_cycle(const FiniteGraph& g, VertexMask within);

}  // namespace gbg
