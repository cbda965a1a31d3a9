#pragma once

#include <string>
#include <vector>

#include "gbg/graph.hpp"

namespace testing {

inline gbg::FiniteGraph make(const std::vector<std::pair<std::string, std::string>>& edges) {
  gbg::FiniteGraph g;
  for (const auto& [a, b] : edges) {
    if (!g.find_vertex(a)) g.add_vertex(a);
    if (!g.find_vertex(b)) g.add_vertex(b);
    g.add_edge(a, b);
  }
  return g;
}

inline gbg::EdgeId edge(const gbg::FiniteGraph& g, const std::string& a, const std::string& b) {
  return g.edge_between(a, b);
}

inline gbg::EdgeMask edge_bit(const gbg::FiniteGraph& g, const std::string& a, const std::string& b) {
  return gbg::EdgeMask{1} << g.edge_between(a, b);
}

/// Copy of `b` glued onto `a` by identifying vertex `at_b` of b with `at_a`.
inline gbg::FiniteGraph glue(const gbg::FiniteGraph& a, const std::string& at_a, const gbg::FiniteGraph& b,
                             const std::string& at_b, const std::string& suffix) {
  gbg::FiniteGraph g = a;
  auto rename = [&](gbg::VertexId v) { return b.name(v) == at_b ? at_a : b.name(v) + suffix; };
  for (gbg::VertexId v = 0; v < b.vertex_count(); ++v) {
    if (b.name(v) != at_b) g.add_vertex(rename(v));
  }
  for (const auto& e : b.edges()) g.add_edge(rename(e.u), rename(e.v));
  return g;
}

}  // namespace testing
