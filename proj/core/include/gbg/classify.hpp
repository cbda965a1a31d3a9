#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gbg/graph.hpp"

namespace gbg {

enum class GraphFamily {
  segment,
  cycle,
  radial_tree,
  generalised_theta,
  flower,
  sun,
  pulsar,
  tree_other,
  other,
};

std::string to_string(GraphFamily f);

/// Family tag plus the decomposition that justifies it. Paths are stored as
/// vertex lists of the classified graph.
///
///  - segment:            `paths[0]` is the path end to end
///  - cycle:              `cycles[0]` in cyclic order
///  - radial_tree:        `center`, `segments` are the prongs (without center)
///  - flower:             `center`, `cycles` are petal interiors (endpoints
///                        adjacent to the center), `segments` are prongs
///  - sun:                `cycles[0]` the cycle, `segments[i]` glued to
///                        `attach[i]` by its first vertex
///  - generalised_theta,
///    pulsar:             `poles` = {p, q}, `paths` are the p-q routes by
///                        interior (an empty route is the edge pq), `segments`
///                        glued to `attach[i]`
///  - tree_other, other:  no decomposition; `edges` holds the edge list
struct GraphClass {
  GraphFamily family = GraphFamily::other;
  int parameter = 0;  // k for radial_tree(k), m for generalised_theta(m)
  std::optional<VertexId> center;
  std::vector<VertexId> poles;
  std::vector<std::vector<VertexId>> cycles;
  std::vector<std::vector<VertexId>> paths;
  std::vector<std::vector<VertexId>> segments;
  std::vector<VertexId> attach;
  std::vector<std::pair<VertexId, VertexId>> edges;
  /// Also a flower (every radial tree is a flower with only prongs).
  bool flower_compatible = false;
};

/// First matching family in the order segment, cycle, radial_tree,
/// generalised_theta, flower, sun, pulsar, tree_other, other.
/// Throws ValidationError on a disconnected graph.
GraphClass classify(const FiniteGraph& g);

/// Glues the witness parts back together. Vertex names are taken from
/// `source`, so a faithful witness rebuilds a graph isomorphic to it.
FiniteGraph rebuild(const GraphClass& cls, const FiniteGraph& source);

/// True if g is a flower with the given center.
bool is_flower_at(const FiniteGraph& g, VertexId center);
bool is_segment(const FiniteGraph& g);
bool is_tree(const FiniteGraph& g);

/// Canonical form under graph isomorphism (refinement + backtracking).
/// Two graphs are isomorphic iff their canonical forms are equal.
std::vector<std::uint64_t> canonical_form(const FiniteGraph& g);
bool isomorphic(const FiniteGraph& a, const FiniteGraph& b);

}  // namespace gbg
