#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace gbg {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

/// Set of vertices of a graph, one bit per vertex index.
using VertexMask = std::uint64_t;
/// Set of edges of a graph, one bit per edge index.
using EdgeMask = std::uint64_t;

inline constexpr std::size_t kMaxVertices = 64;
inline constexpr std::size_t kMaxEdges = 64;

inline constexpr VertexMask bit(std::uint32_t i) { return VertexMask{1} << i; }
inline int popcount(std::uint64_t m) { return std::popcount(m); }
inline std::uint32_t lowest(std::uint64_t m) {
  return static_cast<std::uint32_t>(std::countr_zero(m));
}

/// Calls f(index) for each set bit of m in increasing order.
template <typename F>
void for_each_bit(std::uint64_t m, F&& f) {
  while (m != 0) {
    f(lowest(m));
    m &= m - 1;
  }
}

struct Edge {
  VertexId u = 0;  // endpoints in the order they were declared
  VertexId v = 0;

  VertexId lo() const { return u < v ? u : v; }
  VertexId hi() const { return u < v ? v : u; }
  VertexMask mask() const { return bit(u) | bit(v); }
};

/// Finite simple undirected graph with stable, insertion-ordered vertex and
/// edge identifiers. Vertices carry string names; everything internal works
/// on indices and bitmasks, which caps graphs at 64 vertices and 64 edges.
class FiniteGraph {
 public:
  FiniteGraph() = default;

  VertexId add_vertex(std::string name);
  EdgeId add_edge(VertexId a, VertexId b);
  EdgeId add_edge(std::string_view a, std::string_view b);

  std::size_t vertex_count() const { return names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::string& name(VertexId v) const { return names_.at(v); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<VertexId> find_vertex(std::string_view name) const;
  VertexId vertex(std::string_view name) const;  // throws ValidationError

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  std::optional<EdgeId> find_edge(VertexId a, VertexId b) const;
  EdgeId edge_between(std::string_view a, std::string_view b) const;  // throws
  std::string edge_name(EdgeId e) const;

  VertexMask neighbors(VertexId v) const { return adjacency_[v]; }
  int degree(VertexId v) const { return popcount(adjacency_[v]); }
  VertexMask all_vertices() const;
  EdgeMask all_edges() const;
  /// Edges with at least one endpoint in `m`.
  EdgeMask edges_touching(VertexMask m) const;
  /// Edges with both endpoints in `m`.
  EdgeMask edges_within(VertexMask m) const;

  /// Vertex sets of connected components, ordered by least vertex index.
  std::vector<VertexMask> components() const;
  bool connected() const;
  /// |E| - |V| + #components.
  int cycle_rank() const;

  /// Induced subgraph on `keep`; vertex and edge order are preserved.
  FiniteGraph induced(VertexMask keep) const;
  /// Same vertex set, only the edges in `keep` (order preserved).
  FiniteGraph with_edges(EdgeMask keep) const;

  friend bool operator==(const FiniteGraph& a, const FiniteGraph& b) {
    return a.names_ == b.names_ && a.edge_keys() == b.edge_keys();
  }

 private:
  std::vector<std::pair<VertexId, VertexId>> edge_keys() const;

  std::vector<std::string> names_;
  std::unordered_map<std::string, VertexId> index_;
  std::vector<Edge> edges_;
  std::vector<VertexMask> adjacency_;
};

/// Connected components restricted to the vertex set `within` using only
/// edges in `usable`.
std::vector<VertexMask> components_of(const FiniteGraph& g, VertexMask within,
                                      EdgeMask usable);

/// The graph with the interior of `e` removed: same vertices, one edge fewer.
FiniteGraph remove_open_edge(const FiniteGraph& g, EdgeId e);
/// Induced subgraph on V(g) minus both endpoints of `e`.
FiniteGraph remove_closed_edge(const FiniteGraph& g, EdgeId e);
/// Removes the interiors of several edges at once.
FiniteGraph remove_open_edges(const FiniteGraph& g, EdgeMask edges);

/// Parses {"vertices": [...], "edges": [[a,b],...]}. Extra top-level string
/// fields ("name", "note") are accepted and ignored.
FiniteGraph parse_graph(std::string_view json_text);
FiniteGraph load_graph(const std::string& path);
std::string graph_to_json(const FiniteGraph& g);
/// DOT with vertices of valence >= 3 drawn as filled boxes.
std::string graph_to_dot(const FiniteGraph& g);

}  // namespace gbg
