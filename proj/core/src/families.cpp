#include "gbg/families.hpp"

#include "gbg/errors.hpp"
#include "gbg/subdivision.hpp"

namespace gbg::families {

namespace {

std::string indexed(const std::string& stem, int i) { return stem + std::to_string(i); }

/// Appends a path of `length` edges hanging from `from`; returns its far end.
VertexId hang(FiniteGraph& g, VertexId from, int length, const std::string& stem) {
  VertexId prev = from;
  for (int j = 1; j <= length; ++j) {
    const VertexId v = g.add_vertex(stem + "_" + std::to_string(j));
    g.add_edge(prev, v);
    prev = v;
  }
  return prev;
}

}  // namespace

FiniteGraph segment(int vertices) {
  if (vertices < 1) throw ValidationError("segment needs a vertex");
  FiniteGraph g;
  for (int i = 1; i <= vertices; ++i) g.add_vertex(indexed("v", i));
  for (int i = 1; i < vertices; ++i) g.add_edge(i - 1, i);
  return g;
}

FiniteGraph cycle(int vertices) {
  if (vertices < 3) throw ValidationError("cycle needs at least 3 vertices");
  FiniteGraph g = segment(vertices);
  g.add_edge(static_cast<VertexId>(vertices - 1), 0);
  return g;
}

FiniteGraph star(const std::vector<int>& lengths) {
  FiniteGraph g;
  const VertexId c = g.add_vertex("c");
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    if (lengths[i] < 1) throw ValidationError("prong length must be >= 1");
    hang(g, c, lengths[i], indexed("p", static_cast<int>(i + 1)));
  }
  return g;
}

FiniteGraph radial(int k, int length) { return star(std::vector<int>(k, length)); }

FiniteGraph gamma_h(int leaf_subdivision) {
  FiniteGraph g;
  for (const char* v : {"a", "x", "y", "b", "a1", "a2", "b1", "b2"}) g.add_vertex(v);
  g.add_edge("a", "x");
  g.add_edge("x", "y");
  g.add_edge("y", "b");
  const EdgeId first_leaf = g.add_edge("a", "a1");
  g.add_edge("a", "a2");
  g.add_edge("b", "b1");
  g.add_edge("b", "b2");
  if (leaf_subdivision == 0) return g;
  return subdivide_edges(g, EdgeMask{0xF} << first_leaf, leaf_subdivision);
}

FiniteGraph gamma_a(bool primed) {
  FiniteGraph g = gamma_h();
  g.add_edge("a1", "b1");
  if (!primed) return g;
  const EdgeMask m = (EdgeMask{1} << g.edge_between("a", "a2")) |
                     (EdgeMask{1} << g.edge_between("b", "b2"));
  return subdivide_edges(g, m, 4);
}

FiniteGraph gamma_theta() {
  FiniteGraph g = gamma_a();
  g.add_edge("a2", "b2");
  return g;
}

FiniteGraph gamma_q(int n) {
  if (n < 2) throw ValidationError("gamma_q needs n >= 2");
  FiniteGraph g;
  const VertexId c = g.add_vertex("c");
  const VertexId p = g.add_vertex("p");
  g.add_edge(c, p);
  const VertexId last = hang(g, p, n - 1, "q");
  g.add_edge(last, c);
  hang(g, c, n - 1, "t");
  return g;
}

FiniteGraph theta(int m, int interior) {
  if (m < 1 || interior < 1) throw ValidationError("theta needs m >= 1 and interior >= 1");
  FiniteGraph g;
  const VertexId p = g.add_vertex("p");
  const VertexId q = g.add_vertex("q");
  for (int r = 1; r <= m + 1; ++r) {
    g.add_edge(hang(g, p, interior, indexed("r", r)), q);
  }
  return g;
}

FiniteGraph sun(int cycle_length, const std::vector<std::pair<int, int>>& segments) {
  FiniteGraph g = cycle(cycle_length);
  int i = 0;
  for (auto [pos, len] : segments) {
    if (pos < 0 || pos >= cycle_length) throw ValidationError("sun attachment out of range");
    hang(g, static_cast<VertexId>(pos), len, indexed("s", ++i));
  }
  return g;
}

FiniteGraph flower(const std::vector<int>& petals, const std::vector<int>& prongs) {
  FiniteGraph g;
  const VertexId c = g.add_vertex("c");
  int i = 0;
  for (int len : petals) {
    if (len < 3) throw ValidationError("petal length must be >= 3");
    g.add_edge(hang(g, c, len - 1, indexed("f", ++i)), c);
  }
  i = 0;
  for (int len : prongs) hang(g, c, len, indexed("p", ++i));
  return g;
}

FiniteGraph double_star(int leaf, int middle) {
  FiniteGraph g;
  const VertexId a = g.add_vertex("a");
  const VertexId end = hang(g, a, middle - 1, "m");
  const VertexId b = g.add_vertex("b");
  g.add_edge(end, b);
  hang(g, a, leaf, "a1");
  hang(g, a, leaf, "a2");
  hang(g, b, leaf, "b1");
  hang(g, b, leaf, "b2");
  return g;
}

FiniteGraph two_triangles(int bridge) {
  FiniteGraph g;
  for (const char* v : {"u1", "u2", "u3"}) g.add_vertex(v);
  g.add_edge("u1", "u2");
  g.add_edge("u2", "u3");
  g.add_edge("u3", "u1");
  const VertexId end = hang(g, g.vertex("u1"), bridge - 1, "m");
  const VertexId w1 = g.add_vertex("w1");
  g.add_edge(end, w1);
  g.add_vertex("w2");
  g.add_vertex("w3");
  g.add_edge("w1", "w2");
  g.add_edge("w2", "w3");
  g.add_edge("w3", "w1");
  return g;
}

FiniteGraph disjoint_union(const FiniteGraph& a, const FiniteGraph& b, const std::string& suffix) {
  FiniteGraph g = a;
  const auto offset = static_cast<VertexId>(a.vertex_count());
  for (const auto& name : b.names()) g.add_vertex(name + suffix);
  for (const Edge& e : b.edges()) g.add_edge(e.u + offset, e.v + offset);
  return g;
}

}  // namespace gbg::families
