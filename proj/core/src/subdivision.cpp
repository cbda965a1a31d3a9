#include "gbg/subdivision.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "gbg/cycles.hpp"
#include "gbg/errors.hpp"

namespace gbg {

std::vector<Branch> topological_branches(const FiniteGraph& g) {
  std::vector<Branch> out;
  std::set<EdgeMask> seen;
  EdgeMask covered = 0;

  for (VertexId start = 0; start < g.vertex_count(); ++start) {
    if (g.degree(start) == 2) continue;
    for_each_bit(g.neighbors(start), [&](std::uint32_t first) {
      Branch b;
      b.vertices.push_back(start);
      VertexId prev = start;
      VertexId cur = first;
      b.edges |= EdgeMask{1} << *g.find_edge(prev, cur);
      while (g.degree(cur) == 2) {
        b.vertices.push_back(cur);
        const VertexMask onward = g.neighbors(cur) & ~bit(prev);
        const VertexId next = lowest(onward);
        prev = cur;
        cur = next;
        b.edges |= EdgeMask{1} << *g.find_edge(prev, cur);
      }
      b.vertices.push_back(cur);
      if (seen.insert(b.edges).second) {
        covered |= b.edges;
        out.push_back(std::move(b));
      }
    });
  }

  // Components that are bare cycles have no essential vertex.
  const EdgeMask rest = g.all_edges() & ~covered;
  if (rest != 0) {
    for (VertexMask comp : components_of(g, g.all_vertices(), rest)) {
      if (popcount(comp) < 2) continue;
      Branch b;
      b.closed = true;
      b.edges = g.edges_within(comp) & rest;
      VertexId start = lowest(comp);
      VertexId prev = start;
      VertexId cur = lowest(g.neighbors(start));
      b.vertices.push_back(start);
      while (cur != start) {
        b.vertices.push_back(cur);
        const VertexId next = lowest(g.neighbors(cur) & ~bit(prev));
        prev = cur;
        cur = next;
      }
      out.push_back(std::move(b));
    }
  }
  return out;
}

SubdivisionReport check_subdivision(const FiniteGraph& g, int n) {
  SubdivisionReport report;
  for (const Branch& b : topological_branches(g)) {
    if (b.closed || b.vertices.front() == b.vertices.back()) continue;
    if (b.length() < n - 1) {
      report.violations.push_back({SubdivisionViolation::Kind::short_path,
                                   b.vertices, b.edges, b.length(), n - 1});
    }
  }
  // Every simple cycle is homotopically essential.
  for (const auto& cyc : simple_cycles(g, n)) {
    SubdivisionViolation v;
    v.kind = SubdivisionViolation::Kind::short_cycle;
    v.vertices = cyc;
    v.edges = cycle_edges(g, cyc);
    v.length = static_cast<int>(cyc.size());
    v.required = n + 1;
    report.violations.push_back(std::move(v));
  }
  report.ok = report.violations.empty();
  return report;
}

FiniteGraph subdivide_edges(const FiniteGraph& g, EdgeMask edges, int count) {
  FiniteGraph out;
  for (const auto& name : g.names()) out.add_vertex(name);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (((edges >> e) & 1U) == 0 || count <= 0) {
      out.add_edge(ed.u, ed.v);
      continue;
    }
    VertexId prev = ed.u;
    for (int i = 1; i <= count; ++i) {
      std::string name = g.name(ed.u) + "|" + g.name(ed.v) + "#" + std::to_string(i);
      while (out.find_vertex(name)) name += "'";
      const VertexId fresh = out.add_vertex(std::move(name));
      out.add_edge(prev, fresh);
      prev = fresh;
    }
    out.add_edge(prev, ed.v);
  }
  return out;
}

FiniteGraph sufficient_subdivision(const FiniteGraph& g, int n) {
  if (n < 1) throw ValidationError("particle count must be >= 1");
  FiniteGraph cur = g;
  for (int pass = 0; pass < 16; ++pass) {
    const SubdivisionReport rep = check_subdivision(cur, n);
    if (rep.ok) return cur;
    EdgeMask offending = 0;
    const auto branches = topological_branches(cur);
    for (const auto& v : rep.violations) {
      for (const Branch& b : branches) {
        if ((b.edges & v.edges) != 0) offending |= b.edges;
      }
    }
    cur = subdivide_edges(cur, offending, n);
  }
  throw InvariantViolation("sufficient_subdivision did not converge");
}

std::string describe(const FiniteGraph& g, const SubdivisionViolation& v) {
  std::ostringstream out;
  out << (v.kind == SubdivisionViolation::Kind::short_path ? "path" : "cycle");
  out << " [";
  for (std::size_t i = 0; i < v.vertices.size(); ++i) {
    if (i != 0) out << ",";
    out << g.name(v.vertices[i]);
  }
  out << "] length " << v.length << " < " << v.required;
  return out.str();
}

}  // namespace gbg
