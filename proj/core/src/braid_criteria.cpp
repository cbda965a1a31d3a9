#include "gbg/braid_criteria.hpp"

#include "gbg/cycles.hpp"
#include "gbg/errors.hpp"

namespace gbg {

std::string to_string(Z2Witness::Kind k) {
  switch (k) {
    case Z2Witness::Kind::two_disjoint_cycles: return "two_disjoint_cycles";
    case Z2Witness::Kind::cycle_and_vertex: return "cycle_and_vertex";
    case Z2Witness::Kind::two_essential_vertices: return "two_essential_vertices";
  }
  return "";
}

std::string to_string(BraidSize s) {
  return s == BraidSize::trivial ? "trivial" : "infinite_diameter";
}

std::optional<Z2Witness> z2_witness(const FiniteGraph& g, int n) {
  if (n < 1) throw ValidationError("particle count must be >= 1");
  if (!g.connected()) throw ValidationError("z2_witness requires a connected graph");
  if (n < 2) return std::nullopt;

  std::vector<VertexId> essential;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) >= 3) essential.push_back(v);
  }

  const auto cycles = g.cycle_rank() > 0 ? simple_cycles(g) : std::vector<std::vector<VertexId>>{};
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    const VertexMask a = vertex_mask(cycles[i]);
    for (std::size_t j = i + 1; j < cycles.size(); ++j) {
      if ((a & vertex_mask(cycles[j])) == 0) {
        return Z2Witness{Z2Witness::Kind::two_disjoint_cycles, cycles[i], cycles[j]};
      }
    }
  }
  if (n < 3) return std::nullopt;

  // A cycle avoiding w exists iff g - w has a cycle; report the first one.
  for (VertexId w : essential) {
    const VertexMask rest = g.all_vertices() & ~bit(w);
    if (!has_cycle(g, rest)) continue;
    for (const auto& cyc : cycles) {
      if ((vertex_mask(cyc) & bit(w)) == 0) {
        return Z2Witness{Z2Witness::Kind::cycle_and_vertex, cyc, {w}};
      }
    }
  }
  if (n < 4) return std::nullopt;

  if (essential.size() >= 2) {
    return Z2Witness{Z2Witness::Kind::two_essential_vertices, {essential[0]}, {essential[1]}};
  }
  return std::nullopt;
}

BraidSize triviality_criterion(const FiniteGraph& g, int n, const std::vector<int>& partition) {
  const auto comps = g.components();
  if (partition.size() != comps.size()) {
    throw ValidationError("partition has " + std::to_string(partition.size()) +
                          " parts but the graph has " + std::to_string(comps.size()) +
                          " components");
  }
  int total = 0;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (partition[i] < 0 || partition[i] > popcount(comps[i])) {
      throw ValidationError("partition entry out of range for component " + std::to_string(i));
    }
    total += partition[i];
  }
  if (total != n) throw ValidationError("partition does not sum to n");

  for (std::size_t i = 0; i < comps.size(); ++i) {
    const VertexMask c = comps[i];
    if (partition[i] >= 1 && has_cycle(g, c)) return BraidSize::infinite_diameter;
    if (n >= 2 && partition[i] >= 2) {
      bool essential = false;
      for_each_bit(c, [&](std::uint32_t v) { essential = essential || g.degree(v) >= 3; });
      if (essential) return BraidSize::infinite_diameter;
    }
  }
  return BraidSize::trivial;
}

}  // namespace gbg
