#include "gbg/cycles.hpp"

#include "gbg/errors.hpp"

namespace gbg {

namespace {

struct CycleSearch {
  const FiniteGraph& g;
  int max_length;
  std::size_t limit;
  std::vector<std::vector<VertexId>> found;
  std::vector<VertexId> path;
  VertexId start = 0;

  void extend(VertexId cur, VertexMask used) {
    const VertexMask nbrs = g.neighbors(cur);
    if (path.size() >= 3 && (nbrs & bit(start)) != 0 && path[1] < path.back()) {
      found.push_back(path);
      if (found.size() > limit) {
        throw Unsupported("more than " + std::to_string(limit) + " simple cycles");
      }
    }
    if (max_length > 0 && static_cast<int>(path.size()) >= max_length) return;
    // Only vertices greater than the start, so each cycle is rooted at its minimum.
    const VertexMask above = ~((bit(start) << 1) - 1);
    for_each_bit(nbrs & ~used & above, [&](std::uint32_t next) {
      path.push_back(next);
      extend(next, used | bit(next));
      path.pop_back();
    });
  }
};

}  // namespace

std::vector<std::vector<VertexId>> simple_cycles(const FiniteGraph& g,
                                                 int max_length,
                                                 std::size_t limit) {
  CycleSearch search{g, max_length, limit, {}, {}, 0};
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    search.start = s;
    search.path = {s};
    search.extend(s, bit(s));
  }
  return std::move(search.found);
}

EdgeMask cycle_edges(const FiniteGraph& g, const std::vector<VertexId>& cycle) {
  EdgeMask m = 0;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const VertexId a = cycle[i];
    const VertexId b = cycle[(i + 1) % cycle.size()];
    auto e = g.find_edge(a, b);
    if (!e) throw InvariantViolation("cycle uses a non-edge");
    m |= EdgeMask{1} << *e;
  }
  return m;
}

bool has_cycle(const FiniteGraph& g, VertexMask within) {
  const EdgeMask inside = g.edges_within(within);
  const auto comps = components_of(g, within, inside);
  return popcount(inside) - popcount(within) + static_cast<int>(comps.size()) > 0;
}

}  // namespace gbg
