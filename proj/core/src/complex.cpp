#include "gbg/complex.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

#include "gbg/errors.hpp"

namespace gbg {

namespace {

bool set_less(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t x = a ^ b;
  return x != 0 && (a & (x & (~x + 1))) != 0;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

/// Calls f(subset) for every subset of `pool` with exactly r elements.
template <typename F>
void for_each_subset(VertexMask pool, int r, VertexMask acc, F& f) {
  if (r == 0) {
    f(acc);
    return;
  }
  if (popcount(pool) < r) return;
  const VertexMask low = pool & (~pool + 1);
  for_each_subset(pool & ~low, r - 1, acc | low, f);
  for_each_subset(pool & ~low, r, acc, f);
}

/// Calls f(matching, used vertices) for every set of k pairwise disjoint
/// edges, drawing edges of index >= start.
template <typename F>
void for_each_matching(const FiniteGraph& g, int k, EdgeId start, EdgeMask acc, VertexMask used,
                       F& f) {
  if (k == 0) {
    f(acc, used);
    return;
  }
  for (EdgeId e = start; e < g.edge_count(); ++e) {
    const VertexMask m = g.edge(e).mask();
    if ((m & used) != 0) continue;
    for_each_matching(g, k - 1, e + 1, acc | (EdgeMask{1} << e), used | m, f);
  }
}

bool has_cube_of_dim(const FiniteGraph& g, int n, int k) {
  if (k > n) return false;
  bool found = false;
  auto probe = [&](EdgeMask, VertexMask used) {
    if (static_cast<int>(g.vertex_count()) - popcount(used) >= n - k) found = true;
  };
  // Early exit is not needed at the sizes involved; matchings are cheap.
  for_each_matching(g, k, 0, 0, 0, probe);
  return found;
}

}  // namespace

bool cube_less(const Cube& a, const Cube& b) {
  if (a.base != b.base) return set_less(a.base, b.base);
  return set_less(a.moving, b.moving);
}

VertexMask cube_support(const FiniteGraph& g, const Cube& c) {
  VertexMask m = c.base;
  for_each_bit(c.moving, [&](std::uint32_t e) { m |= g.edge(e).mask(); });
  return m;
}

CubeComplex::CubeComplex(FiniteGraph graph, int n, int built_dim, bool capped,
                         std::vector<std::vector<Cube>> cubes)
    : graph_(std::move(graph)), n_(n), built_dim_(built_dim), capped_(capped),
      cubes_(std::move(cubes)) {
  while (cubes_.size() > 1 && cubes_.back().empty()) cubes_.pop_back();
}

const std::vector<Cube>& CubeComplex::cubes(int dim) const {
  static const std::vector<Cube> empty;
  if (dim < 0 || dim >= static_cast<int>(cubes_.size())) return empty;
  return cubes_[dim];
}

std::vector<std::size_t> CubeComplex::counts() const {
  std::vector<std::size_t> out;
  for (const auto& level : cubes_) out.push_back(level.size());
  return out;
}

std::size_t CubeComplex::index_of(const Cube& c) const {
  const auto& level = cubes(c.dim());
  auto it = std::lower_bound(level.begin(), level.end(), c, cube_less);
  if (it == level.end() || !(*it == c)) return npos;
  return static_cast<std::size_t>(it - level.begin());
}

EdgeId CubeComplex::label(std::size_t edge_index) const {
  return lowest(cubes(1).at(edge_index).moving);
}

std::pair<std::size_t, std::size_t> CubeComplex::endpoints(std::size_t edge_index) const {
  const Cube& c = cubes(1).at(edge_index);
  const Edge& e = graph_.edge(lowest(c.moving));
  return {index_of({c.base | bit(e.lo()), 0}), index_of({c.base | bit(e.hi()), 0})};
}

std::vector<std::vector<std::size_t>> CubeComplex::incident_edges() const {
  std::vector<std::vector<std::size_t>> out(count(0));
  for (std::size_t i = 0; i < count(1); ++i) {
    auto [a, b] = endpoints(i);
    out[a].push_back(i);
    out[b].push_back(i);
  }
  return out;
}

Cube face(const Cube& c, EdgeId e, VertexId end) {
  return {c.base | bit(end), c.moving & ~(EdgeMask{1} << e)};
}

std::vector<Cube> faces(const FiniteGraph& g, const Cube& c) {
  std::vector<Cube> out;
  out.reserve(2 * c.dim());
  for_each_bit(c.moving, [&](std::uint32_t e) {
    out.push_back(face(c, e, g.edge(e).lo()));
    out.push_back(face(c, e, g.edge(e).hi()));
  });
  return out;
}

CubeComplex build_uc(const FiniteGraph& g, int n, int max_dim) {
  if (n < 0) throw ValidationError("particle count must be >= 0");
  if (n > static_cast<int>(g.vertex_count())) {
    throw ValidationError("n exceeds vertex count (" + std::to_string(n) + " > " +
                          std::to_string(g.vertex_count()) + ")");
  }
  const int top = max_dim < 0 ? n : std::min(max_dim, n);
  std::vector<std::vector<Cube>> cubes(top + 1);
  for (int k = 0; k <= top; ++k) {
    auto& level = cubes[k];
    auto emit = [&](EdgeMask matching, VertexMask used) {
      auto take = [&](VertexMask base) { level.push_back({base, matching}); };
      for_each_subset(g.all_vertices() & ~used, n - k, 0, take);
    };
    for_each_matching(g, k, 0, 0, 0, emit);
    std::sort(level.begin(), level.end(), cube_less);
  }
  const bool capped = top < n && has_cube_of_dim(g, n, top + 1);
  return CubeComplex(g, n, top, capped, std::move(cubes));
}

void verify_complex(const CubeComplex& cc) {
  const FiniteGraph& g = cc.graph();
  for (int k = 0; k <= cc.top_dim(); ++k) {
    for (const Cube& c : cc.cubes(k)) {
      if (popcount(c.base) + k != cc.particles()) {
        throw InvariantViolation("cube with wrong particle count");
      }
      VertexMask seen = c.base;
      bool disjoint = true;
      for_each_bit(c.moving, [&](std::uint32_t e) {
        const VertexMask m = g.edge(e).mask();
        if ((seen & m) != 0) disjoint = false;
        seen |= m;
      });
      if (!disjoint) throw InvariantViolation("cube with overlapping moving edges");
      if (k == 0) continue;
      const auto fs = faces(g, c);
      for (std::size_t i = 0; i < fs.size(); ++i) {
        if (!cc.contains(fs[i])) throw InvariantViolation("complex not closed under faces");
        for (std::size_t j = 0; j < i; ++j) {
          if (fs[i] == fs[j]) throw InvariantViolation("cube with repeated face");
        }
      }
      if (k == 1) {
        const auto [a, b] = cc.endpoints(&c - cc.cubes(1).data());
        const VertexMask diff = cc.cubes(0)[a].base ^ cc.cubes(0)[b].base;
        if (diff != g.edge(lowest(c.moving)).mask()) {
          throw InvariantViolation("1-cube endpoints do not differ along its label");
        }
      }
    }
  }
}

std::vector<int> signature_of(VertexMask config, const std::vector<VertexMask>& comps) {
  std::vector<int> sig(comps.size());
  for (std::size_t i = 0; i < comps.size(); ++i) sig[i] = popcount(config & comps[i]);
  return sig;
}

std::vector<ComplexComponent> components(const CubeComplex& cc, const FiniteGraph* partition_graph) {
  const FiniteGraph& pg = partition_graph != nullptr ? *partition_graph : cc.graph();
  if (pg.vertex_count() != cc.graph().vertex_count()) {
    throw ValidationError("partition graph must share the vertex set of the complex");
  }
  const auto gcomps = pg.components();
  UnionFind uf(cc.count(0));
  for (std::size_t i = 0; i < cc.count(1); ++i) {
    auto [a, b] = cc.endpoints(i);
    uf.unite(a, b);
  }
  std::vector<ComplexComponent> out;
  std::vector<std::size_t> slot(cc.count(0), CubeComplex::npos);
  for (std::size_t v = 0; v < cc.count(0); ++v) {
    const std::size_t root = uf.find(v);
    if (slot[root] == CubeComplex::npos) {
      slot[root] = out.size();
      out.push_back({{}, signature_of(cc.cubes(0)[v].base, gcomps)});
    }
    out[slot[root]].vertices.push_back(v);
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.signature < b.signature;
  });
  return out;
}

std::vector<std::vector<int>> bounded_partitions(int n, const std::vector<int>& capacity) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(capacity.size());
  std::vector<int> room(capacity.size() + 1, 0);
  for (std::size_t i = capacity.size(); i-- > 0;) room[i] = room[i + 1] + capacity[i];
  auto rec = [&](auto& self, std::size_t i, int left) -> void {
    if (i == capacity.size()) {
      if (left == 0) out.push_back(cur);
      return;
    }
    for (int p = 0; p <= std::min(left, capacity[i]); ++p) {
      if (left - p > room[i + 1]) continue;
      cur[i] = p;
      self(self, i + 1, left - p);
    }
  };
  if (n >= 0) rec(rec, 0, n);
  return out;
}

std::size_t bounded_partition_count(int n, const std::vector<int>& capacity) {
  // Small dynamic programme over components.
  if (n < 0) return 0;
  std::vector<std::size_t> ways(n + 1, 0);
  ways[0] = 1;
  for (int cap : capacity) {
    std::vector<std::size_t> next(n + 1, 0);
    for (int have = 0; have <= n; ++have) {
      if (ways[have] == 0) continue;
      for (int p = 0; p <= cap && have + p <= n; ++p) next[have + p] += ways[have];
    }
    ways = std::move(next);
  }
  return ways[n];
}

long long euler_characteristic(const CubeComplex& cc) {
  if (cc.capped()) {
    throw ValidationError("euler characteristic needs the complex built to its top dimension");
  }
  long long chi = 0;
  for (int k = 0; k <= cc.top_dim(); ++k) {
    chi += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(cc.count(k));
  }
  return chi;
}

std::vector<std::size_t> complement_isomorphism(const FiniteGraph& g, int n) {
  const int m = static_cast<int>(g.vertex_count()) - n;
  if (n < 0 || m < 0) throw ValidationError("n out of range for complement duality");
  const CubeComplex a = build_uc(g, n);
  const CubeComplex b = build_uc(g, m);
  if (a.top_dim() != b.top_dim()) throw InvariantViolation("complement duality: dimensions differ");
  std::vector<std::size_t> vertex_map;
  for (int k = 0; k <= a.top_dim(); ++k) {
    if (a.count(k) != b.count(k)) throw InvariantViolation("complement duality: counts differ");
    std::vector<char> hit(b.count(k), 0);
    for (const Cube& c : a.cubes(k)) {
      const Cube image{g.all_vertices() & ~cube_support(g, c), c.moving};
      const std::size_t j = b.index_of(image);
      if (j == CubeComplex::npos || hit[j] != 0) {
        throw InvariantViolation("complement duality: image cube missing or repeated");
      }
      hit[j] = 1;
      if (k == 0) vertex_map.push_back(j);
    }
  }
  // Incidence is preserved because the face of (B, M) at an endpoint u of e
  // maps to the face of the image at the other endpoint of e.
  for (int k = 1; k <= a.top_dim(); ++k) {
    for (const Cube& c : a.cubes(k)) {
      const Cube image{g.all_vertices() & ~cube_support(g, c), c.moving};
      for_each_bit(c.moving, [&](std::uint32_t e) {
        const Edge& ed = g.edge(e);
        const Cube f = face(c, e, ed.lo());
        const Cube fi{g.all_vertices() & ~cube_support(g, f), f.moving};
        if (!(fi == face(image, e, ed.hi()))) {
          throw InvariantViolation("complement duality: incidence not preserved");
        }
      });
    }
  }
  return vertex_map;
}

CubeComplex cut_along(const CubeComplex& cc, const std::vector<std::size_t>& edge_class,
                      const std::vector<std::size_t>& cut) {
  if (edge_class.size() != cc.count(1)) throw ValidationError("edge class list has wrong size");
  const FiniteGraph& g = cc.graph();
  auto is_cut = [&](std::size_t cls) { return std::find(cut.begin(), cut.end(), cls) != cut.end(); };

  // Class of the 1-cubes of `c` parallel to its moving edge `e`.
  auto direction_class = [&](const Cube& c, EdgeId e) {
    VertexMask base = c.base;
    for_each_bit(c.moving & ~(EdgeMask{1} << e), [&](std::uint32_t f) {
      base |= bit(g.edge(f).lo());
    });
    const std::size_t idx = cc.index_of({base, EdgeMask{1} << e});
    if (idx == CubeComplex::npos) throw InvariantViolation("cube without its edges");
    return edge_class[idx];
  };

  for (const Cube& sq : cc.cubes(2)) {
    const EdgeId e = lowest(sq.moving);
    const EdgeId f = lowest(sq.moving & (sq.moving - 1));
    const std::size_t ce = direction_class(sq, e);
    const std::size_t cf = direction_class(sq, f);
    if (ce != cf && is_cut(ce) && is_cut(cf)) {
      throw ValidationError("cannot cut along crossing hyperplanes (labels " + g.edge_name(e) +
                            " and " + g.edge_name(f) + ")");
    }
  }

  std::vector<std::vector<Cube>> kept(cc.top_dim() + 1);
  kept[0] = cc.cubes(0);
  for (int k = 1; k <= cc.top_dim(); ++k) {
    for (const Cube& c : cc.cubes(k)) {
      bool drop = false;
      for_each_bit(c.moving, [&](std::uint32_t e) { drop = drop || is_cut(direction_class(c, e)); });
      if (!drop) kept[k].push_back(c);
    }
  }
  return CubeComplex(g, cc.particles(), cc.built_dim(), cc.capped(), std::move(kept));
}

bool same_cubes(const CubeComplex& a, const CubeComplex& b) {
  if (a.particles() != b.particles() || a.graph().names() != b.graph().names()) return false;
  if (a.top_dim() != b.top_dim()) return false;
  std::vector<EdgeMask> to_b(a.graph().edge_count(), 0);
  for (EdgeId e = 0; e < a.graph().edge_count(); ++e) {
    const Edge& ed = a.graph().edge(e);
    if (auto f = b.graph().find_edge(ed.u, ed.v)) to_b[e] = EdgeMask{1} << *f;
  }
  for (int k = 0; k <= a.top_dim(); ++k) {
    if (a.count(k) != b.count(k)) return false;
    for (const Cube& c : a.cubes(k)) {
      EdgeMask moved = 0;
      bool ok = true;
      for_each_bit(c.moving, [&](std::uint32_t e) {
        ok = ok && to_b[e] != 0;
        moved |= to_b[e];
      });
      if (!ok || !b.contains({c.base, moved})) return false;
    }
  }
  return true;
}

std::string configuration_name(const FiniteGraph& g, VertexMask config) {
  std::string out = "{";
  bool first = true;
  for_each_bit(config, [&](std::uint32_t v) {
    if (!first) out += ",";
    out += g.name(v);
    first = false;
  });
  return out + "}";
}

std::string complex_to_dot(const CubeComplex& cc) {
  std::ostringstream out;
  out << "graph UC {\n";
  for (std::size_t i = 0; i < cc.count(0); ++i) {
    out << "  s" << i << " [label=" << nlohmann::json(configuration_name(cc.graph(), cc.cubes(0)[i].base))
        << "];\n";
  }
  for (std::size_t i = 0; i < cc.count(1); ++i) {
    auto [a, b] = cc.endpoints(i);
    out << "  s" << a << " -- s" << b << " [label=" << nlohmann::json(cc.graph().edge_name(cc.label(i)))
        << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string cube_counts_json(const CubeComplex& cc) {
  nlohmann::json j = nlohmann::json::object();
  for (int k = 0; k <= cc.top_dim(); ++k) j[std::to_string(k)] = cc.count(k);
  return j.dump();
}

}  // namespace gbg
