#include "gbg/hyperplanes.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include <nlohmann/json.hpp>

#include "gbg/errors.hpp"

namespace gbg {

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

/// Edge index of the 1-cube of `sq` parallel to its moving edge `e`, with
/// the other particle at the given end of its edge.
std::size_t parallel_edge(const CubeComplex& cc, const Cube& sq, EdgeId e, bool other_hi) {
  const FiniteGraph& g = cc.graph();
  const EdgeId f = lowest(sq.moving & ~(EdgeMask{1} << e));
  const VertexId end = other_hi ? g.edge(f).hi() : g.edge(f).lo();
  const std::size_t idx = cc.index_of({sq.base | bit(end), EdgeMask{1} << e});
  if (idx == CubeComplex::npos) throw InvariantViolation("square without its edges");
  return idx;
}

void fill_sides(const CubeComplex& cc, HyperplaneSet& hs) {
  const FiniteGraph& g = cc.graph();
  for (Hyperplane& h : hs.planes) {
    const Edge& e = g.edge(h.label);
    for (std::size_t i : h.dual_edges) {
      const VertexMask base = cc.cubes(1)[i].base;
      h.lo_side.push_back(cc.index_of({base | bit(e.lo()), 0}));
      h.hi_side.push_back(cc.index_of({base | bit(e.hi()), 0}));
    }
    std::sort(h.lo_side.begin(), h.lo_side.end());
    std::sort(h.hi_side.begin(), h.hi_side.end());
  }
}

}  // namespace

std::vector<VertexMask> closed_edge_components(const FiniteGraph& g, EdgeId e) {
  const VertexMask rest = g.all_vertices() & ~g.edge(e).mask();
  return components_of(g, rest, g.edges_within(rest));
}

HyperplaneSet hyperplanes(const CubeComplex& cc) {
  const FiniteGraph& g = cc.graph();
  std::vector<std::vector<VertexMask>> comps(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) comps[e] = closed_edge_components(g, e);

  std::map<std::pair<EdgeId, std::vector<int>>, std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < cc.count(1); ++i) {
    const Cube& c = cc.cubes(1)[i];
    const EdgeId e = lowest(c.moving);
    classes[{e, signature_of(c.base, comps[e])}].push_back(i);
  }
  HyperplaneSet hs;
  hs.edge_class.assign(cc.count(1), 0);
  for (auto& [key, edges] : classes) {
    for (std::size_t i : edges) hs.edge_class[i] = hs.planes.size();
    hs.planes.push_back({key.first, key.second, std::move(edges), {}, {}});
  }
  fill_sides(cc, hs);
  return hs;
}

std::vector<std::size_t> propagation_classes(const CubeComplex& cc) {
  std::vector<std::size_t> parent(cc.count(1));
  std::iota(parent.begin(), parent.end(), 0);
  for (const Cube& sq : cc.cubes(2)) {
    for_each_bit(sq.moving, [&](std::uint32_t e) {
      std::size_t a = find_root(parent, parallel_edge(cc, sq, e, false));
      std::size_t b = find_root(parent, parallel_edge(cc, sq, e, true));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    });
  }
  std::vector<std::size_t> cls(cc.count(1));
  std::map<std::size_t, std::size_t> number;
  for (std::size_t i = 0; i < cc.count(1); ++i) {
    const std::size_t root = find_root(parent, i);
    auto it = number.try_emplace(root, number.size()).first;
    cls[i] = it->second;
  }
  return cls;
}

bool same_partition(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  if (a.size() != b.size()) return false;
  std::map<std::size_t, std::size_t> ab;
  std::map<std::size_t, std::size_t> ba;
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto [x, fresh_x] = ab.try_emplace(a[i], b[i]);
    auto [y, fresh_y] = ba.try_emplace(b[i], a[i]);
    if (x->second != b[i] || y->second != a[i]) return false;
  }
  return true;
}

HyperplaneSet hyperplanes_by_propagation(const CubeComplex& cc) {
  if (cc.built_dim() < 2 && cc.particles() >= 2) {
    throw ValidationError("propagation needs the complex built to dimension >= 2");
  }
  const auto cls = propagation_classes(cc);
  HyperplaneSet lemma = hyperplanes(cc);
  if (!same_partition(cls, lemma.edge_class)) {
    throw InvariantViolation("square propagation disagrees with the labelling criterion");
  }
  return lemma;
}

bool sides_match_cut_component(const CubeComplex& cc, const Hyperplane& h) {
  const FiniteGraph& g = cc.graph();
  const Edge& e = g.edge(h.label);
  const VertexMask rest = g.all_vertices() & ~e.mask();
  const FiniteGraph sub = g.induced(rest);
  std::vector<VertexId> back;  // sub index -> g index
  for_each_bit(rest, [&](std::uint32_t v) { back.push_back(v); });
  auto lift_vertices = [&](VertexMask m) {
    VertexMask out = 0;
    for_each_bit(m, [&](std::uint32_t v) { out |= bit(back[v]); });
    return out;
  };
  auto lift_edges = [&](EdgeMask m) {
    EdgeMask out = 0;
    for_each_bit(m, [&](std::uint32_t f) {
      const Edge& se = sub.edge(f);
      out |= EdgeMask{1} << *g.find_edge(back[se.u], back[se.v]);
    });
    return out;
  };

  const CubeComplex lower = build_uc(sub, cc.particles() - 1, cc.built_dim());
  const auto lower_comps = components(lower);
  const ComplexComponent* match = nullptr;
  for (const auto& comp : lower_comps) {
    if (comp.signature == h.signature) match = &comp;
  }
  if (match == nullptr) return false;
  std::set<std::size_t> members(match->vertices.begin(), match->vertices.end());

  for (VertexId end : {e.lo(), e.hi()}) {
    const auto& side = end == e.lo() ? h.lo_side : h.hi_side;
    if (side.size() != match->vertices.size()) return false;
    for (int k = 0; k <= lower.top_dim(); ++k) {
      for (const Cube& c : lower.cubes(k)) {
        VertexMask v0 = c.base;
        for_each_bit(c.moving, [&](std::uint32_t f) { v0 |= bit(sub.edge(f).lo()); });
        if (members.count(lower.index_of({v0, 0})) == 0) continue;
        const Cube lifted{lift_vertices(c.base) | bit(end), lift_edges(c.moving)};
        if (!cc.contains(lifted)) return false;
      }
    }
    for (std::size_t i = 0; i < side.size(); ++i) {
      VertexMask lowered = 0;
      const VertexMask b = cc.cubes(0)[side[i]].base & ~bit(end);
      for (std::size_t j = 0; j < back.size(); ++j) {
        if ((b & bit(back[j])) != 0) lowered |= bit(static_cast<std::uint32_t>(j));
      }
      if (members.count(lower.index_of({lowered, 0})) == 0) return false;
    }
  }
  return true;
}

SpecialnessReport check_special(const CubeComplex& cc, const HyperplaneSet& hs) {
  const FiniteGraph& g = cc.graph();
  SpecialnessReport rep;
  std::set<std::pair<std::size_t, std::size_t>> crossing;

  for (std::size_t s = 0; s < cc.count(2); ++s) {
    const Cube& sq = cc.cubes(2)[s];
    const EdgeId e = lowest(sq.moving);
    const EdgeId f = lowest(sq.moving & (sq.moving - 1));
    const std::size_t ce = hs.edge_class[parallel_edge(cc, sq, e, false)];
    const std::size_t cf = hs.edge_class[parallel_edge(cc, sq, f, false)];
    if (ce == cf) rep.self_intersecting.push_back(s);
    crossing.insert({std::min(ce, cf), std::max(ce, cf)});

    // Co-orientation: both e-edges run lo -> hi and their tails are joined
    // by an f-edge of the same square.
    for (EdgeId d : {e, f}) {
      const EdgeId o = d == e ? f : e;
      const std::size_t p0 = parallel_edge(cc, sq, d, false);
      const std::size_t p1 = parallel_edge(cc, sq, d, true);
      const auto tail0 = cc.endpoints(p0).first;
      const auto tail1 = cc.endpoints(p1).first;
      const VertexMask diff = cc.cubes(0)[tail0].base ^ cc.cubes(0)[tail1].base;
      if (diff != g.edge(o).mask() || hs.edge_class[p0] != hs.edge_class[p1]) {
        rep.two_sided = false;
        rep.two_sided_failures.push_back(s);
      }
    }
  }

  auto spans_square = [&](std::size_t vertex, std::size_t a, std::size_t b) {
    const VertexMask config = cc.cubes(0)[vertex].base;
    const Edge& ea = g.edge(cc.label(a));
    const Edge& eb = g.edge(cc.label(b));
    if ((ea.mask() & eb.mask()) != 0) return false;
    const VertexMask base = config & ~ea.mask() & ~eb.mask();
    return cc.contains({base, (EdgeMask{1} << cc.label(a)) | (EdgeMask{1} << cc.label(b))});
  };
  // +1 if the edge leaves the vertex (vertex is its lo end), -1 otherwise.
  auto direction = [&](std::size_t vertex, std::size_t edge) {
    return cc.endpoints(edge).first == vertex ? 1 : -1;
  };

  const auto incident = cc.incident_edges();
  for (std::size_t v = 0; v < incident.size(); ++v) {
    const auto& es = incident[v];
    for (std::size_t i = 0; i < es.size(); ++i) {
      for (std::size_t j = i + 1; j < es.size(); ++j) {
        const std::size_t a = es[i];
        const std::size_t b = es[j];
        const std::size_t ca = hs.edge_class[a];
        const std::size_t cb = hs.edge_class[b];
        if (spans_square(v, a, b)) continue;
        if (ca == cb) {
          rep.self_osculating.push_back({v, a, b, direction(v, a) == direction(v, b)});
        } else if (crossing.count({std::min(ca, cb), std::max(ca, cb)}) != 0) {
          rep.inter_osculating.push_back({std::min(ca, cb), std::max(ca, cb), v, a, b});
        }
      }
    }
  }
  return rep;
}

SpecialnessReport check_special(const CubeComplex& cc) { return check_special(cc, hyperplanes(cc)); }

std::string hyperplane_report_json(const CubeComplex& cc, const HyperplaneSet& hs,
                                   const SpecialnessReport& special) {
  const FiniteGraph& g = cc.graph();
  nlohmann::json labels = nlohmann::json::array();
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    nlohmann::json planes = nlohmann::json::array();
    for (const Hyperplane& h : hs.planes) {
      if (h.label != e) continue;
      planes.push_back({{"signature", h.signature},
                        {"dual_edges", h.dual_edges.size()},
                        {"side_sizes", {h.lo_side.size(), h.hi_side.size()}}});
    }
    labels.push_back({{"label", g.edge_name(e)}, {"count", planes.size()}, {"hyperplanes", planes}});
  }
  nlohmann::json osc = nlohmann::json::array();
  for (const auto& w : special.self_osculating) {
    osc.push_back({{"vertex", w.vertex}, {"edges", {w.first, w.second}}, {"direct", w.direct}});
  }
  nlohmann::json inter = nlohmann::json::array();
  for (const auto& w : special.inter_osculating) {
    inter.push_back({{"hyperplanes", {w.plane_a, w.plane_b}},
                     {"vertex", w.vertex},
                     {"edges", {w.first, w.second}}});
  }
  nlohmann::json j = {
      {"labels", labels},
      {"specialness",
       {{"special", special.special()},
        {"two_sided", special.two_sided},
        {"two_sided_failures", special.two_sided_failures},
        {"self_intersecting", special.self_intersecting},
        {"self_osculating", osc},
        {"inter_osculating", inter}}}};
  return j.dump(2);
}

}  // namespace gbg
