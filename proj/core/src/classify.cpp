#include "gbg/classify.hpp"

#include <algorithm>
#include <map>

#include "gbg/errors.hpp"

namespace gbg {

std::string to_string(GraphFamily f) {
  switch (f) {
    case GraphFamily::segment: return "segment";
    case GraphFamily::cycle: return "cycle";
    case GraphFamily::radial_tree: return "radial_tree";
    case GraphFamily::generalised_theta: return "generalised_theta";
    case GraphFamily::flower: return "flower";
    case GraphFamily::sun: return "sun";
    case GraphFamily::pulsar: return "pulsar";
    case GraphFamily::tree_other: return "tree_other";
    case GraphFamily::other: return "other";
  }
  return "other";
}

namespace {

/// Vertex order of the induced subgraph on `m` if it is a path, starting at
/// the lower-index endpoint.
std::optional<std::vector<VertexId>> path_order(const FiniteGraph& g, VertexMask m) {
  if (m == 0) return std::nullopt;
  const EdgeMask inside = g.edges_within(m);
  if (popcount(inside) != popcount(m) - 1) return std::nullopt;
  if (components_of(g, m, inside).size() != 1) return std::nullopt;
  VertexId start = lowest(m);
  bool found_end = false;
  for_each_bit(m, [&](std::uint32_t v) {
    if (!found_end && popcount(g.neighbors(v) & m) <= 1) {
      start = v;
      found_end = true;
    }
  });
  std::vector<VertexId> order{start};
  VertexMask used = bit(start);
  VertexId cur = start;
  while (true) {
    const VertexMask next = g.neighbors(cur) & m & ~used;
    if (next == 0) break;
    if (popcount(next) > 1) return std::nullopt;
    cur = lowest(next);
    used |= bit(cur);
    order.push_back(cur);
  }
  if (order.size() != static_cast<std::size_t>(popcount(m))) return std::nullopt;
  return order;
}

/// Orients a path so that it starts at `end`; `end` must be an endpoint.
std::optional<std::vector<VertexId>> starting_at(std::vector<VertexId> path, VertexId end) {
  if (path.front() == end) return path;
  if (path.back() == end) {
    std::reverse(path.begin(), path.end());
    return path;
  }
  return std::nullopt;
}

struct Petals {
  std::vector<std::vector<VertexId>> cycles;
  std::vector<std::vector<VertexId>> segments;
};

std::optional<Petals> petals_at(const FiniteGraph& g, VertexId c) {
  Petals out;
  const VertexMask rest = g.all_vertices() & ~bit(c);
  for (VertexMask comp : components_of(g, rest, g.edges_within(rest))) {
    auto path = path_order(g, comp);
    if (!path) return std::nullopt;
    const VertexMask att = g.neighbors(c) & comp;
    if (popcount(att) == 1) {
      auto seg = starting_at(*path, lowest(att));
      if (!seg) return std::nullopt;
      out.segments.push_back(std::move(*seg));
    } else if (popcount(att) == 2 && path->size() >= 2) {
      if (att != (bit(path->front()) | bit(path->back()))) return std::nullopt;
      out.cycles.push_back(std::move(*path));
    } else {
      return std::nullopt;
    }
  }
  return out;
}

std::vector<VertexId> cycle_order(const FiniteGraph& g, VertexMask m) {
  VertexId start = lowest(m);
  std::vector<VertexId> order{start};
  VertexId prev = start;
  VertexId cur = lowest(g.neighbors(start) & m);
  while (cur != start) {
    order.push_back(cur);
    const VertexId next = lowest(g.neighbors(cur) & m & ~bit(prev));
    prev = cur;
    cur = next;
  }
  return order;
}

/// Vertices of the unique cycle of a unicyclic graph (leaf pruning).
VertexMask two_core(const FiniteGraph& g) {
  VertexMask alive = g.all_vertices();
  bool changed = true;
  while (changed) {
    changed = false;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if ((alive & bit(v)) != 0 && popcount(g.neighbors(v) & alive) <= 1) {
        alive &= ~bit(v);
        changed = true;
      }
    }
  }
  return alive;
}

struct Hanging {
  std::vector<std::vector<VertexId>> segments;
  std::vector<VertexId> attach;
};

/// Components of g - core must each be a path glued by one end to exactly
/// one vertex of `core`.
std::optional<Hanging> hanging_segments(const FiniteGraph& g, VertexMask core,
                                        std::vector<std::vector<VertexId>>* routes,
                                        VertexId p = 0, VertexId q = 0) {
  Hanging out;
  const VertexMask rest = g.all_vertices() & ~core;
  for (VertexMask comp : components_of(g, rest, g.edges_within(rest))) {
    auto path = path_order(g, comp);
    if (!path) return std::nullopt;
    std::vector<std::pair<VertexId, VertexId>> links;  // (inside, core vertex)
    for_each_bit(comp, [&](std::uint32_t v) {
      for_each_bit(g.neighbors(v) & core, [&](std::uint32_t c) { links.emplace_back(v, c); });
    });
    if (links.size() == 1) {
      auto seg = starting_at(*path, links[0].first);
      if (!seg) return std::nullopt;
      out.segments.push_back(std::move(*seg));
      out.attach.push_back(links[0].second);
    } else if (routes != nullptr && links.size() == 2) {
      // A p-q route: one end to p, the other end to q.
      auto [a, ca] = links[0];
      auto [b, cb] = links[1];
      if (ca == cb) return std::nullopt;
      if (ca != p) {
        std::swap(a, b);
        std::swap(ca, cb);
      }
      if (ca != p || cb != q) return std::nullopt;
      auto oriented = starting_at(*path, a);
      if (!oriented || oriented->back() != b) return std::nullopt;
      routes->push_back(std::move(*oriented));
    } else {
      return std::nullopt;
    }
  }
  return out;
}

std::optional<GraphClass> try_pulsar(const FiniteGraph& g, bool theta_only) {
  std::vector<VertexId> essential;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) >= 3) essential.push_back(v);
  }
  for (std::size_t i = 0; i < essential.size(); ++i) {
    for (std::size_t j = i + 1; j < essential.size(); ++j) {
      const VertexId p = essential[i];
      const VertexId q = essential[j];
      std::vector<std::vector<VertexId>> routes;
      auto hang = hanging_segments(g, bit(p) | bit(q), &routes, p, q);
      if (!hang) continue;
      if (g.find_edge(p, q)) routes.insert(routes.begin(), std::vector<VertexId>{});
      if (routes.size() < 2) continue;
      if (theta_only && (!hang->segments.empty() || routes.size() < 3)) continue;
      GraphClass cls;
      cls.family = theta_only ? GraphFamily::generalised_theta : GraphFamily::pulsar;
      cls.parameter = static_cast<int>(routes.size()) - 1;
      cls.poles = {p, q};
      cls.paths = std::move(routes);
      cls.segments = std::move(hang->segments);
      cls.attach = std::move(hang->attach);
      return cls;
    }
  }
  return std::nullopt;
}

bool any_flower_center(const FiniteGraph& g) {
  for (VertexId c = 0; c < g.vertex_count(); ++c) {
    if (is_flower_at(g, c)) return true;
  }
  return false;
}

}  // namespace

bool is_segment(const FiniteGraph& g) {
  return path_order(g, g.all_vertices()).has_value();
}

bool is_tree(const FiniteGraph& g) {
  return g.vertex_count() > 0 && g.connected() &&
         g.edge_count() + 1 == g.vertex_count();
}

bool is_flower_at(const FiniteGraph& g, VertexId center) {
  return g.connected() && petals_at(g, center).has_value();
}

GraphClass classify(const FiniteGraph& g) {
  if (g.vertex_count() == 0 || !g.connected()) {
    throw ValidationError("classify requires a connected, non-empty graph");
  }
  GraphClass cls;
  cls.flower_compatible = any_flower_center(g);

  if (auto path = path_order(g, g.all_vertices())) {
    cls.family = GraphFamily::segment;
    cls.paths.push_back(std::move(*path));
    return cls;
  }

  bool all_two = true;
  int essential = 0;
  VertexId hub = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 2) all_two = false;
    if (g.degree(v) >= 3) {
      if (essential == 0) hub = v;
      ++essential;
    }
  }
  if (all_two) {
    cls.family = GraphFamily::cycle;
    cls.cycles.push_back(cycle_order(g, g.all_vertices()));
    return cls;
  }

  const bool tree = is_tree(g);
  if (tree && essential == 1) {
    auto petals = petals_at(g, hub);
    if (!petals) throw InvariantViolation("radial tree without prong decomposition");
    cls.family = GraphFamily::radial_tree;
    cls.parameter = g.degree(hub);
    cls.center = hub;
    cls.segments = std::move(petals->segments);
    return cls;
  }

  if (auto theta = try_pulsar(g, true)) {
    theta->flower_compatible = cls.flower_compatible;
    return *theta;
  }

  for (VertexId c = 0; c < g.vertex_count(); ++c) {
    if (auto petals = petals_at(g, c)) {
      cls.family = GraphFamily::flower;
      cls.center = c;
      cls.cycles = std::move(petals->cycles);
      cls.segments = std::move(petals->segments);
      return cls;
    }
  }

  if (g.edge_count() == g.vertex_count()) {
    const VertexMask core = two_core(g);
    if (auto hang = hanging_segments(g, core, nullptr)) {
      cls.family = GraphFamily::sun;
      cls.cycles.push_back(cycle_order(g, core));
      cls.segments = std::move(hang->segments);
      cls.attach = std::move(hang->attach);
      return cls;
    }
  }

  if (auto pulsar = try_pulsar(g, false)) {
    pulsar->flower_compatible = cls.flower_compatible;
    return *pulsar;
  }

  cls.family = tree ? GraphFamily::tree_other : GraphFamily::other;
  for (const Edge& e : g.edges()) cls.edges.emplace_back(e.u, e.v);
  return cls;
}

FiniteGraph rebuild(const GraphClass& cls, const FiniteGraph& source) {
  FiniteGraph out;
  auto v = [&](VertexId id) {
    const std::string& name = source.name(id);
    if (auto have = out.find_vertex(name)) return *have;
    return out.add_vertex(name);
  };
  auto chain = [&](const std::vector<VertexId>& path) {
    for (std::size_t i = 0; i + 1 < path.size(); ++i) out.add_edge(v(path[i]), v(path[i + 1]));
    if (path.size() == 1) v(path[0]);
  };
  auto ring = [&](const std::vector<VertexId>& cyc) {
    chain(cyc);
    out.add_edge(v(cyc.back()), v(cyc.front()));
  };

  switch (cls.family) {
    case GraphFamily::segment:
      chain(cls.paths.at(0));
      break;
    case GraphFamily::cycle:
      ring(cls.cycles.at(0));
      break;
    case GraphFamily::radial_tree:
    case GraphFamily::flower: {
      const VertexId c = v(*cls.center);
      for (const auto& seg : cls.segments) {
        chain(seg);
        out.add_edge(c, v(seg.front()));
      }
      for (const auto& petal : cls.cycles) {
        chain(petal);
        out.add_edge(c, v(petal.front()));
        out.add_edge(v(petal.back()), c);
      }
      break;
    }
    case GraphFamily::sun:
      ring(cls.cycles.at(0));
      for (std::size_t i = 0; i < cls.segments.size(); ++i) {
        chain(cls.segments[i]);
        out.add_edge(v(cls.attach[i]), v(cls.segments[i].front()));
      }
      break;
    case GraphFamily::generalised_theta:
    case GraphFamily::pulsar: {
      const VertexId p = v(cls.poles.at(0));
      const VertexId q = v(cls.poles.at(1));
      for (const auto& route : cls.paths) {
        if (route.empty()) {
          out.add_edge(p, q);
          continue;
        }
        chain(route);
        out.add_edge(p, v(route.front()));
        out.add_edge(v(route.back()), q);
      }
      for (std::size_t i = 0; i < cls.segments.size(); ++i) {
        chain(cls.segments[i]);
        out.add_edge(v(cls.attach[i]), v(cls.segments[i].front()));
      }
      break;
    }
    case GraphFamily::tree_other:
    case GraphFamily::other:
      for (VertexId id = 0; id < source.vertex_count(); ++id) v(id);
      for (auto [a, b] : cls.edges) out.add_edge(v(a), v(b));
      break;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Canonical labelling

namespace {

struct Canonizer {
  const FiniteGraph& g;
  std::size_t n;
  std::vector<std::uint64_t> best;
  bool have_best = false;
  std::size_t leaves = 0;

  std::vector<int> refine(std::vector<int> color) const {
    std::size_t classes = 0;
    while (true) {
      std::vector<std::pair<std::vector<int>, VertexId>> sig(n);
      for (VertexId v = 0; v < n; ++v) {
        std::vector<int> s{color[v]};
        std::vector<int> nb;
        for_each_bit(g.neighbors(v), [&](std::uint32_t w) { nb.push_back(color[w]); });
        std::sort(nb.begin(), nb.end());
        s.insert(s.end(), nb.begin(), nb.end());
        sig[v] = {std::move(s), v};
      }
      std::vector<std::vector<int>> keys;
      keys.reserve(n);
      for (auto& s : sig) keys.push_back(s.first);
      std::sort(keys.begin(), keys.end());
      keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
      for (VertexId v = 0; v < n; ++v) {
        color[v] = static_cast<int>(
            std::lower_bound(keys.begin(), keys.end(), sig[v].first) - keys.begin());
      }
      if (keys.size() == classes) return color;
      classes = keys.size();
    }
  }

  void leaf(const std::vector<int>& color) {
    if (++leaves > 2000000) throw Unsupported("canonical labelling search too large");
    std::vector<VertexId> at(n);
    for (VertexId v = 0; v < n; ++v) at[color[v]] = v;
    std::vector<std::uint64_t> code(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t row = 0;
      for_each_bit(g.neighbors(at[i]), [&](std::uint32_t w) { row |= bit(color[w]); });
      code[i] = row;
    }
    if (!have_best || code < best) {
      best = std::move(code);
      have_best = true;
    }
  }

  void search(std::vector<int> color) {
    color = refine(std::move(color));
    std::map<int, std::vector<VertexId>> cells;
    for (VertexId v = 0; v < n; ++v) cells[color[v]].push_back(v);
    const std::vector<VertexId>* target = nullptr;
    int target_color = 0;
    for (const auto& [c, members] : cells) {
      if (members.size() > 1 && (target == nullptr || members.size() < target->size())) {
        target = &members;
        target_color = c;
      }
    }
    if (target == nullptr) {
      leaf(color);
      return;
    }
    std::vector<VertexId> tried;
    for (VertexId x : *target) {
      bool twin = false;
      for (VertexId y : tried) {
        if ((g.neighbors(x) & ~bit(y)) == (g.neighbors(y) & ~bit(x))) twin = true;
      }
      if (twin) continue;
      tried.push_back(x);
      std::vector<int> next(n);
      for (VertexId v = 0; v < n; ++v) {
        next[v] = 2 * color[v] + ((color[v] == target_color && v != x) ? 1 : 0);
      }
      search(std::move(next));
    }
  }
};

}  // namespace

std::vector<std::uint64_t> canonical_form(const FiniteGraph& g) {
  Canonizer c{g, g.vertex_count(), {}, false, 0};
  if (c.n == 0) return {0};
  c.search(std::vector<int>(c.n, 0));
  std::vector<std::uint64_t> out{c.n};
  out.insert(out.end(), c.best.begin(), c.best.end());
  return out;
}

bool isomorphic(const FiniteGraph& a, const FiniteGraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace gbg
