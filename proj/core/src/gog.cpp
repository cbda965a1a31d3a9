#include "gbg/gog.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "gbg/braid_criteria.hpp"
#include "gbg/classify.hpp"
#include "gbg/errors.hpp"
#include "gbg/hyperplanes.hpp"
#include "gbg/subdivision.hpp"

namespace gbg {

// ---------------------------------------------------------------------------
// Descriptors

GroupDescriptor GroupDescriptor::free(int rank) {
  GroupDescriptor d;
  if (rank <= 0) return d;
  d.kind = Kind::free;
  d.rank = rank;
  return d;
}

GroupDescriptor GroupDescriptor::free_abelian(int rank) {
  if (rank <= 1) return free(rank);
  GroupDescriptor d;
  d.kind = Kind::free_abelian;
  d.rank = rank;
  return d;
}

GroupDescriptor GroupDescriptor::direct_product(std::vector<GroupDescriptor> factors) {
  std::vector<GroupDescriptor> flat;
  for (auto& f : factors) {
    if (f.kind == Kind::direct_product) {
      for (auto& g : f.factors) flat.push_back(std::move(g));
    } else if (!f.is_trivial()) {
      flat.push_back(std::move(f));
    }
  }
  if (flat.empty()) return trivial();
  if (flat.size() == 1) return std::move(flat.front());
  const bool abelian = std::all_of(flat.begin(), flat.end(), [](const GroupDescriptor& f) {
    return f.kind == Kind::free_abelian || (f.kind == Kind::free && f.rank == 1);
  });
  if (abelian) {
    int rank = 0;
    for (const auto& f : flat) rank += f.rank;
    return free_abelian(rank);
  }
  GroupDescriptor d;
  d.kind = Kind::direct_product;
  d.factors = std::move(flat);
  return d;
}

GroupDescriptor GroupDescriptor::free_product(std::vector<GroupDescriptor> factors) {
  std::vector<GroupDescriptor> flat;
  for (auto& f : factors) {
    if (f.kind == Kind::free_product) {
      for (auto& g : f.factors) flat.push_back(std::move(g));
    } else if (!f.is_trivial()) {
      flat.push_back(std::move(f));
    }
  }
  // Free factors merge into one, placed where the first of them stood.
  std::vector<GroupDescriptor> merged;
  int free_rank = 0;
  std::size_t free_at = flat.size();
  for (auto& f : flat) {
    if (f.kind == Kind::free) {
      if (free_at == flat.size()) {
        free_at = merged.size();
        merged.push_back(trivial());
      }
      free_rank += f.rank;
    } else {
      merged.push_back(std::move(f));
    }
  }
  if (free_at != flat.size()) merged[free_at] = free(free_rank);
  if (merged.empty()) return trivial();
  if (merged.size() == 1) return std::move(merged.front());
  GroupDescriptor d;
  d.kind = Kind::free_product;
  d.factors = std::move(merged);
  return d;
}

GroupDescriptor GroupDescriptor::braid_opaque(const FiniteGraph& g, int n, std::vector<int> partition) {
  GroupDescriptor d;
  d.kind = Kind::braid_opaque;
  d.graph = std::make_shared<const FiniteGraph>(g);
  d.particles = n;
  d.partition = std::move(partition);
  return d;
}

bool GroupDescriptor::is_opaque() const {
  if (kind == Kind::braid_opaque) return true;
  return std::any_of(factors.begin(), factors.end(), [](const auto& f) { return f.is_opaque(); });
}

int GroupDescriptor::free_rank() const {
  if (kind == Kind::free) return rank;
  if (kind == Kind::free_product) {
    for (const auto& f : factors) {
      if (f.kind == Kind::free) return f.rank;
    }
  }
  return 0;
}

std::string to_string(GroupDescriptor::Kind k) {
  using K = GroupDescriptor::Kind;
  switch (k) {
    case K::trivial: return "trivial";
    case K::free: return "free";
    case K::free_abelian: return "free_abelian";
    case K::direct_product: return "direct_product";
    case K::free_product: return "free_product";
    case K::braid_opaque: return "braid_opaque";
  }
  return "";
}

std::string render(const GroupDescriptor& d) {
  using K = GroupDescriptor::Kind;
  auto wrapped = [](const GroupDescriptor& f, K parent) {
    const bool compound = f.kind == K::free_product || f.kind == K::direct_product;
    return compound && f.kind != parent ? "(" + render(f) + ")" : render(f);
  };
  switch (d.kind) {
    case K::trivial: return "1";
    case K::free: return d.rank == 1 ? "Z" : "F" + std::to_string(d.rank);
    case K::free_abelian: return "Z^" + std::to_string(d.rank);
    case K::direct_product:
    case K::free_product: {
      std::string out;
      for (std::size_t i = 0; i < d.factors.size(); ++i) {
        if (i != 0) out += d.kind == K::free_product ? " * " : " x ";
        out += wrapped(d.factors[i], d.kind);
      }
      return out;
    }
    case K::braid_opaque:
      return "RB" + std::to_string(d.particles) + "(" + std::to_string(d.graph->vertex_count()) + "v," +
             std::to_string(d.graph->edge_count()) + "e)";
  }
  return "";
}

namespace {

nlohmann::json descriptor_to_json(const GroupDescriptor& d) {
  nlohmann::json j = {{"kind", to_string(d.kind)}, {"text", render(d)}};
  if (d.kind == GroupDescriptor::Kind::free || d.kind == GroupDescriptor::Kind::free_abelian) j["rank"] = d.rank;
  if (!d.factors.empty()) {
    nlohmann::json fs = nlohmann::json::array();
    for (const auto& f : d.factors) fs.push_back(descriptor_to_json(f));
    j["factors"] = fs;
  }
  if (d.kind == GroupDescriptor::Kind::braid_opaque) {
    j["graph"] = nlohmann::json::parse(graph_to_json(*d.graph));
    j["n"] = d.particles;
    j["partition"] = d.partition;
  }
  return j;
}

}  // namespace

std::string descriptor_json(const GroupDescriptor& d) { return descriptor_to_json(d).dump(); }

// ---------------------------------------------------------------------------
// Rank formulas

long long binomial(int a, int b) {
  if (b < 0 || a < 0 || a < b) return 0;
  long long r = 1;
  b = std::min(b, a - b);
  for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

long long radial_rank(int n, int k) {
  if (n < 1 || k < 1) throw ValidationError("radial_rank needs n, k >= 1");
  return (k - 2) * binomial(n + k - 2, k - 1) - binomial(n + k - 2, k - 2) + 1;
}

long long modified_radial_rank(int n, int k, int r) {
  if (n < 3 || k < 3) throw ValidationError("modified_radial_rank needs n, k >= 3");
  if (r == 1) {
    return (k - 2) * (binomial(n + k - 4, k - 3) + 2 * binomial(n + k - 4, k - 2)) -
           binomial(n + k - 2, k - 2) + 1;
  }
  if (r == 2) {
    return (k - 2) * (binomial(n + k - 3, k - 2) + binomial(n + k - 5, k - 3)) -
           (k - 3) * binomial(n + k - 6, k - 2) - binomial(n + k - 2, k - 2) + 1;
  }
  throw ValidationError("modified_radial_rank needs r in {1, 2}");
}

// ---------------------------------------------------------------------------
// Resolver

GroupDescriptor GroupResolver::resolve(const FiniteGraph& g, const std::vector<int>& partition) {
  const auto comps = g.components();
  if (comps.size() != partition.size()) throw ValidationError("partition does not match components");
  std::vector<GroupDescriptor> parts;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (partition[i] < 0 || partition[i] > popcount(comps[i])) {
      throw ValidationError("partition entry out of range");
    }
    parts.push_back(resolve_connected(g.induced(comps[i]), partition[i]));
  }
  return GroupDescriptor::direct_product(std::move(parts));
}

GroupDescriptor GroupResolver::resolve_connected(const FiniteGraph& h, int k) {
  const int v = static_cast<int>(h.vertex_count());
  if (k == 0 || k == v) return GroupDescriptor::trivial();
  if (2 * k > v) k = v - k;

  const auto key = std::make_pair(canonical_form(h), k);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  GroupDescriptor out = GroupDescriptor::braid_opaque(h, k, {k});
  bool done = true;
  if (triviality_criterion(h, k, {k}) == BraidSize::trivial) {
    out = GroupDescriptor::trivial();
  } else if (k == 1) {
    out = GroupDescriptor::free(h.cycle_rank());
  } else {
    const GraphClass cls = classify(h);
    if (cls.family == GraphFamily::cycle) {
      out = GroupDescriptor::free(1);
    } else if (cls.family == GraphFamily::radial_tree && check_subdivision(h, k).ok) {
      out = GroupDescriptor::free(static_cast<int>(radial_rank(k, cls.parameter)));
    } else if (cls.family == GraphFamily::radial_tree && k >= 3) {
      int short_prongs = 0;
      bool long_rest = true;
      for (const auto& prong : cls.segments) {
        const int len = static_cast<int>(prong.size());
        if (len == 1) {
          ++short_prongs;
        } else if (len < k + 1) {
          long_rest = false;
        }
      }
      if (long_rest && (short_prongs == 1 || short_prongs == 2)) {
        out = GroupDescriptor::free(static_cast<int>(modified_radial_rank(k, cls.parameter, short_prongs)));
      } else {
        done = false;
      }
    } else {
      done = false;
    }
  }
  if (!done && depth_ < limits_.max_depth &&
      binomial(v, k) <= static_cast<long long>(limits_.max_configurations)) {
    out = search_decomposition(h, k);
  }
  memo_.emplace(key, out);
  return out;
}

GroupDescriptor GroupResolver::search_decomposition(const FiniteGraph& h, int k) {
  std::vector<std::vector<EdgeId>> candidates;
  for (EdgeId e = 0; e < h.edge_count(); ++e) candidates.push_back({e});
  for (VertexId v = 0; v < h.vertex_count(); ++v) {
    const int d = h.degree(v);
    if (d < 3) continue;
    std::vector<EdgeId> at;
    for (EdgeId e = 0; e < h.edge_count(); ++e) {
      if ((h.edge(e).mask() & bit(v)) != 0) at.push_back(e);
    }
    if (d - 2 >= 2) candidates.emplace_back(at.begin(), at.begin() + (d - 2));
    candidates.push_back(at);
  }

  ++depth_;
  GroupDescriptor result = GroupDescriptor::braid_opaque(h, k, {k});
  for (const auto& cuts : candidates) {
    DecomposeOptions options;
    options.stop_at_nontrivial_link = true;
    GraphOfGroups gog = decompose(h, k, cuts, options, this);
    if (!gog.groups_resolved) continue;
    const bool ok = std::all_of(gog.links.begin(), gog.links.end(),
                                [](const LambdaLink& l) { return l.group.is_trivial(); }) &&
                    std::none_of(gog.nodes.begin(), gog.nodes.end(),
                                 [](const LambdaNode& n) { return n.group.is_opaque(); });
    if (!ok) continue;
    result = assemble(gog).group;
    break;
  }
  --depth_;
  return result;
}

// ---------------------------------------------------------------------------
// Decomposition

VertexId common_vertex(const FiniteGraph& g, const std::vector<EdgeId>& cuts) {
  if (cuts.empty()) throw ValidationError("at least one cut edge is required");
  VertexMask shared = g.all_vertices();
  std::set<EdgeId> seen;
  for (EdgeId e : cuts) {
    if (e >= g.edge_count()) throw ValidationError("cut edge id out of range");
    if (!seen.insert(e).second) throw ValidationError("cut edge " + g.edge_name(e) + " repeated");
    shared &= g.edge(e).mask();
  }
  if (shared == 0) throw ValidationError("cut edges do not share a common vertex");
  if (cuts.size() == 1) return g.edge(cuts[0]).lo();
  return lowest(shared);
}

namespace {

EdgeMask mask_of(const std::vector<EdgeId>& cuts) {
  EdgeMask m = 0;
  for (EdgeId e : cuts) m |= EdgeMask{1} << e;
  return m;
}

std::size_t component_index(const std::vector<VertexMask>& comps, VertexId v) {
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if ((comps[i] & bit(v)) != 0) return i;
  }
  throw InvariantViolation("vertex outside every component");
}

std::vector<int> capacities(const std::vector<VertexMask>& comps) {
  std::vector<int> caps;
  for (VertexMask c : comps) caps.push_back(popcount(c));
  return caps;
}

}  // namespace

bool predict_adjacency(const std::vector<int>& K, const std::vector<int>& L, std::size_t cv,
                       std::size_t ci) {
  if (K.size() != L.size() || cv >= K.size() || ci >= K.size()) return false;
  if (cv == ci) return K == L && K[cv] >= 1;
  auto moved = [&](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> m = a;
    --m[cv];
    ++m[ci];
    return a[cv] >= 1 && m == b;
  };
  return moved(K, L) || moved(L, K);
}

std::size_t predict_link_count(const FiniteGraph& g, const std::vector<EdgeId>& cuts, EdgeId edge,
                               const std::vector<int>& K, const std::vector<int>& L) {
  const VertexId v = common_vertex(g, cuts);
  const Edge& ed = g.edge(edge);
  const VertexId vi = ed.u == v ? ed.v : ed.u;
  const FiniteGraph cut_graph = remove_open_edges(g, mask_of(cuts));
  const auto comps = cut_graph.components();
  const std::size_t cv = component_index(comps, v);
  const std::size_t ci = component_index(comps, vi);
  std::vector<int> moved = K;
  if (K.size() != comps.size() || K[cv] < 1) return 0;
  --moved[cv];
  ++moved[ci];
  if (moved != L) return 0;

  std::vector<int> base = K;
  --base[cv];
  const auto pieces = closed_edge_components(g, edge);
  std::size_t total = 1;
  for (std::size_t j = 0; j < comps.size(); ++j) {
    std::vector<int> caps;
    for (VertexMask p : pieces) {
      if ((p & comps[j]) == p) caps.push_back(popcount(p));
    }
    total *= bounded_partition_count(base[j], caps);
  }
  return total;
}

std::vector<std::vector<int>> predict_nodes(const FiniteGraph& g, int n, const std::vector<EdgeId>& cuts) {
  common_vertex(g, cuts);
  return bounded_partitions(n, capacities(remove_open_edges(g, mask_of(cuts)).components()));
}

GraphOfGroups decompose(const FiniteGraph& g, int n, const std::vector<EdgeId>& cuts,
                        DecomposeOptions options, GroupResolver* resolver) {
  if (n < 2) throw ValidationError("decompose needs n >= 2");
  if (n > static_cast<int>(g.vertex_count())) throw ValidationError("n exceeds vertex count");
  if (!g.connected()) throw ValidationError("decompose needs a connected graph");
  GraphOfGroups out;
  out.graph = g;
  out.n = n;
  out.cuts = cuts;
  std::sort(out.cuts.begin(), out.cuts.end());
  out.common = common_vertex(g, out.cuts);
  out.cut_graph = remove_open_edges(g, mask_of(out.cuts));

  const CubeComplex cc = build_uc(g, n, options.verify ? 2 : 1);
  const HyperplaneSet hs = hyperplanes(cc);
  std::vector<std::size_t> cut_planes;
  for (std::size_t p = 0; p < hs.planes.size(); ++p) {
    if (std::binary_search(out.cuts.begin(), out.cuts.end(), hs.planes[p].label)) cut_planes.push_back(p);
  }
  const CubeComplex cut = cut_along(cc, hs.edge_class, cut_planes);
  if (options.verify) {
    if (!same_cubes(cut, build_uc(out.cut_graph, n, 2))) {
      throw InvariantViolation("cut complex differs from UC_n of the cut graph");
    }
    for (std::size_t p : cut_planes) {
      if (!sides_match_cut_component(cc, hs.planes[p])) {
        throw InvariantViolation("hyperplane side differs from its closed-edge complement component");
      }
    }
  }

  const auto comps = components(cut, &out.cut_graph);
  std::vector<std::size_t> node_of(cc.count(0));
  for (std::size_t i = 0; i < comps.size(); ++i) {
    out.nodes.push_back({comps[i].signature, comps[i].vertices.size(), {}});
    for (std::size_t v : comps[i].vertices) node_of[v] = i;
  }
  for (std::size_t i = 1; i < out.nodes.size(); ++i) {
    if (out.nodes[i].signature == out.nodes[i - 1].signature) {
      throw InvariantViolation("two components of the cut complex share a signature");
    }
  }
  for (std::size_t p : cut_planes) {
    const Hyperplane& h = hs.planes[p];
    const Edge& ed = g.edge(h.label);
    const VertexId vi = ed.u == out.common ? ed.v : ed.u;
    const VertexMask base = cc.cubes(1)[h.dual_edges.front()].base;
    LambdaLink link;
    link.label = h.label;
    link.signature = h.signature;
    link.from = node_of[cc.index_of({base | bit(out.common), 0})];
    link.to = node_of[cc.index_of({base | bit(vi), 0})];
    link.dual_edges = h.dual_edges.size();
    out.links.push_back(std::move(link));
  }

  // Prediction and comparison.
  const auto gcomps = out.cut_graph.components();
  out.predicted_nodes = bounded_partitions(n, capacities(gcomps));
  for (EdgeId e : out.cuts) {
    const Edge& ed = g.edge(e);
    const VertexId vi = ed.u == out.common ? ed.v : ed.u;
    const std::size_t cv = component_index(gcomps, out.common);
    const std::size_t ci = component_index(gcomps, vi);
    for (const auto& K : out.predicted_nodes) {
      if (K[cv] < 1) continue;
      std::vector<int> L = K;
      --L[cv];
      ++L[ci];
      if (L[ci] > popcount(gcomps[ci])) continue;
      if (!predict_adjacency(K, L, cv, ci)) continue;
      const std::size_t count = predict_link_count(g, out.cuts, e, K, L);
      if (count > 0) out.predicted_links[{K, L, e}] = count;
    }
  }
  std::map<std::tuple<std::vector<int>, std::vector<int>, EdgeId>, std::size_t> actual;
  for (const auto& l : out.links) ++actual[{out.nodes[l.from].signature, out.nodes[l.to].signature, l.label}];
  std::vector<std::vector<int>> actual_nodes;
  for (const auto& node : out.nodes) actual_nodes.push_back(node.signature);
  out.shape_agrees = actual == out.predicted_links && actual_nodes == out.predicted_nodes;
  if (!out.shape_agrees) throw InvariantViolation("decomposition shape differs from its prediction");

  // Spanning tree by BFS from the least signature.
  std::vector<char> reached(out.nodes.size(), 0);
  std::deque<std::size_t> queue{0};
  reached[0] = 1;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < out.links.size(); ++i) {
      const auto& l = out.links[i];
      if (l.from != u && l.to != u) continue;
      const std::size_t w = l.from == u ? l.to : l.from;
      if (reached[w] != 0) continue;
      reached[w] = 1;
      out.tree.push_back(i);
      queue.push_back(w);
    }
  }
  if (std::find(reached.begin(), reached.end(), 0) != reached.end()) {
    throw InvariantViolation("decomposition graph is disconnected");
  }
  std::sort(out.tree.begin(), out.tree.end());

  if (options.resolve_groups) {
    GroupResolver local;
    GroupResolver& r = resolver != nullptr ? *resolver : local;
    // Links first, so a search can give up early.
    for (auto& l : out.links) {
      l.group = r.resolve(g.induced(g.all_vertices() & ~g.edge(l.label).mask()), l.signature);
      if (options.stop_at_nontrivial_link && !l.group.is_trivial()) return out;
    }
    for (auto& node : out.nodes) node.group = r.resolve(out.cut_graph, node.signature);
    out.groups_resolved = true;
  }
  return out;
}

AssembledGroup assemble(const GraphOfGroups& gog) {
  if (!gog.groups_resolved) throw ValidationError("decomposition groups were not resolved");
  std::vector<char> in_tree(gog.links.size(), 0);
  for (std::size_t i : gog.tree) in_tree[i] = 1;

  AssembledGroup out;
  const bool all_trivial = std::all_of(gog.links.begin(), gog.links.end(),
                                       [](const LambdaLink& l) { return l.group.is_trivial(); });
  std::vector<GroupDescriptor> parts;
  for (const auto& node : gog.nodes) parts.push_back(node.group);
  if (all_trivial) {
    parts.push_back(GroupDescriptor::free(static_cast<int>(gog.links.size() - gog.tree.size())));
    out.group = GroupDescriptor::free_product(std::move(parts));
    out.text = render(out.group);
    return out;
  }

  bool opaque = std::any_of(gog.nodes.begin(), gog.nodes.end(),
                            [](const LambdaNode& n) { return n.group.is_opaque(); });
  for (const auto& l : gog.links) opaque = opaque || l.group.is_opaque();
  if (opaque) {
    throw Unsupported("monomorphisms unavailable: an opaque group meets a non-trivial edge group");
  }

  out.symbolic = true;
  bool tree_trivial = true;
  int loose = 0;
  std::vector<std::string> over;
  for (std::size_t i = 0; i < gog.links.size(); ++i) {
    const auto& l = gog.links[i];
    if (in_tree[i] != 0) {
      tree_trivial = tree_trivial && l.group.is_trivial();
    } else if (l.group.is_trivial()) {
      ++loose;
    } else {
      over.push_back(render(l.group));
    }
  }
  if (tree_trivial) {
    parts.push_back(GroupDescriptor::free(loose));
    std::string edges;
    for (std::size_t i = 0; i < over.size(); ++i) edges += (i == 0 ? "" : ", ") + over[i];
    out.text = "HNN(" + render(GroupDescriptor::free_product(std::move(parts))) + " over " + edges + ")";
    return out;
  }
  std::ostringstream text;
  text << "GraphOfGroups(vertices: ";
  for (std::size_t i = 0; i < gog.nodes.size(); ++i) text << (i == 0 ? "" : ", ") << render(gog.nodes[i].group);
  text << "; edges: ";
  for (std::size_t i = 0; i < gog.links.size(); ++i) {
    const auto& l = gog.links[i];
    text << (i == 0 ? "" : ", ") << l.from << "-" << l.to << ":" << render(l.group);
  }
  text << ")";
  out.text = text.str();
  return out;
}

std::optional<FreeSplitting> find_free_splitting(const GraphOfGroups& gog) {
  if (!gog.groups_resolved) return std::nullopt;
  const std::size_t nn = gog.nodes.size();
  auto side_without = [&](std::size_t skip, std::size_t start) {
    std::vector<char> seen(nn, 0);
    std::deque<std::size_t> queue{start};
    seen[start] = 1;
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < gog.links.size(); ++i) {
        if (i == skip) continue;
        const auto& l = gog.links[i];
        if (l.from != u && l.to != u) continue;
        const std::size_t w = l.from == u ? l.to : l.from;
        if (seen[w] == 0) {
          seen[w] = 1;
          queue.push_back(w);
        }
      }
    }
    return seen;
  };

  for (std::size_t i = 0; i < gog.links.size(); ++i) {
    const auto& l = gog.links[i];
    if (!l.group.is_trivial()) continue;
    if (l.from == l.to || side_without(i, l.from)[l.to] != 0) {
      return FreeSplitting{i, "trivial edge group on a non-separating edge of the decomposition graph",
                           "H * Z"};
    }
  }
  for (std::size_t i = 0; i < gog.links.size(); ++i) {
    const auto& l = gog.links[i];
    if (!l.group.is_trivial()) continue;
    for (std::size_t start : {l.from, l.to}) {
      const auto side = side_without(i, start);
      std::vector<GroupDescriptor> parts;
      int nodes = 0;
      int edges = 0;
      bool clean = true;
      for (std::size_t u = 0; u < nn; ++u) {
        if (side[u] == 0) continue;
        ++nodes;
        parts.push_back(gog.nodes[u].group);
        clean = clean && !gog.nodes[u].group.is_opaque();
      }
      for (std::size_t j = 0; j < gog.links.size(); ++j) {
        if (j == i || side[gog.links[j].from] == 0) continue;
        ++edges;
        clean = clean && gog.links[j].group.is_trivial();
      }
      if (!clean) continue;
      parts.push_back(GroupDescriptor::free(edges - nodes + 1));
      const GroupDescriptor g = GroupDescriptor::free_product(std::move(parts));
      if (g.free_rank() >= 1) {
        return FreeSplitting{i, "trivial bridge cutting off a side with free factor " + render(g), "H * Z"};
      }
    }
  }
  return std::nullopt;
}

std::string gog_json(const GraphOfGroups& gog) {
  const FiniteGraph& g = gog.graph;
  nlohmann::json nodes = nlohmann::json::array();
  for (const auto& n : gog.nodes) {
    nlohmann::json j = {{"signature", n.signature}, {"configurations", n.size}};
    if (gog.groups_resolved) j["group"] = nlohmann::json::parse(descriptor_json(n.group));
    nodes.push_back(j);
  }
  nlohmann::json links = nlohmann::json::array();
  for (std::size_t i = 0; i < gog.links.size(); ++i) {
    const auto& l = gog.links[i];
    nlohmann::json j = {{"label", g.edge_name(l.label)},
                        {"signature", l.signature},
                        {"from", l.from},
                        {"to", l.to},
                        {"dual_edges", l.dual_edges},
                        {"tree", std::binary_search(gog.tree.begin(), gog.tree.end(), i)}};
    if (gog.groups_resolved) j["group"] = nlohmann::json::parse(descriptor_json(l.group));
    links.push_back(j);
  }
  nlohmann::json predicted = nlohmann::json::array();
  for (const auto& [key, count] : gog.predicted_links) {
    const auto& [from, to, e] = key;
    predicted.push_back({{"from", from}, {"to", to}, {"label", g.edge_name(e)}, {"count", count}});
  }
  nlohmann::json cuts = nlohmann::json::array();
  for (EdgeId e : gog.cuts) cuts.push_back(g.edge_name(e));
  return nlohmann::json{{"n", gog.n},
                        {"cuts", cuts},
                        {"common_vertex", g.name(gog.common)},
                        {"nodes", nodes},
                        {"links", links},
                        {"predicted_nodes", gog.predicted_nodes},
                        {"predicted_links", predicted},
                        {"shape_agrees", gog.shape_agrees}}
      .dump();
}

std::string lambda_to_dot(const GraphOfGroups& gog) {
  auto sig = [](const std::vector<int>& s) {
    std::string out = "K(";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i == 0 ? "" : ",") + std::to_string(s[i]);
    return out + ")";
  };
  std::ostringstream out;
  out << "graph Lambda {\n";
  for (std::size_t i = 0; i < gog.nodes.size(); ++i) {
    std::string label = sig(gog.nodes[i].signature);
    if (gog.groups_resolved) label += "\\n" + render(gog.nodes[i].group);
    out << "  k" << i << " [label=\"" << label << "\"];\n";
  }
  for (std::size_t i = 0; i < gog.links.size(); ++i) {
    const auto& l = gog.links[i];
    std::string label = gog.graph.edge_name(l.label);
    if (gog.groups_resolved) label += " " + render(l.group);
    out << "  k" << l.from << " -- k" << l.to << " [label=\"" << label << "\"";
    if (std::binary_search(gog.tree.begin(), gog.tree.end(), i)) out << ", penwidth=2";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Free product criteria

namespace {

VertexId local_index(VertexMask within, VertexId v) {
  return static_cast<VertexId>(popcount(within & (bit(v) - 1)));
}

bool segment_on(const FiniteGraph& g, VertexMask m) { return is_segment(g.induced(m)); }

EdgeMask edges_between(const FiniteGraph& g, VertexId v, VertexMask others) {
  EdgeMask out = 0;
  for_each_bit(g.neighbors(v) & others, [&](std::uint32_t w) {
    out |= EdgeMask{1} << *g.find_edge(v, w);
  });
  return out;
}

std::vector<EdgeId> edge_list(EdgeMask m) {
  std::vector<EdgeId> out;
  for_each_bit(m, [&](std::uint32_t e) { out.push_back(e); });
  return out;
}

/// Vertices of the prong of the flower `phi` (center c) that ends at leaf,
/// ordered from the center outwards.
std::vector<VertexId> prong_to(const FiniteGraph& g, VertexMask phi, VertexId c, VertexId leaf) {
  std::vector<VertexId> path{leaf};
  VertexId prev = leaf;
  VertexId cur = lowest(g.neighbors(leaf) & phi);
  while (cur != c) {
    path.push_back(cur);
    const VertexMask next = g.neighbors(cur) & phi & ~bit(prev);
    prev = cur;
    cur = lowest(next);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

std::optional<Criterion1Certificate> free_product_criterion_1(const FiniteGraph& g, int n) {
  if (n < 2) throw ValidationError("criterion 1 needs n >= 2");
  if (!g.connected()) throw ValidationError("criterion 1 needs a connected graph");
  const VertexMask all = g.all_vertices();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const VertexMask rest = all & ~bit(v);
    const auto branches = components_of(g, rest, g.edges_within(rest));

    // v as the center of the flower.
    std::vector<VertexMask> petals;
    for (VertexMask p : branches) {
      const VertexMask with_v = p | bit(v);
      if (is_flower_at(g.induced(with_v), local_index(with_v, v))) petals.push_back(p);
    }
    for (std::uint32_t pick = (1U << petals.size()) - 1; pick >= 1 && petals.size() < 20; --pick) {
      VertexMask phi = bit(v);
      for (std::size_t i = 0; i < petals.size(); ++i) {
        if ((pick >> i) & 1U) phi |= petals[i];
      }
      const VertexMask omega = (all & ~phi) | bit(v);
      if (omega == bit(v) || segment_on(g, phi) || segment_on(g, omega)) continue;
      Criterion1Certificate c{v, v, v, phi, omega, edge_list(edges_between(g, v, omega & ~bit(v)))};
      return c;
    }

    // v as a leaf of the flower.
    for (VertexMask p : branches) {
      if (popcount(g.neighbors(v) & p) != 1) continue;
      const VertexMask phi = p | bit(v);
      const VertexMask omega = (all & ~p);
      if (segment_on(g, phi) || segment_on(g, omega)) continue;
      const FiniteGraph fg = g.induced(phi);
      std::optional<VertexId> center;
      int essential = 0;
      for_each_bit(phi, [&](std::uint32_t u) {
        if (popcount(g.neighbors(u) & phi) >= 3) {
          center = u;
          ++essential;
        }
      });
      if (essential != 1 || !is_flower_at(fg, local_index(phi, *center))) continue;
      const VertexId c = *center;
      const auto prong = prong_to(g, phi, c, v);
      Criterion1Certificate cert;
      cert.glue = v;
      cert.center = c;
      const GraphClass cls = classify(fg);
      VertexMask moved = 0;
      if (cls.family == GraphFamily::radial_tree && cls.parameter == 3) {
        cert.cut_vertex = prong.front();
        for (std::size_t i = 1; i < prong.size(); ++i) moved |= bit(prong[i]);
      } else {
        cert.cut_vertex = c;
        for (VertexId u : prong) moved |= bit(u);
      }
      cert.flower = phi & ~moved;
      cert.rest = omega | moved | bit(cert.cut_vertex);
      cert.cut_edges = edge_list(edges_between(g, cert.cut_vertex, cert.rest & ~bit(cert.cut_vertex)));
      return cert;
    }
  }
  return std::nullopt;
}

std::optional<Criterion2Certificate> free_product_criterion_2(const FiniteGraph& g, int n) {
  if (n < 2) throw ValidationError("criterion 2 needs n >= 2");
  if (!check_subdivision(g, n).ok) {
    throw ValidationError("criterion 2 needs a graph passing the subdivision check for n");
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (components_of(g, g.all_vertices(), g.all_edges() & ~(EdgeMask{1} << e)).size() != 1) continue;
    const auto pieces = closed_edge_components(g, e);
    if (pieces.size() < 2) continue;
    for (VertexMask p : pieces) {
      if (segment_on(g, p) && popcount(p) - 1 >= n - 2) {
        return Criterion2Certificate{e, p, popcount(p) - 1};
      }
    }
  }
  return std::nullopt;
}

namespace {

nlohmann::json names_of(const FiniteGraph& g, VertexMask m) {
  nlohmann::json out = nlohmann::json::array();
  for_each_bit(m, [&](std::uint32_t v) { out.push_back(g.name(v)); });
  return out;
}

std::string conclusion(int n) { return "B_" + std::to_string(n) + "(G) = H * Z with H non-trivial"; }

}  // namespace

std::string certificate_json(const FiniteGraph& g, int n, const Criterion1Certificate& c) {
  nlohmann::json cuts = nlohmann::json::array();
  for (EdgeId e : c.cut_edges) cuts.push_back(g.edge_name(e));
  return nlohmann::json{{"criterion", 1},
                        {"n", n},
                        {"glue_vertex", g.name(c.glue)},
                        {"center", g.name(c.center)},
                        {"cut_vertex", g.name(c.cut_vertex)},
                        {"flower", names_of(g, c.flower)},
                        {"rest", names_of(g, c.rest)},
                        {"cut_edges", cuts},
                        {"conclusion", conclusion(n)}}
      .dump();
}

std::string certificate_json(const FiniteGraph& g, int n, const Criterion2Certificate& c) {
  return nlohmann::json{{"criterion", 2},
                        {"n", n},
                        {"edge", g.edge_name(c.edge)},
                        {"segment", names_of(g, c.segment)},
                        {"segment_length", c.segment_length},
                        {"conclusion", conclusion(n)}}
      .dump();
}

}  // namespace gbg
