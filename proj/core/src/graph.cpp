#include "gbg/graph.hpp"

#include <algorithm>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "gbg/errors.hpp"

namespace gbg {

VertexId FiniteGraph::add_vertex(std::string name) {
  if (names_.size() >= kMaxVertices) {
    throw ValidationError("graph exceeds " + std::to_string(kMaxVertices) +
                          " vertices");
  }
  if (index_.contains(name)) {
    throw ValidationError("duplicate vertex id '" + name + "'");
  }
  const auto id = static_cast<VertexId>(names_.size());
  index_.emplace(name, id);
  names_.push_back(std::move(name));
  adjacency_.push_back(0);
  return id;
}

EdgeId FiniteGraph::add_edge(VertexId a, VertexId b) {
  if (a >= names_.size() || b >= names_.size()) {
    throw ValidationError("edge references unknown vertex");
  }
  if (a == b) {
    throw ValidationError("loop at vertex '" + names_[a] + "'");
  }
  if ((adjacency_[a] & bit(b)) != 0) {
    throw ValidationError("duplicate edge ['" + names_[a] + "','" + names_[b] +
                          "']");
  }
  if (edges_.size() >= kMaxEdges) {
    throw ValidationError("graph exceeds " + std::to_string(kMaxEdges) +
                          " edges");
  }
  edges_.push_back({a, b});
  adjacency_[a] |= bit(b);
  adjacency_[b] |= bit(a);
  return static_cast<EdgeId>(edges_.size() - 1);
}

EdgeId FiniteGraph::add_edge(std::string_view a, std::string_view b) {
  auto ia = find_vertex(a);
  auto ib = find_vertex(b);
  if (!ia || !ib) {
    throw ValidationError("edge ['" + std::string(a) + "','" + std::string(b) +
                          "'] references unknown vertex '" +
                          std::string(!ia ? a : b) + "'");
  }
  return add_edge(*ia, *ib);
}

std::optional<VertexId> FiniteGraph::find_vertex(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VertexId FiniteGraph::vertex(std::string_view name) const {
  auto v = find_vertex(name);
  if (!v) throw ValidationError("unknown vertex '" + std::string(name) + "'");
  return *v;
}

std::optional<EdgeId> FiniteGraph::find_edge(VertexId a, VertexId b) const {
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    const Edge& ed = edges_[e];
    if ((ed.u == a && ed.v == b) || (ed.u == b && ed.v == a)) return e;
  }
  return std::nullopt;
}

EdgeId FiniteGraph::edge_between(std::string_view a, std::string_view b) const {
  auto e = find_edge(vertex(a), vertex(b));
  if (!e) {
    throw ValidationError("no edge ['" + std::string(a) + "','" +
                          std::string(b) + "']");
  }
  return *e;
}

std::string FiniteGraph::edge_name(EdgeId e) const {
  const Edge& ed = edge(e);
  return names_[ed.u] + ":" + names_[ed.v];
}

VertexMask FiniteGraph::all_vertices() const {
  return names_.size() == 64 ? ~VertexMask{0} : bit(names_.size()) - 1;
}

EdgeMask FiniteGraph::all_edges() const {
  return edges_.size() == 64 ? ~EdgeMask{0} : (EdgeMask{1} << edges_.size()) - 1;
}

EdgeMask FiniteGraph::edges_touching(VertexMask m) const {
  EdgeMask out = 0;
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    if ((edges_[e].mask() & m) != 0) out |= EdgeMask{1} << e;
  }
  return out;
}

EdgeMask FiniteGraph::edges_within(VertexMask m) const {
  EdgeMask out = 0;
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    if ((edges_[e].mask() & ~m) == 0) out |= EdgeMask{1} << e;
  }
  return out;
}

std::vector<VertexMask> components_of(const FiniteGraph& g, VertexMask within,
                                      EdgeMask usable) {
  std::vector<VertexMask> adj(g.vertex_count(), 0);
  for_each_bit(usable, [&](std::uint32_t e) {
    const Edge& ed = g.edge(e);
    if ((ed.mask() & ~within) != 0) return;
    adj[ed.u] |= bit(ed.v);
    adj[ed.v] |= bit(ed.u);
  });
  std::vector<VertexMask> out;
  VertexMask left = within;
  while (left != 0) {
    VertexMask comp = bit(lowest(left));
    VertexMask frontier = comp;
    while (frontier != 0) {
      VertexMask next = 0;
      for_each_bit(frontier, [&](std::uint32_t v) { next |= adj[v]; });
      next &= ~comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    left &= ~comp;
  }
  return out;
}

std::vector<VertexMask> FiniteGraph::components() const {
  return components_of(*this, all_vertices(), all_edges());
}

bool FiniteGraph::connected() const { return components().size() <= 1; }

int FiniteGraph::cycle_rank() const {
  return static_cast<int>(edges_.size()) - static_cast<int>(names_.size()) +
         static_cast<int>(components().size());
}

FiniteGraph FiniteGraph::induced(VertexMask keep) const {
  FiniteGraph out;
  std::vector<VertexId> remap(names_.size(), 0);
  for (VertexId v = 0; v < names_.size(); ++v) {
    if ((keep & bit(v)) != 0) remap[v] = out.add_vertex(names_[v]);
  }
  for (const Edge& e : edges_) {
    if ((e.mask() & ~keep) == 0) out.add_edge(remap[e.u], remap[e.v]);
  }
  return out;
}

FiniteGraph FiniteGraph::with_edges(EdgeMask keep) const {
  FiniteGraph out;
  for (const auto& n : names_) out.add_vertex(n);
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    if ((keep >> e) & 1U) out.add_edge(edges_[e].u, edges_[e].v);
  }
  return out;
}

std::vector<std::pair<VertexId, VertexId>> FiniteGraph::edge_keys() const {
  std::vector<std::pair<VertexId, VertexId>> keys;
  keys.reserve(edges_.size());
  for (const Edge& e : edges_) keys.emplace_back(e.lo(), e.hi());
  std::sort(keys.begin(), keys.end());
  return keys;
}

namespace {
void require_edge(const FiniteGraph& g, EdgeId e) {
  if (e >= g.edge_count()) {
    throw ValidationError("edge index " + std::to_string(e) +
                          " is not an edge of the graph");
  }
}
}  // namespace

FiniteGraph remove_open_edge(const FiniteGraph& g, EdgeId e) {
  require_edge(g, e);
  return g.with_edges(g.all_edges() & ~(EdgeMask{1} << e));
}

FiniteGraph remove_open_edges(const FiniteGraph& g, EdgeMask edges) {
  if ((edges & ~g.all_edges()) != 0) {
    throw ValidationError("edge set contains edges not in the graph");
  }
  return g.with_edges(g.all_edges() & ~edges);
}

FiniteGraph remove_closed_edge(const FiniteGraph& g, EdgeId e) {
  require_edge(g, e);
  return g.induced(g.all_vertices() & ~g.edge(e).mask());
}

FiniteGraph parse_graph(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& err) {
    throw ValidationError(std::string("graph JSON: ") + err.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges")) {
    throw ValidationError("graph JSON must be an object with 'vertices' and 'edges'");
  }
  const auto& vs = doc["vertices"];
  const auto& es = doc["edges"];
  if (!vs.is_array() || !es.is_array()) {
    throw ValidationError("'vertices' and 'edges' must be arrays");
  }
  FiniteGraph g;
  for (const auto& v : vs) {
    if (!v.is_string()) throw ValidationError("vertex ids must be strings");
    g.add_vertex(v.get<std::string>());
  }
  for (const auto& e : es) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
      throw ValidationError("each edge must be a pair of vertex-id strings");
    }
    g.add_edge(e[0].get<std::string>(), e[1].get<std::string>());
  }
  return g;
}

FiniteGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open graph file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::string graph_to_json(const FiniteGraph& g) {
  nlohmann::ordered_json doc;
  doc["vertices"] = g.names();
  auto edges = nlohmann::ordered_json::array();
  for (const Edge& e : g.edges()) edges.push_back({g.name(e.u), g.name(e.v)});
  doc["edges"] = std::move(edges);
  return doc.dump();
}

std::string graph_to_dot(const FiniteGraph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out << "  \"" << g.name(v) << "\"";
    if (g.degree(v) >= 3) out << " [shape=box, style=filled, fillcolor=gold]";
    out << ";\n";
  }
  for (const Edge& e : g.edges()) {
    out << "  \"" << g.name(e.u) << "\" -- \"" << g.name(e.v) << "\";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace gbg
