#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "gbg/complex.hpp"
#include "gbg/graph.hpp"

namespace gbg {

/// Symbolic description of a group. Kept simplified: trivial factors are
/// dropped, free factors of a free product are merged, products of copies
/// of Z become free abelian.
struct GroupDescriptor {
  enum class Kind { trivial, free, free_abelian, direct_product, free_product, braid_opaque };

  Kind kind = Kind::trivial;
  int rank = 0;                          // free, free_abelian
  std::vector<GroupDescriptor> factors;  // direct_product, free_product
  std::shared_ptr<const FiniteGraph> graph;  // braid_opaque
  int particles = 0;
  std::vector<int> partition;

  static GroupDescriptor trivial() { return {}; }
  static GroupDescriptor free(int rank);
  static GroupDescriptor free_abelian(int rank);
  static GroupDescriptor direct_product(std::vector<GroupDescriptor> factors);
  static GroupDescriptor free_product(std::vector<GroupDescriptor> factors);
  static GroupDescriptor braid_opaque(const FiniteGraph& g, int n, std::vector<int> partition);

  bool is_trivial() const { return kind == Kind::trivial; }
  bool is_opaque() const;
  /// Rank of the free part of a free product (or of a free group).
  int free_rank() const;
};

std::string to_string(GroupDescriptor::Kind k);
/// "1", "Z", "F10", "Z^2", "F10 * Z^2", "Z x F2", "RB4(16v,17e)".
std::string render(const GroupDescriptor& d);
std::string descriptor_json(const GroupDescriptor& d);

/// Binomial coefficient, 0 when b < 0 or a < b.
long long binomial(int a, int b);
/// Rank of B_n(R_k).
long long radial_rank(int n, int k);
/// Rank of RB_n(R_{k,r}): k - r prongs long, r prongs of length 1.
long long modified_radial_rank(int n, int k, int r);

/// Resolves reduced braid groups RB_k(h) to descriptors using, in order:
/// complement duality, the triviality lemma, one particle, cycles, radial
/// trees (sufficiently subdivided, or with one or two short prongs), and a
/// bounded search for a decomposition whose edge groups are all trivial.
/// Anything else stays braid_opaque.
class GroupResolver {
 public:
  struct Limits {
    int max_depth = 3;
    std::size_t max_configurations = 50000;
  };

  GroupResolver() = default;
  explicit GroupResolver(Limits limits) : limits_(limits) {}

  /// Product over the components of g, partition[i] particles on the i-th.
  GroupDescriptor resolve(const FiniteGraph& g, const std::vector<int>& partition);
  GroupDescriptor resolve_connected(const FiniteGraph& g, int k);

 private:
  GroupDescriptor search_decomposition(const FiniteGraph& g, int k);

  Limits limits_;
  int depth_ = 0;
  std::map<std::pair<std::vector<std::uint64_t>, int>, GroupDescriptor> memo_;
};

struct LambdaNode {
  std::vector<int> signature;  // particles on each component of the cut graph
  std::size_t size = 0;        // 0-cubes in the component
  GroupDescriptor group;
};

struct LambdaLink {
  EdgeId label = 0;
  std::vector<int> signature;  // base particles on each component of g minus closed label
  std::size_t from = 0;        // node holding the particle at the common vertex
  std::size_t to = 0;
  std::size_t dual_edges = 0;
  GroupDescriptor group;
};

/// Graph of groups from cutting UC_n(g) along all hyperplanes labelled by
/// the cut edges, together with its combinatorial prediction.
struct GraphOfGroups {
  FiniteGraph graph;
  int n = 0;
  std::vector<EdgeId> cuts;
  VertexId common = 0;
  FiniteGraph cut_graph;  // g minus the open cut edges
  std::vector<LambdaNode> nodes;      // ordered by signature
  std::vector<LambdaLink> links;      // ordered by (label, signature)
  std::vector<std::size_t> tree;      // spanning tree link indices
  std::vector<std::vector<int>> predicted_nodes;
  /// (from signature, to signature, label) -> predicted number of links.
  std::map<std::tuple<std::vector<int>, std::vector<int>, EdgeId>, std::size_t> predicted_links;
  bool shape_agrees = false;
  bool groups_resolved = false;
};

struct DecomposeOptions {
  bool resolve_groups = true;
  /// Also compare the cut complex with UC_n of the cut graph and each
  /// hyperplane side with UC_{n-1} of the closed-edge complement.
  bool verify = false;
  /// Leave node groups unresolved once some link group is non-trivial.
  bool stop_at_nontrivial_link = false;
};

/// Cut edges must be distinct and share a common vertex. Throws
/// ValidationError otherwise and InvariantViolation if the actual shape
/// differs from the prediction.
GraphOfGroups decompose(const FiniteGraph& g, int n, const std::vector<EdgeId>& cuts,
                        DecomposeOptions options = {}, GroupResolver* resolver = nullptr);

/// The common vertex of the cut edges (for one edge, its lower-index end).
VertexId common_vertex(const FiniteGraph& g, const std::vector<EdgeId>& cuts);

/// True iff L is K with one particle moved from component cv to component
/// ci (or the reverse); with cv == ci, iff K == L.
bool predict_adjacency(const std::vector<int>& K, const std::vector<int>& L, std::size_t cv,
                       std::size_t ci);

/// Number of links labelled `edge` from K to L: placements of the n - 1
/// other particles on g minus both ends of the edge consistent with K.
std::size_t predict_link_count(const FiniteGraph& g, const std::vector<EdgeId>& cuts, EdgeId edge,
                               const std::vector<int>& K, const std::vector<int>& L);

/// Nodes and links of the prediction for the given cut.
std::vector<std::vector<int>> predict_nodes(const FiniteGraph& g, int n, const std::vector<EdgeId>& cuts);

struct AssembledGroup {
  bool symbolic = false;
  GroupDescriptor group;  // set when every edge group is trivial
  std::string text;
};

/// Trivial edge groups: free product of the vertex groups with one Z per
/// link outside the spanning tree. Otherwise a symbolic HNN / graph-of-groups
/// string. Throws Unsupported when an opaque group meets a non-trivial edge
/// group (the monomorphisms are unavailable).
AssembledGroup assemble(const GraphOfGroups& gog);

struct FreeSplitting {
  std::size_t link = 0;
  std::string reason;
  std::string text;  // "H * Z"
};

/// A link with trivial group that does not disconnect Lambda, or a trivial
/// bridge cutting off a side whose group has a free factor, exhibits
/// pi_1 = H * Z.
std::optional<FreeSplitting> find_free_splitting(const GraphOfGroups& gog);

std::string gog_json(const GraphOfGroups& gog);
std::string lambda_to_dot(const GraphOfGroups& gog);

struct Criterion1Certificate {
  VertexId glue = 0;         // the vertex shared by the flower and the rest
  VertexId center = 0;       // center of the flower
  VertexId cut_vertex = 0;   // after normalisation
  VertexMask flower = 0;     // vertices of the (normalised) flower part
  VertexMask rest = 0;       // vertices of the (normalised) other part
  std::vector<EdgeId> cut_edges;
};

struct Criterion2Certificate {
  EdgeId edge = 0;
  VertexMask segment = 0;   // the segment component of g minus the closed edge
  int segment_length = 0;
};

/// Searches vertices in index order for a split of g into a non-segment
/// flower and a connected non-segment graph meeting in one vertex that is
/// the flower's center or one of its leaves. n >= 2.
std::optional<Criterion1Certificate> free_product_criterion_1(const FiniteGraph& g, int n);

/// First edge e (index order) with g minus open e connected, g minus closed
/// e disconnected, and a component of the latter a segment of length >= n-2.
/// Requires g to pass check_subdivision(g, n).
std::optional<Criterion2Certificate> free_product_criterion_2(const FiniteGraph& g, int n);

std::string certificate_json(const FiniteGraph& g, int n, const Criterion1Certificate& c);
std::string certificate_json(const FiniteGraph& g, int n, const Criterion2Certificate& c);

}  // namespace gbg
