#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gbg/graph.hpp"

namespace gbg {

/// A cube of UC_n: stationary particles on `base`, one particle sliding
/// along each edge of `moving`. A 0-cube is a configuration.
struct Cube {
  VertexMask base = 0;
  EdgeMask moving = 0;

  int dim() const { return popcount(moving); }
  friend bool operator==(const Cube&, const Cube&) = default;
};

/// Lexicographic order on (base, moving) read as sorted index lists. Only
/// meaningful between cubes of the same dimension and particle count.
bool cube_less(const Cube& a, const Cube& b);

/// Every vertex touched by the cube: base plus both ends of each moving edge.
VertexMask cube_support(const FiniteGraph& g, const Cube& c);

/// Graded cube sets of (a subcomplex of) UC_n(graph). Cubes of each
/// dimension are kept sorted by cube_less, so indices are stable and
/// lookups are binary searches.
class CubeComplex {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  CubeComplex(FiniteGraph graph, int n, int built_dim, bool capped,
              std::vector<std::vector<Cube>> cubes);

  const FiniteGraph& graph() const { return graph_; }
  int particles() const { return n_; }
  /// Highest dimension that was enumerated.
  int built_dim() const { return built_dim_; }
  /// True if cubes above built_dim() may exist but were not enumerated.
  bool capped() const { return capped_; }
  int top_dim() const { return static_cast<int>(cubes_.size()) - 1; }

  const std::vector<Cube>& cubes(int dim) const;
  std::size_t count(int dim) const { return cubes(dim).size(); }
  std::vector<std::size_t> counts() const;

  std::size_t index_of(const Cube& c) const;
  bool contains(const Cube& c) const { return index_of(c) != npos; }

  /// Label of the k-th 1-cube.
  EdgeId label(std::size_t edge_index) const;
  /// Endpoints of the k-th 1-cube: particle at the lower-index end first.
  std::pair<std::size_t, std::size_t> endpoints(std::size_t edge_index) const;

  /// 1-cubes at each 0-cube, by index.
  std::vector<std::vector<std::size_t>> incident_edges() const;

 private:
  FiniteGraph graph_;
  int n_;
  int built_dim_;
  bool capped_;
  std::vector<std::vector<Cube>> cubes_;
};

/// The face of `c` obtained by parking the particle on moving edge `e` at
/// its endpoint `end`.
Cube face(const Cube& c, EdgeId e, VertexId end);

/// All 2k faces of a k-cube in a fixed order: for each moving edge in
/// increasing index, the face at its lower-index end then the higher one.
std::vector<Cube> faces(const FiniteGraph& g, const Cube& c);

/// UC_n(g) up to dimension min(max_dim, n). max_dim < 0 means no cap.
CubeComplex build_uc(const FiniteGraph& g, int n, int max_dim = -1);

/// Checks closure under faces and the 1-cube endpoint condition; throws
/// InvariantViolation with the first offending cube.
void verify_complex(const CubeComplex& cc);

struct ComplexComponent {
  std::vector<std::size_t> vertices;  // 0-cube indices, increasing
  std::vector<int> signature;         // particles per component of the partition graph
};

/// Connected components of the 1-skeleton, ordered by signature. The
/// signature counts particles on each component of `partition_graph`
/// (which must share the vertex set of cc.graph()); by default the
/// complex's own graph.
std::vector<ComplexComponent> components(const CubeComplex& cc,
                                         const FiniteGraph* partition_graph = nullptr);

/// Particles of `config` on each component in `comps`.
std::vector<int> signature_of(VertexMask config, const std::vector<VertexMask>& comps);

/// All vectors (p_i) with sum n and 0 <= p_i <= capacity[i], in
/// lexicographic order.
std::vector<std::vector<int>> bounded_partitions(int n, const std::vector<int>& capacity);
/// Number of such vectors.
std::size_t bounded_partition_count(int n, const std::vector<int>& capacity);

/// Alternating sum of cube counts. Throws ValidationError on a capped
/// complex.
long long euler_characteristic(const CubeComplex& cc);

/// Verifies that S -> V \ S is a label-preserving isomorphism
/// UC_n(g) -> UC_{|V|-n}(g) on every dimension and returns the 0-cube map.
/// Throws InvariantViolation if the check fails.
std::vector<std::size_t> complement_isomorphism(const FiniteGraph& g, int n);

/// Removes every cube having a 1-dimensional face in one of the given edge
/// classes. `edge_class[i]` is the class id of the i-th 1-cube; `cut`
/// lists the class ids to cut. Throws ValidationError if two cut classes
/// cross in a square.
CubeComplex cut_along(const CubeComplex& cc, const std::vector<std::size_t>& edge_class,
                      const std::vector<std::size_t>& cut);

/// True if `a` and `b` have the same cubes once edges are matched by their
/// endpoint names (the graphs must share vertex names and order).
bool same_cubes(const CubeComplex& a, const CubeComplex& b);

std::string complex_to_dot(const CubeComplex& cc);
std::string cube_counts_json(const CubeComplex& cc);
std::string configuration_name(const FiniteGraph& g, VertexMask config);

}  // namespace gbg
