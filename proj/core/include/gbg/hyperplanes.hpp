#pragma once

#include <string>
#include <vector>

#include "gbg/complex.hpp"

namespace gbg {

struct Hyperplane {
  EdgeId label = 0;
  /// Particles of any dual edge's base on each component of g minus the
  /// closed label edge (components in least-vertex order).
  std::vector<int> signature;
  std::vector<std::size_t> dual_edges;  // 1-cube indices, increasing
  /// 0-cubes of the two combinatorial hyperplanes: a particle parked at the
  /// lower-index (resp. higher-index) end of the label.
  std::vector<std::size_t> lo_side;
  std::vector<std::size_t> hi_side;
};

struct HyperplaneSet {
  std::vector<Hyperplane> planes;        // ordered by (label, signature)
  std::vector<std::size_t> edge_class;   // plane index of each 1-cube
};

/// Components of g with the closed edge e removed, in g's vertex indexing.
std::vector<VertexMask> closed_edge_components(const FiniteGraph& g, EdgeId e);

/// Hyperplanes of a full UC_n: two 1-cubes are parallel iff they carry the
/// same label e and their bases lie in the same component of
/// UC_{n-1}(g minus closed e), i.e. have the same particle signature there.
HyperplaneSet hyperplanes(const CubeComplex& cc);

/// Independent computation: transitive closure of "opposite in a square".
/// Class ids are numbered by least 1-cube index.
std::vector<std::size_t> propagation_classes(const CubeComplex& cc);

/// The propagation partition, reported as hyperplanes. Throws
/// InvariantViolation if it disagrees with hyperplanes(cc).
HyperplaneSet hyperplanes_by_propagation(const CubeComplex& cc);

bool same_partition(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b);

/// Checks that each side of `h` is isomorphic (particle at the label end
/// removed) to the matching component of UC_{n-1}(g minus closed e), built
/// independently. Requires a full complex.
bool sides_match_cut_component(const CubeComplex& cc, const Hyperplane& h);

struct OsculationWitness {
  std::size_t vertex = 0;          // 0-cube index
  std::size_t first = 0, second = 0;  // 1-cube indices
  bool direct = false;             // both edges point the same way at the vertex
};

struct InterOsculationWitness {
  std::size_t plane_a = 0, plane_b = 0;
  std::size_t vertex = 0;
  std::size_t first = 0, second = 0;
};

struct SpecialnessReport {
  bool two_sided = true;
  std::vector<std::size_t> two_sided_failures;   // square indices
  std::vector<std::size_t> self_intersecting;    // square indices
  std::vector<OsculationWitness> self_osculating;
  std::vector<InterOsculationWitness> inter_osculating;

  bool special() const {
    return two_sided && self_intersecting.empty() && self_osculating.empty() &&
           inter_osculating.empty();
  }
};

SpecialnessReport check_special(const CubeComplex& cc, const HyperplaneSet& hs);
SpecialnessReport check_special(const CubeComplex& cc);

std::string hyperplane_report_json(const CubeComplex& cc, const HyperplaneSet& hs,
                                   const SpecialnessReport& special);

}  // namespace gbg
