#pragma once

#include <string>
#include <vector>

#include "gbg/graph.hpp"

namespace gbg {

/// Maximal path whose interior vertices all have valence 2. A branch on a
/// component that is a bare cycle has no essential endpoint; then `closed`
/// is set and `vertices` lists the cycle once.
struct Branch {
  std::vector<VertexId> vertices;  // endpoint .. endpoint
  EdgeMask edges = 0;
  bool closed = false;

  int length() const { return popcount(edges); }
};

/// All topological branches, each once, in canonical order.
std::vector<Branch> topological_branches(const FiniteGraph& g);

struct SubdivisionViolation {
  enum class Kind { short_path, short_cycle };
  Kind kind = Kind::short_path;
  std::vector<VertexId> vertices;  // the offending path or cycle
  EdgeMask edges = 0;
  int length = 0;
  int required = 0;
};

struct SubdivisionReport {
  bool ok = true;
  std::vector<SubdivisionViolation> violations;
};

/// Checks the two path/cycle length conditions under which the discrete
/// configuration space UC_n is a deformation retract of the topological one:
/// paths between distinct vertices of valence != 2 have length >= n-1 and
/// every embedded cycle has length >= n+1.
SubdivisionReport check_subdivision(const FiniteGraph& g, int n);

/// Repeatedly inserts n valence-2 vertices into every edge of every offending
/// branch until check_subdivision passes. New vertices on edge {u,v} are
/// named "u|v#i", i = 1..n, running from u to v.
FiniteGraph sufficient_subdivision(const FiniteGraph& g, int n);

/// Subdivides exactly the edges in `edges`, inserting `count` vertices each.
FiniteGraph subdivide_edges(const FiniteGraph& g, EdgeMask edges, int count);

std::string describe(const FiniteGraph& g, const SubdivisionViolation& v);

}  // namespace gbg
