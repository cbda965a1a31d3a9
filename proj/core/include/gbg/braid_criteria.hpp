#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gbg/graph.hpp"

namespace gbg {

/// Subgraphs certifying a Z^2 inside the reduced braid group.
struct Z2Witness {
  enum class Kind { two_disjoint_cycles, cycle_and_vertex, two_essential_vertices };
  Kind kind = Kind::two_disjoint_cycles;
  std::vector<VertexId> first;   // a cycle, or a single vertex
  std::vector<VertexId> second;  // a cycle, or a single vertex
};

std::string to_string(Z2Witness::Kind k);

/// First witness in the order: two disjoint cycles (n >= 2), a cycle and a
/// disjoint vertex of valence >= 3 (n >= 3), two vertices of valence >= 3
/// (n >= 4). Requires a connected graph.
std::optional<Z2Witness> z2_witness(const FiniteGraph& g, int n);

enum class BraidSize { trivial, infinite_diameter };
std::string to_string(BraidSize s);

/// Decides whether RB_n(g, S) is trivial, where S places partition[i]
/// particles on the i-th component of g (components in FiniteGraph order).
/// Infinite diameter iff some component holding >= 1 particle has a cycle,
/// or (n >= 2) some component holding >= 2 particles has a vertex of
/// valence >= 3.
BraidSize triviality_criterion(const FiniteGraph& g, int n, const std::vector<int>& partition);

}  // namespace gbg
