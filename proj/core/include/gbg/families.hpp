#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gbg/graph.hpp"

namespace gbg::families {

/// Path v1 - v2 - ... - vm.
FiniteGraph segment(int vertices);
/// Cycle v1 - ... - vm - v1, m >= 3.
FiniteGraph cycle(int vertices);
/// Star with center "c"; prong i has lengths[i] edges, vertices "p<i>_<j>".
FiniteGraph star(const std::vector<int>& lengths);
/// R_k with every prong of length `length`.
FiniteGraph radial(int k, int length = 1);

/// The H-shaped tree: path a - x - y - b with leaves a1, a2 on a and b1, b2
/// on b. `leaf_subdivision` extra vertices go on each of the four leaf edges.
FiniteGraph gamma_h(int leaf_subdivision = 0);
/// gamma_h plus the edge {a1, b1}. With `primed`, the edges a-a2 and b-b2
/// carry four extra vertices each.
FiniteGraph gamma_a(bool primed = false);
/// gamma_a plus the edge {a2, b2}.
FiniteGraph gamma_theta();
/// Q-shaped graph for n particles: a cycle c - p - q1 - ... - q(n-1) - c of
/// length n+1 and a tail c - t1 - ... - t(n-1). The cut edge is {c, p}.
FiniteGraph gamma_q(int n);

/// Generalised theta: poles p, q joined by m+1 routes with `interior`
/// vertices each.
FiniteGraph theta(int m, int interior);
/// Cycle of length `cycle_length` with segments glued on; each entry is
/// (cycle position, segment length).
FiniteGraph sun(int cycle_length, const std::vector<std::pair<int, int>>& segments);
/// Flower with center "c": petals are cycles through c of the given lengths,
/// prongs are segments of the given lengths.
FiniteGraph flower(const std::vector<int>& petals, const std::vector<int>& prongs);
/// Tree with two essential vertices a, b joined by a path of `middle` edges,
/// each carrying two prongs of `leaf` edges.
FiniteGraph double_star(int leaf, int middle);
/// Two triangles joined by a path of `bridge` edges.
FiniteGraph two_triangles(int bridge);
/// Disjoint union; names of `b` get `suffix` appended.
FiniteGraph disjoint_union(const FiniteGraph& a, const FiniteGraph& b, const std::string& suffix);

}  // namespace gbg::families
