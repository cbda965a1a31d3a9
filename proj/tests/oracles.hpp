#pragma once

// Brute-force reference computations that share no code with the library
// beyond the graph container.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include <gmpxx.h>

#include "gbg/graph.hpp"

namespace oracle {

using gbg::FiniteGraph;

/// A k-cube: sorted stationary vertices plus sorted moving edges.
struct NaiveCube {
  std::vector<unsigned> stationary;
  std::vector<unsigned> moving;
  bool operator<(const NaiveCube& o) const {
    return std::tie(stationary, moving) < std::tie(o.stationary, o.moving);
  }
  bool operator==(const NaiveCube& o) const = default;
};

inline void subsets(unsigned n, unsigned k, std::vector<unsigned>& cur, unsigned start,
                    std::vector<std::vector<unsigned>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (unsigned i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, cur, i + 1, out);
    cur.pop_back();
  }
}

inline std::vector<std::vector<unsigned>> subsets(unsigned n, unsigned k) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur;
  if (k <= n) subsets(n, k, cur, 0, out);
  return out;
}

/// Every cube of UC_n(g), dimension by dimension.
inline std::vector<std::vector<NaiveCube>> cubes(const FiniteGraph& g, unsigned n) {
  std::vector<std::vector<NaiveCube>> out;
  const unsigned V = g.vertex_count();
  const unsigned E = g.edge_count();
  for (unsigned k = 0; k <= n; ++k) {
    std::vector<NaiveCube> level;
    for (const auto& es : subsets(E, k)) {
      std::set<unsigned> used;
      bool disjoint = true;
      for (unsigned e : es) {
        disjoint = disjoint && used.insert(g.edge(e).u).second && used.insert(g.edge(e).v).second;
      }
      if (!disjoint) continue;
      std::vector<unsigned> free_vertices;
      for (unsigned v = 0; v < V; ++v) {
        if (!used.count(v)) free_vertices.push_back(v);
      }
      for (const auto& pick : subsets(free_vertices.size(), n - k)) {
        NaiveCube c;
        for (unsigned i : pick) c.stationary.push_back(free_vertices[i]);
        c.moving = es;
        level.push_back(c);
      }
    }
    if (level.empty()) break;
    std::sort(level.begin(), level.end());
    out.push_back(std::move(level));
  }
  return out;
}

inline std::vector<std::size_t> cube_counts(const FiniteGraph& g, unsigned n) {
  std::vector<std::size_t> out;
  for (const auto& level : cubes(g, n)) out.push_back(level.size());
  return out;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void join(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
  std::size_t classes() {
    std::set<std::size_t> roots;
    for (std::size_t i = 0; i < parent.size(); ++i) roots.insert(find(i));
    return roots.size();
  }
};

/// Components of the configuration graph: n-subsets, one particle moving
/// along one edge at a time.
inline std::size_t component_count(const FiniteGraph& g, unsigned n) {
  const auto configs = subsets(g.vertex_count(), n);
  std::map<std::vector<unsigned>, std::size_t> index;
  for (std::size_t i = 0; i < configs.size(); ++i) index[configs[i]] = i;
  UnionFind uf(configs.size());
  for (std::size_t i = 0; i < configs.size(); ++i) {
    for (const auto& e : g.edges()) {
      auto c = configs[i];
      auto it = std::find(c.begin(), c.end(), e.u);
      if (it == c.end() || std::find(c.begin(), c.end(), e.v) != c.end()) continue;
      *it = e.v;
      std::sort(c.begin(), c.end());
      uf.join(i, index.at(c));
    }
  }
  return uf.classes();
}

/// Ways to put n identical particles in boxes of the given capacities.
inline std::size_t partitions(int n, const std::vector<int>& caps, std::size_t from = 0) {
  if (from == caps.size()) return n == 0 ? 1 : 0;
  std::size_t total = 0;
  for (int p = 0; p <= std::min(n, caps[from]); ++p) total += partitions(n - p, caps, from + 1);
  return total;
}

inline long long binom(long long a, long long b) {
  if (b < 0 || a < b) return 0;
  long long r = 1;
  for (long long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

/// Rank of a dense rational matrix by Gaussian elimination.
inline std::size_t rank(std::vector<std::vector<mpq_class>> m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      const mpq_class f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

/// Rational Betti numbers of UC_n(g) from the naive cube lists. Orientation:
/// faces alternate in sign along the moving edges in increasing order.
inline std::vector<long long> betti(const FiniteGraph& g, unsigned n) {
  const auto all = cubes(g, n);
  std::vector<std::size_t> ranks(all.size() + 1, 0);
  for (std::size_t k = 1; k < all.size(); ++k) {
    std::map<NaiveCube, std::size_t> lower;
    for (std::size_t i = 0; i < all[k - 1].size(); ++i) lower[all[k - 1][i]] = i;
    std::vector<std::vector<mpq_class>> m(all[k - 1].size(), std::vector<mpq_class>(all[k].size(), 0));
    for (std::size_t j = 0; j < all[k].size(); ++j) {
      const auto& c = all[k][j];
      for (std::size_t i = 0; i < c.moving.size(); ++i) {
        const auto& e = g.edge(c.moving[i]);
        const int sign = i % 2 == 0 ? 1 : -1;
        for (auto [end, s] : {std::pair{std::max(e.u, e.v), sign}, std::pair{std::min(e.u, e.v), -sign}}) {
          NaiveCube f;
          f.stationary = c.stationary;
          f.stationary.push_back(end);
          std::sort(f.stationary.begin(), f.stationary.end());
          f.moving = c.moving;
          f.moving.erase(f.moving.begin() + i);
          m[lower.at(f)][j] += s;
        }
      }
    }
    ranks[k] = rank(m);
  }
  std::vector<long long> b;
  for (std::size_t k = 0; k < all.size(); ++k) {
    b.push_back(static_cast<long long>(all[k].size() - ranks[k] - ranks[k + 1]));
  }
  return b;
}

}  // namespace oracle
