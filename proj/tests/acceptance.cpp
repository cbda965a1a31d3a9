// Acceptance suite: one PASS/FAIL line per criterion, exact integer checks.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gbg/classify.hpp"
#include "gbg/complex.hpp"
#include "gbg/errors.hpp"
#include "gbg/families.hpp"
#include "gbg/gog.hpp"
#include "gbg/homology.hpp"
#include "gbg/hyperplanes.hpp"
#include "gbg/subdivision.hpp"
#include "helpers.hpp"
#include "oracles.hpp"
#include "property_graphs.hpp"

using namespace gbg;
namespace fam = gbg::families;

namespace {

/// Collects failures; a criterion passes when nothing was recorded.
class Checker {
 public:
  template <typename A, typename B>
  void equal(const A& got, const B& want, const std::string& what) {
    ++checks_;
    if (!(got == want)) {
      std::ostringstream msg;
      msg << what << ": got " << show(got) << ", want " << show(want);
      failures_.push_back(msg.str());
    }
  }
  void that(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) failures_.push_back(what);
  }
  void note(const std::string& s) { notes_.push_back(s); }

  bool ok() const { return failures_.empty(); }
  int checks() const { return checks_; }
  const std::vector<std::string>& failures() const { return failures_; }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  template <typename T>
  static std::string show(const T& v) {
    std::ostringstream out;
    if constexpr (requires { v.begin(); } && !std::is_convertible_v<T, std::string>) {
      out << "(";
      bool first = true;
      for (const auto& x : v) {
        out << (first ? "" : ",") << x;
        first = false;
      }
      out << ")";
    } else {
      out << v;
    }
    return out.str();
  }

  int checks_ = 0;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

/// Every (graph, n) whose complex was built by criteria 1-10.
struct Registry {
  std::vector<std::pair<FiniteGraph, int>> items;
  std::set<std::pair<std::string, int>> seen;

  void add(const FiniteGraph& g, int n) {
    if (seen.insert({graph_to_json(g), n}).second) items.emplace_back(g, n);
  }
};

Registry registry;

CubeComplex built(const FiniteGraph& g, int n, int max_dim = -1) {
  registry.add(g, n);
  return build_uc(g, n, max_dim);
}

std::vector<long long> betti_of(const FiniteGraph& g, int n) {
  const HomologyProfile h = homology(built(g, n));
  return h.betti;
}

/// Betti numbers with the trailing zeros dropped.
std::vector<long long> trimmed(std::vector<long long> b) {
  while (!b.empty() && b.back() == 0) b.pop_back();
  return b;
}

GraphOfGroups decomposed(const FiniteGraph& g, int n, const std::vector<EdgeId>& cuts,
                         DecomposeOptions options = {}) {
  registry.add(g, n);
  return decompose(g, n, cuts, options);
}

std::string tag(const std::string& name, int n) { return name + " n=" + std::to_string(n); }

// 1
void component_counts(Checker& c) {
  const std::vector<std::pair<std::string, FiniteGraph>> graphs{
      {"segment+cycle", fam::disjoint_union(fam::segment(3), fam::cycle(4), "'")},
      {"R3+segment", fam::disjoint_union(fam::radial(3), fam::segment(3), "'")},
      {"segment+cycle+R3",
       fam::disjoint_union(fam::disjoint_union(fam::segment(3), fam::cycle(3), "'"), fam::radial(3), "\"")},
      {"theta+R3+cycle",
       fam::disjoint_union(fam::disjoint_union(fam::theta(2, 1), fam::radial(3), "'"), fam::cycle(5), "\"")}};
  for (const auto& [name, g] : graphs) {
    const int k = static_cast<int>(g.components().size());
    for (int n = 2; n <= 3; ++n) {
      const auto comps = components(built(g, n, 2));
      const auto want = oracle::binom(n + k - 1, k - 1);
      c.equal(static_cast<long long>(comps.size()), want, tag(name, n) + " components");
      c.equal(comps.size(), oracle::component_count(g, n), tag(name, n) + " brute force");
      std::vector<std::vector<int>> sigs;
      for (const auto& comp : comps) sigs.push_back(comp.signature);
      std::vector<int> caps;
      for (VertexMask m : g.components()) caps.push_back(popcount(m));
      c.that(sigs == bounded_partitions(n, caps), tag(name, n) + " signatures");
    }
  }
}

// 2
void hyperplane_counts(Checker& c) {
  const std::vector<std::pair<std::string, FiniteGraph>> graphs{
      {"gamma_h", fam::gamma_h()},      {"gamma_theta", fam::gamma_theta()}, {"gamma_q3", fam::gamma_q(3)},
      {"theta2", fam::theta(2, 1)},     {"sun", fam::sun(6, {{0, 2}})},      {"two_triangles", fam::two_triangles(1)},
      {"R4", fam::radial(4, 2)}};
  int unbounded = 0;
  int bounded = 0;
  for (const auto& [name, g] : graphs) {
    for (int n = 2; n <= 4 && n < static_cast<int>(g.vertex_count()); ++n) {
      const CubeComplex cc = built(g, n);
      const HyperplaneSet prop = hyperplanes_by_propagation(cc);
      for (EdgeId e = 0; e < g.edge_count(); ++e) {
        long long count = 0;
        for (const auto& h : prop.planes) count += h.label == e ? 1 : 0;
        std::vector<int> caps;
        for (VertexMask m : closed_edge_components(g, e)) caps.push_back(popcount(m));
        const int k = static_cast<int>(caps.size());
        const bool roomy = std::all_of(caps.begin(), caps.end(), [&](int cap) { return cap >= n - 1; });
        const std::string what = tag(name, n) + " e=" + g.edge_name(e);
        if (roomy) {
          ++unbounded;
          c.equal(count, oracle::binom(n + k - 2, k - 1), what);
        } else {
          ++bounded;
          c.equal(count, static_cast<long long>(oracle::partitions(n - 1, caps)), what + " (bounded)");
        }
      }
    }
  }
  c.that(unbounded >= 10, "fewer than 10 unbounded triples");
  c.note(std::to_string(unbounded) + " formula triples, " + std::to_string(bounded) + " capacity-bounded");
}

// 3
void cut_graph_equivalence(Checker& c) {
  struct Case {
    std::string name;
    FiniteGraph g;
    int n;
    std::vector<std::pair<std::string, std::string>> cuts;
  };
  const std::vector<Case> cases{
      {"gamma_h", fam::gamma_h(), 2, {{"x", "y"}}},
      {"gamma_h", fam::gamma_h(), 3, {{"x", "y"}}},
      {"gamma_h", fam::gamma_h(), 4, {{"x", "y"}}},
      {"gamma_h", fam::gamma_h(), 3, {{"a", "a1"}, {"a", "a2"}}},
      {"gamma_h''", fam::gamma_h(4), 4, {{"x", "y"}}},
      {"gamma_a", fam::gamma_a(), 3, {{"a1", "b1"}}},
      {"gamma_a'", fam::gamma_a(true), 4, {{"a1", "b1"}}},
      {"gamma_theta", fam::gamma_theta(), 4, {{"a2", "b2"}}},
      {"gamma_q2", fam::gamma_q(2), 2, {{"c", "p"}}},
      {"gamma_q3", fam::gamma_q(3), 3, {{"c", "p"}}},
      {"gamma_q4", fam::gamma_q(4), 4, {{"c", "p"}}},
      {"star", fam::star({3, 3, 3, 3}), 3, {{"c", "p1_1"}, {"c", "p2_1"}, {"c", "p3_1"}}},
      {"sun", fam::sun(6, {{0, 2}}), 3, {{"v1", "v2"}}},
  };
  for (const auto& k : cases) {
    std::vector<EdgeId> cuts;
    for (const auto& [a, b] : k.cuts) cuts.push_back(k.g.edge_between(a, b));
    DecomposeOptions opts;
    opts.resolve_groups = false;
    opts.verify = true;
    try {
      const GraphOfGroups gog = decomposed(k.g, k.n, cuts, opts);
      c.that(gog.shape_agrees, tag(k.name, k.n) + " shape");
    } catch (const std::exception& e) {
      c.that(false, tag(k.name, k.n) + ": " + e.what());
    }
  }
  c.note(std::to_string(cases.size()) + " decompositions");
}

// 4
void radial_formula(Checker& c) {
  int cases = 0;
  for (int n = 2; n <= 5; ++n) {
    for (int k = 3; n + k <= 8; ++k) {
      const FiniteGraph g = fam::radial(k, n + 1);
      const long long m = radial_rank(n, k);
      const std::string what = "R" + std::to_string(k) + " n=" + std::to_string(n);
      const long long explicit_m = (k - 2) * oracle::binom(n + k - 2, k - 1) - oracle::binom(n + k - 2, k - 2) + 1;
      c.equal(m, explicit_m, what + " formula");
      const GroupDescriptor group = assemble(decomposed(g, n, {0})).group;
      c.that(group.kind == GroupDescriptor::Kind::free || (m == 0 && group.is_trivial()), what + " free");
      c.equal(static_cast<long long>(group.rank), m, what + " pipeline rank");
      c.equal(trimmed(betti_of(g, n)), std::vector<long long>{1, m}, what + " betti");
      ++cases;
    }
  }
  c.note(std::to_string(cases) + " (n,k) pairs");
}

// 5
void modified_radial(Checker& c) {
  c.equal(modified_radial_rank(4, 3, 1), 3LL, "M1(4,3)");
  c.equal(modified_radial_rank(3, 3, 1), 2LL, "M1(3,3)");
  c.equal(modified_radial_rank(4, 3, 2), 1LL, "M2(4,3)");
  c.equal(betti_of(fam::star({1, 5, 5}), 4)[1], 3LL, "b1 UC4(R_{3,1})");
  c.equal(betti_of(fam::star({1, 4, 4}), 3)[1], 2LL, "b1 UC3(R_{3,1})");
  c.equal(betti_of(fam::star({1, 1, 5}), 4)[1], 1LL, "b1 UC4(R_{3,2})");

  const FiniteGraph h = fam::gamma_h(4);
  const GraphOfGroups gh = decomposed(h, 4, {h.edge_between("x", "y")});
  c.equal(render(gh.nodes.at(4).group), std::string("F3"), "G_K(4,0) on H''");
  c.equal(render(gh.nodes.at(3).group), std::string("F2"), "G_K(3,1) on H''");

  // H' is the primed A graph without its extra edge.
  const FiniteGraph a = fam::gamma_a(true);
  const FiniteGraph hp = remove_open_edge(a, a.edge_between("a1", "b1"));
  const GraphOfGroups g1 = decomposed(hp, 4, {hp.edge_between("x", "y")});
  c.equal(render(g1.nodes.at(4).group), std::string("Z"), "G_K(4,0) on H'");
  c.equal(render(g1.nodes.at(3).group), std::string("Z"), "G_K(3,1) on H'");
  c.equal(render(assemble(g1).group), std::string("F4 * Z^2"), "RB4(H')");
}

// 6
void gamma_h(Checker& c) {
  const FiniteGraph g = fam::gamma_h(4);
  const AssembledGroup a = assemble(decomposed(g, 4, {g.edge_between("x", "y")}));
  c.equal(a.text, std::string("F10 * Z^2"), "assembled");
  const HomologyProfile h = homology(built(g, 4));
  c.equal(trimmed(h.betti), std::vector<long long>{1, 12, 1}, "betti");
  c.that(h.torsion_free(), "torsion");
}

// 7
void gamma_a(Checker& c) {
  const FiniteGraph g = fam::gamma_a(true);
  const AssembledGroup a = assemble(decomposed(g, 4, {g.edge_between("a1", "b1")}));
  c.equal(a.text, std::string("F5 * Z^2"), "assembled");
  const HomologyProfile h = homology(built(g, 4));
  c.equal(trimmed(h.betti), std::vector<long long>{1, 7, 1}, "betti");
  c.that(h.torsion_free(), "torsion");
}

// 8
void unsubdivided(Checker& c) {
  c.equal(trimmed(betti_of(fam::gamma_h(), 4)), std::vector<long long>{1, 2, 1}, "H betti");
  c.equal(trimmed(betti_of(fam::gamma_a(), 4)), std::vector<long long>{1, 3, 1}, "A betti");
  c.equal(betti_of(fam::gamma_h(), 4), oracle::betti(fam::gamma_h(), 4), "H betti by rational oracle");
  c.equal(betti_of(fam::gamma_a(), 4), oracle::betti(fam::gamma_a(), 4), "A betti by rational oracle");
}

// 9
void gamma_q(Checker& c) {
  for (int n = 2; n <= 4; ++n) {
    const FiniteGraph g = fam::gamma_q(n);
    const std::string what = tag("Q", n);
    const GraphOfGroups gog = decomposed(g, n, {g.edge_between("c", "p")});
    c.equal(gog.nodes.size(), std::size_t{1}, what + " nodes");
    c.equal(gog.links.size(), static_cast<std::size_t>(n), what + " links");
    for (const auto& node : gog.nodes) c.that(node.group.is_trivial(), what + " node group");
    for (const auto& l : gog.links) {
      c.that(l.from == 0 && l.to == 0, what + " self-loop");
      c.that(l.group.is_trivial(), what + " link group");
    }
    c.equal(trimmed(betti_of(g, n)), std::vector<long long>{1, n}, what + " betti");
  }
}

// 10
void gamma_theta(Checker& c) {
  const FiniteGraph g = fam::gamma_theta();
  const GraphOfGroups gog = decomposed(g, 4, {g.edge_between("a2", "b2")});
  c.equal(gog.nodes.size(), std::size_t{1}, "nodes");
  c.equal(gog.links.size(), std::size_t{1}, "links");
  c.equal(render(gog.links.at(0).group), std::string("Z"), "edge group");
  c.equal(render(gog.nodes.at(0).group), std::string("Z^2 * Z"), "vertex group");
  const AssembledGroup a = assemble(gog);
  c.that(a.symbolic, "symbolic");
  c.equal(a.text, std::string("HNN(Z^2 * Z over Z)"), "assembled");
  const CubeComplex cc = built(g, 4);
  const HomologyProfile h = homology(cc);
  long long alt = 0;
  for (std::size_t k = 0; k < h.betti.size(); ++k) alt += (k % 2 == 0 ? 1 : -1) * h.betti[k];
  c.equal(alt, euler_characteristic(cc), "euler");
  c.equal(h.betti, oracle::betti(g, 4), "betti by rational oracle");
  c.note("b1=" + std::to_string(h.betti[1]) + " b2=" + std::to_string(h.betti[2]));
}

// 11
void specialness(Checker& c) {
  for (const auto& [g, n] : registry.items) {
    const SpecialnessReport r = check_special(build_uc(g, n));
    c.that(r.special(), "not special: " + std::to_string(g.vertex_count()) + " vertices, n=" + std::to_string(n));
    c.that(r.self_osculating.empty() && r.inter_osculating.empty() && r.self_intersecting.empty() &&
               r.two_sided_failures.empty(),
           "witness lists not empty");
  }
  c.note(std::to_string(registry.items.size()) + " complexes");
}

// 12
void properties(Checker& c) {
  std::vector<std::pair<FiniteGraph, int>> items = registry.items;
  for (const auto& [name, g] : testing::small_graphs()) {
    for (int n = 1; n <= 3; ++n) items.emplace_back(g, n);
  }
  int with_squares = 0;
  for (const auto& [g, n] : items) {
    const CubeComplex cc = build_uc(g, n);
    const std::string what = std::to_string(g.vertex_count()) + "v n=" + std::to_string(n);
    const auto d = boundary_matrices(cc);
    for (std::size_t k = 1; k + 1 < d.size(); ++k) {
      if (d[k].cols > 0 && d[k + 1].cols > 0) c.that(multiply(d[k], d[k + 1]).entries.empty(), what + " d^2");
    }
    const HomologyProfile h = homology(cc);
    c.equal(h.betti[0], static_cast<long long>(components(cc).size()), what + " b0");
    long long alt = 0;
    for (std::size_t k = 0; k < h.betti.size(); ++k) alt += (k % 2 == 0 ? 1 : -1) * h.betti[k];
    c.equal(alt, euler_characteristic(cc), what + " euler");
    if (cc.top_dim() >= 2) {
      ++with_squares;
      c.that(same_partition(hyperplanes(cc).edge_class, propagation_classes(cc)), what + " lemma vs propagation");
    }
  }
  int duality = 0;
  for (const auto& [name, g] : testing::small_graphs()) {
    for (int n = 0; n <= static_cast<int>(g.vertex_count()); ++n) {
      try {
        complement_isomorphism(g, n);
        ++duality;
      } catch (const std::exception& e) {
        c.that(false, name + " duality: " + e.what());
      }
    }
  }
  c.note(std::to_string(items.size()) + " complexes, " + std::to_string(with_squares) + " with squares, " +
         std::to_string(duality) + " duality maps");
}

// 13
void free_product_criteria(Checker& c) {
  struct Case {
    std::string name;
    FiniteGraph g;
    int n;
    bool expect;
  };
  const FiniteGraph flower2 = fam::flower({4, 4}, {});
  const std::vector<Case> cases{
      {"sun", fam::sun(6, {{0, 2}}), 3, true},
      {"sun2", fam::sun(6, {{0, 2}, {3, 2}}), 3, true},
      {"flower+cycle", testing::glue(flower2, "c", fam::cycle(5), "v1", "'"), 2, true},
      {"flower+theta", testing::glue(flower2, "c", fam::theta(2, 1), "p", "'"), 3, true},
      {"flower leaf+cycle", testing::glue(fam::flower({4}, {2}), "p1_2", fam::cycle(5), "v1", "'"), 2, true},
      {"flower leaf+cycle", testing::glue(fam::flower({4}, {2}), "p1_2", fam::cycle(5), "v1", "'"), 3, true},
      {"double star", fam::double_star(4, 4), 5, true},
      {"theta2", fam::theta(2, 1), 2, false},
      {"theta2", fam::theta(2, 1), 3, false},
      {"cycle", fam::cycle(6), 2, false},
      {"cycle", fam::cycle(6), 3, false},
  };
  int c1_hits = 0;
  int c2_hits = 0;
  for (const auto& k : cases) {
    const std::string what = tag(k.name, k.n);
    const FiniteGraph g = check_subdivision(k.g, k.n).ok ? k.g : sufficient_subdivision(k.g, k.n);
    const auto c1 = free_product_criterion_1(g, k.n);
    const auto c2 = free_product_criterion_2(g, k.n);
    c.equal(c1.has_value() || c2.has_value(), k.expect, what + " certificate");
    if (k.expect) {
      c1_hits += c1 ? 1 : 0;
      c2_hits += c2 ? 1 : 0;
    }
    std::vector<std::vector<EdgeId>> cuts;
    if (c1) cuts.push_back(c1->cut_edges);
    if (c2) cuts.push_back({c2->edge});
    for (const auto& cut : cuts) {
      const auto split = find_free_splitting(decomposed(g, k.n, cut));
      c.that(split.has_value() && split->text == "H * Z", what + " decomposition along the certificate cut");
    }
  }
  c.that(c1_hits > 0 && c2_hits > 0, "both criteria must fire somewhere");
  c.note("criterion 1 on " + std::to_string(c1_hits) + " graphs, criterion 2 on " + std::to_string(c2_hits));
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Checker&)>>> criteria{
      {"component counts", component_counts},
      {"hyperplane counts", hyperplane_counts},
      {"cut-graph equivalence", cut_graph_equivalence},
      {"radial formula", radial_formula},
      {"modified radial formulas", modified_radial},
      {"H graph, n=4", gamma_h},
      {"A graph, n=4", gamma_a},
      {"unsubdivided H and A, n=4", unsubdivided},
      {"Q graphs, n=2..4", gamma_q},
      {"theta graph, n=4", gamma_theta},
      {"specialness", specialness},
      {"property suites", properties},
      {"free-product criteria", free_product_criteria},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Checker c;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.that(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += c.ok() ? 0 : 1;
    std::ostringstream line;
    line << (c.ok() ? "PASS" : "FAIL") << " " << (i + 1 < 10 ? " " : "") << i + 1 << "  " << criteria[i].first
         << "  [" << c.checks() << " checks, " << std::fixed;
    line.precision(2);
    line << secs << "s]";
    for (const auto& n : c.notes()) line << "  " << n;
    std::cout << line.str() << "\n";
    for (const auto& f : c.failures()) std::cout << "        " << f << "\n";
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
