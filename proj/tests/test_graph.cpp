#include <doctest.h>

#include "gbg/braid_criteria.hpp"
#include "gbg/classify.hpp"
#include "gbg/errors.hpp"
#include "gbg/families.hpp"
#include "gbg/graph.hpp"
#include "gbg/subdivision.hpp"
#include "helpers.hpp"

using namespace gbg;
namespace fam = gbg::families;

TEST_CASE("parse_graph reads vertices and edges") {
  const FiniteGraph g = parse_graph(R"({"vertices":["a","b"],"edges":[["a","b"]]})");
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 1);
  CHECK(is_segment(g));
}

TEST_CASE("parse_graph star gives R3") {
  const FiniteGraph g =
      parse_graph(R"({"vertices":["c","x","y","z"],"edges":[["c","x"],["c","y"],["c","z"]]})");
  std::vector<int> valences;
  for (VertexId v = 0; v < g.vertex_count(); ++v) valences.push_back(g.degree(v));
  CHECK(valences == std::vector<int>{3, 1, 1, 1});
  const GraphClass cls = classify(g);
  CHECK(cls.family == GraphFamily::radial_tree);
  CHECK(cls.parameter == 3);
}

TEST_CASE("parse_graph rejects malformed input") {
  CHECK_THROWS_WITH_AS(parse_graph(R"({"vertices":["a"],"edges":[["a","a"]]})"), doctest::Contains("loop"),
                       ValidationError);
  CHECK_THROWS_WITH_AS(parse_graph(R"({"vertices":["a","a"],"edges":[]})"), doctest::Contains("duplicate vertex"),
                       ValidationError);
  CHECK_THROWS_WITH_AS(parse_graph(R"({"vertices":["a","b"],"edges":[["a","b"],["b","a"]]})"),
                       doctest::Contains("duplicate edge"), ValidationError);
  CHECK_THROWS_AS(parse_graph(R"({"vertices":["a"],"edges":[["a","q"]]})"), ValidationError);
  CHECK_THROWS_AS(parse_graph("[1,2"), ValidationError);
}

TEST_CASE("json round trip") {
  const FiniteGraph g = fam::gamma_theta();
  CHECK(parse_graph(graph_to_json(g)) == g);
}

TEST_CASE("remove_open_edge") {
  const FiniteGraph tri = fam::cycle(3);
  const FiniteGraph p = remove_open_edge(tri, 0);
  CHECK(p.vertex_count() == 3);
  CHECK(is_segment(p));

  const FiniteGraph seg = fam::segment(2);
  const FiniteGraph two = remove_open_edge(seg, 0);
  CHECK(two.vertex_count() == 2);
  CHECK(two.components().size() == 2);

  const FiniteGraph q = fam::gamma_q(3);
  CHECK(is_segment(remove_open_edge(q, testing::edge(q, "c", "p"))));

  CHECK_THROWS_AS(remove_open_edge(tri, 7), ValidationError);
}

TEST_CASE("remove_closed_edge") {
  const FiniteGraph path = fam::segment(5);
  const FiniteGraph rest = remove_closed_edge(path, testing::edge(path, "v2", "v3"));
  CHECK(rest.names() == std::vector<std::string>{"v1", "v4", "v5"});
  const auto comps = rest.components();
  REQUIRE(comps.size() == 2);
  CHECK(popcount(comps[0]) == 1);
  CHECK(popcount(comps[1]) == 2);

  const FiniteGraph theta = fam::gamma_theta();
  const GraphClass cls = classify(remove_closed_edge(theta, testing::edge(theta, "a2", "b2")));
  CHECK(cls.family == GraphFamily::cycle);
  CHECK(remove_closed_edge(theta, testing::edge(theta, "a2", "b2")).vertex_count() == 6);

  for (EdgeId e = 0; e < 3; ++e) CHECK(remove_closed_edge(fam::cycle(3), e).vertex_count() == 1);
}

TEST_CASE("check_subdivision") {
  const FiniteGraph r3 = fam::radial(3);
  CHECK(check_subdivision(r3, 2).ok);
  const auto bad = check_subdivision(r3, 3);
  CHECK_FALSE(bad.ok);
  CHECK(bad.violations.size() == 3);
  for (const auto& v : bad.violations) {
    CHECK(v.kind == SubdivisionViolation::Kind::short_path);
    CHECK(v.length == 1);
    CHECK(v.required == 2);
  }
  CHECK(check_subdivision(fam::cycle(3), 2).ok);
  const auto tri3 = check_subdivision(fam::cycle(3), 3);
  CHECK_FALSE(tri3.ok);
  CHECK(tri3.violations.front().kind == SubdivisionViolation::Kind::short_cycle);
}

TEST_CASE("sufficient_subdivision") {
  const FiniteGraph r3 = sufficient_subdivision(fam::radial(3), 3);
  CHECK(check_subdivision(r3, 3).ok);
  CHECK(classify(r3).family == GraphFamily::radial_tree);

  const FiniteGraph ok = fam::gamma_h(4);
  CHECK(sufficient_subdivision(ok, 4) == ok);

  const FiniteGraph h = sufficient_subdivision(fam::gamma_h(), 4);
  CHECK(check_subdivision(h, 4).ok);
  // Homeomorphic to the reference subdivision: same branch structure.
  CHECK(topological_branches(h).size() == topological_branches(ok).size());
  CHECK(h.cycle_rank() == 0);
}

TEST_CASE("classify families") {
  CHECK(classify(fam::cycle(5)).family == GraphFamily::cycle);
  const GraphClass r4 = classify(fam::radial(4));
  CHECK(r4.family == GraphFamily::radial_tree);
  CHECK(r4.parameter == 4);
  CHECK(r4.flower_compatible);
  // Two 6-cycles sharing a path of three edges.
  const FiniteGraph t = fam::theta(2, 2);
  CHECK(t.vertex_count() == 8);
  CHECK(classify(t).family == GraphFamily::generalised_theta);
  CHECK(classify(t).parameter == 2);
  CHECK(classify(fam::gamma_theta()).family == GraphFamily::generalised_theta);
  CHECK(classify(fam::sun(6, {{0, 2}})).family == GraphFamily::flower);
  CHECK(classify(fam::sun(6, {{0, 2}, {3, 1}})).family == GraphFamily::sun);
  CHECK(classify(fam::flower({4, 5}, {2})).family == GraphFamily::flower);
  CHECK(classify(fam::segment(4)).family == GraphFamily::segment);
  CHECK(classify(fam::gamma_h()).family == GraphFamily::tree_other);
  CHECK_THROWS_AS(classify(fam::disjoint_union(fam::segment(2), fam::segment(2), "'")), ValidationError);
}

TEST_CASE("z2_witness") {
  const auto h4 = z2_witness(fam::gamma_h(), 4);
  REQUIRE(h4);
  CHECK(h4->kind == Z2Witness::Kind::two_essential_vertices);
  CHECK_FALSE(z2_witness(fam::gamma_h(), 2));
  const auto tt = z2_witness(fam::two_triangles(1), 2);
  REQUIRE(tt);
  CHECK(tt->kind == Z2Witness::Kind::two_disjoint_cycles);
  CHECK(tt->first.size() == 3);
  CHECK(tt->second.size() == 3);
}

TEST_CASE("triviality_criterion") {
  for (int n = 1; n <= 5; ++n) CHECK(triviality_criterion(fam::segment(6), n, {n}) == BraidSize::trivial);
  CHECK(triviality_criterion(fam::radial(3), 2, {2}) == BraidSize::infinite_diameter);
  CHECK(triviality_criterion(fam::radial(3), 1, {1}) == BraidSize::trivial);
  CHECK(triviality_criterion(fam::cycle(4), 1, {1}) == BraidSize::infinite_diameter);
  const FiniteGraph two = fam::disjoint_union(fam::segment(3), fam::cycle(3), "'");
  CHECK(triviality_criterion(two, 2, {2, 0}) == BraidSize::trivial);
  CHECK(triviality_criterion(two, 2, {1, 1}) == BraidSize::infinite_diameter);
  CHECK_THROWS_AS(triviality_criterion(two, 2, {2}), ValidationError);
  CHECK_THROWS_AS(triviality_criterion(two, 2, {1, 2}), ValidationError);
}

TEST_CASE("canonical form detects isomorphism") {
  FiniteGraph a = fam::gamma_h();
  FiniteGraph b = testing::make({{"b2", "b"}, {"y", "b"}, {"x", "y"}, {"b1", "b"}, {"a", "x"}, {"a1", "a"}, {"a2", "a"}});
  CHECK(isomorphic(a, b));
  CHECK_FALSE(isomorphic(a, fam::radial(7)));
  CHECK_FALSE(isomorphic(fam::theta(2, 2), fam::sun(7, {{0, 1}})));
}
