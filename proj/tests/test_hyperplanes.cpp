#include <doctest.h>

#include "gbg/complex.hpp"
#include "gbg/errors.hpp"
#include "gbg/families.hpp"
#include "gbg/hyperplanes.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace gbg;
namespace fam = gbg::families;

namespace {

std::size_t planes_with_label(const HyperplaneSet& hs, EdgeId e) {
  std::size_t count = 0;
  for (const auto& h : hs.planes) count += h.label == e ? 1 : 0;
  return count;
}

}  // namespace

TEST_CASE("UC_2 of R3 has two hyperplanes per edge") {
  // R3 minus a closed edge is two isolated vertices, so the remaining
  // particle has two places to sit.
  const CubeComplex cc = build_uc(fam::radial(3), 2);
  const HyperplaneSet hs = hyperplanes(cc);
  CHECK(hs.planes.size() == 6);
  for (EdgeId e = 0; e < 3; ++e) CHECK(planes_with_label(hs, e) == 2);
  for (const auto& h : hs.planes) CHECK(h.dual_edges.size() == 1);
}

TEST_CASE("hyperplane labels follow closed-edge complements") {
  const FiniteGraph g = fam::gamma_h();
  const CubeComplex cc = build_uc(g, 4);
  const HyperplaneSet hs = hyperplanes(cc);
  CHECK(hs.planes.size() == 20);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    std::vector<int> caps;
    for (VertexMask c : closed_edge_components(g, e)) caps.push_back(popcount(c));
    CHECK(planes_with_label(hs, e) == oracle::partitions(3, caps));
  }
}

TEST_CASE("lemma classes agree with square propagation") {
  for (const auto& [g, n] : std::vector<std::pair<FiniteGraph, int>>{
           {fam::gamma_h(), 4}, {fam::gamma_theta(), 3}, {fam::gamma_q(3), 3}, {fam::theta(2, 1), 2},
           {fam::two_triangles(1), 2}, {fam::cycle(5), 3}}) {
    const CubeComplex cc = build_uc(g, n);
    const HyperplaneSet lemma = hyperplanes(cc);
    const HyperplaneSet prop = hyperplanes_by_propagation(cc);
    CHECK(same_partition(lemma.edge_class, prop.edge_class));
    CHECK(same_partition(lemma.edge_class, propagation_classes(cc)));
    CHECK(lemma.planes.size() == prop.planes.size());
  }
}

TEST_CASE("propagation needs squares") {
  CHECK_THROWS_AS(hyperplanes_by_propagation(build_uc(fam::gamma_h(), 3, 1)), ValidationError);
}

TEST_CASE("hyperplane sides are UC_{n-1} of the closed-edge complement") {
  const CubeComplex cc = build_uc(fam::gamma_a(), 3);
  for (const auto& h : hyperplanes(cc).planes) CHECK(sides_match_cut_component(cc, h));
}

TEST_CASE("specialness") {
  const SpecialnessReport hex = check_special(build_uc(fam::radial(3), 2));
  CHECK(hex.special());
  CHECK(hex.self_osculating.empty());
  CHECK(hex.inter_osculating.empty());

  CHECK(check_special(build_uc(fam::gamma_h(4), 4)).special());
  CHECK(check_special(build_uc(fam::gamma_theta(), 4)).special());
  CHECK(check_special(build_uc(load_graph(GBG_DATA_DIR "/delta.json"), 2)).special());
}

TEST_CASE("report json") {
  const CubeComplex cc = build_uc(fam::radial(3), 2);
  const HyperplaneSet hs = hyperplanes(cc);
  const std::string j = hyperplane_report_json(cc, hs, check_special(cc, hs));
  CHECK(j.find("special") != std::string::npos);
}
