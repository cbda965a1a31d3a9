#include <doctest.h>

#include <sstream>

#include <nlohmann/json.hpp>

#include "commands.hpp"

using namespace gbg::cli;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_with(RunConfig c) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(c, out, err);
  return {code, out.str(), err.str()};
}

RunConfig config(std::string command, std::string graph, int n, Format f = Format::json) {
  RunConfig c;
  c.command = std::move(command);
  c.graph_path = std::string(GBG_DATA_DIR) + "/" + graph;
  c.n = n;
  c.format = f;
  return c;
}

}  // namespace

TEST_CASE("uc reports counts and components") {
  const Outcome r = run_with(config("uc", "r3.json", 2));
  REQUIRE(r.code == exit_ok);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema_version"] == schema_version);
  CHECK(j["counts"] == nlohmann::json::array({6, 6}));
  CHECK(j["components"].size() == 1);

  const auto two = nlohmann::json::parse(run_with(config("uc", "two_segments.json", 2)).out);
  REQUIRE(two["components"].size() == 3);
  CHECK(two["components"][1]["signature"] == nlohmann::json::array({1, 1}));
}

TEST_CASE("uc validation errors") {
  const Outcome r = run_with(config("uc", "r3.json", 9));
  CHECK(r.code == exit_validation);
  CHECK(r.err.find("n exceeds vertex count") != std::string::npos);
  CHECK(run_with(config("uc", "missing.json", 2)).code == exit_validation);
  CHECK(run_with(config("bogus", "r3.json", 2)).code == exit_validation);
}

TEST_CASE("decompose") {
  RunConfig c = config("decompose", "gamma_h_subdivided.json", 4, Format::text);
  c.cuts = {"x:y"};
  const Outcome h = run_with(c);
  REQUIRE(h.code == exit_ok);
  CHECK(h.out.rfind("F10 * Z^2\n", 0) == 0);

  c = config("decompose", "gamma_q3.json", 3, Format::text);
  c.cuts = {"c:p"};
  CHECK(run_with(c).out.rfind("F3\n", 0) == 0);

  c = config("decompose", "gamma_theta.json", 4);
  c.cuts = {"a2:b2"};
  const auto j = nlohmann::json::parse(run_with(c).out);
  CHECK(j["assembled"]["text"] == "HNN(Z^2 * Z over Z)");
  CHECK(j["assembled"]["symbolic"] == true);
  CHECK(j["decomposition"]["shape_agrees"] == true);

  c.cuts = {"a1:a"};
  c.cuts.push_back("b:b2");
  CHECK(run_with(c).code == exit_validation);
  c.cuts = {"a2-b2"};
  CHECK(run_with(c).code == exit_validation);

  c = config("decompose", "gamma_h.json", 4, Format::dot);
  c.cuts = {"x:y"};
  CHECK(run_with(c).out.rfind("graph Lambda", 0) == 0);
}

TEST_CASE("homology") {
  const auto h = nlohmann::json::parse(run_with(config("homology", "gamma_h.json", 4)).out);
  CHECK(h["homology"]["betti"] == nlohmann::json::array({1, 2, 1, 0}));
  const auto a = nlohmann::json::parse(run_with(config("homology", "gamma_a.json", 4)).out);
  CHECK(a["homology"]["betti"][1] == 3);
  RunConfig capped = config("homology", "gamma_a.json", 4);
  capped.max_dim = 1;
  CHECK(run_with(capped).code == exit_validation);
}

TEST_CASE("check") {
  const Outcome sun = run_with(config("check", "sun.json", 3));
  REQUIRE(sun.code == exit_ok);
  const auto j = nlohmann::json::parse(sun.out);
  CHECK(j["specialness"]["special"] == true);
  bool criterion2 = false;
  for (const auto& c : j["certificates"]) criterion2 = criterion2 || c["criterion"] == 2;
  CHECK(criterion2);

  const Outcome theta = run_with(config("check", "theta2.json", 3, Format::text));
  CHECK(theta.code == exit_ok);
  CHECK(theta.out.find("no free-product certificate found") != std::string::npos);

  const Outcome h = run_with(config("check", "gamma_h.json", 4));
  CHECK(nlohmann::json::parse(h.out)["z2_witness"]["kind"] == "two_essential_vertices");
}

TEST_CASE("reports are deterministic") {
  RunConfig c = config("decompose", "gamma_a_prime.json", 4);
  c.cuts = {"a1:b1"};
  CHECK(run_with(c).out == run_with(c).out);
}
