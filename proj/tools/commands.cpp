#include "commands.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "gbg/braid_criteria.hpp"
#include "gbg/complex.hpp"
#include "gbg/errors.hpp"
#include "gbg/gog.hpp"
#include "gbg/graph.hpp"
#include "gbg/homology.hpp"
#include "gbg/hyperplanes.hpp"
#include "gbg/subdivision.hpp"

namespace gbg::cli {

namespace {

using json = nlohmann::ordered_json;

json header(const RunConfig& c, const FiniteGraph& g) {
  return json{{"schema_version", schema_version},
              {"command", c.command},
              {"graph", {{"vertices", g.vertex_count()}, {"edges", g.edge_count()}}},
              {"n", c.n}};
}

std::string dumped(const json& j) { return j.dump(2) + "\n"; }

FiniteGraph load(const RunConfig& c) {
  if (c.graph_path.empty()) throw ValidationError("--graph is required");
  FiniteGraph g = load_graph(c.graph_path);
  if (c.n < 1) throw ValidationError("-n must be at least 1");
  if (c.n > static_cast<int>(g.vertex_count())) throw ValidationError("n exceeds vertex count");
  return g;
}

std::vector<EdgeId> parse_cuts(const FiniteGraph& g, const std::vector<std::string>& tokens) {
  std::vector<EdgeId> out;
  for (const auto& t : tokens) {
    const auto colon = t.find(':');
    if (colon == std::string::npos) throw ValidationError("cut edge '" + t + "' is not of the form u:v");
    out.push_back(g.edge_between(t.substr(0, colon), t.substr(colon + 1)));
  }
  if (out.empty()) throw ValidationError("--cut is required");
  return out;
}

std::string join(const std::vector<long long>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i == 0 ? "" : " ") + std::to_string(v[i]);
  return out;
}

std::string signature_text(const std::vector<int>& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i == 0 ? "" : ",") + std::to_string(s[i]);
  return out + ")";
}

}  // namespace

Report cmd_uc(const RunConfig& c) {
  const FiniteGraph g = load(c);
  const CubeComplex cc = build_uc(g, c.n, c.max_dim);
  const auto comps = components(cc);
  if (c.format == Format::dot) return {complex_to_dot(cc)};

  std::vector<long long> counts;
  for (std::size_t k : cc.counts()) counts.push_back(static_cast<long long>(k));
  if (c.format == Format::text) {
    std::ostringstream out;
    out << "counts: " << join(counts) << "\n";
    out << "components: " << comps.size() << "\n";
    for (const auto& comp : comps) {
      out << "  " << signature_text(comp.signature) << " " << comp.vertices.size() << " configurations\n";
    }
    if (cc.capped()) {
      out << "euler: unavailable (capped at dimension " << cc.built_dim() << ")\n";
    } else {
      out << "euler: " << euler_characteristic(cc) << "\n";
    }
    return {out.str()};
  }
  json j = header(c, g);
  j["counts"] = counts;
  j["built_dim"] = cc.built_dim();
  j["capped"] = cc.capped();
  j["euler"] = cc.capped() ? json(nullptr) : json(euler_characteristic(cc));
  json cj = json::array();
  for (const auto& comp : comps) cj.push_back({{"signature", comp.signature}, {"size", comp.vertices.size()}});
  j["components"] = cj;
  return {dumped(j)};
}

Report cmd_decompose(const RunConfig& c) {
  const FiniteGraph g = load(c);
  const auto cuts = parse_cuts(g, c.cuts);
  GroupResolver resolver;
  const GraphOfGroups gog = decompose(g, c.n, cuts, {}, &resolver);
  if (c.format == Format::dot) return {lambda_to_dot(gog)};

  std::optional<AssembledGroup> assembled;
  std::string unavailable;
  try {
    assembled = assemble(gog);
  } catch (const Unsupported& e) {
    unavailable = e.what();
  }
  const auto split = find_free_splitting(gog);

  if (c.format == Format::text) {
    std::ostringstream out;
    out << (assembled ? assembled->text : "unavailable: " + unavailable) << "\n";
    out << "nodes: " << gog.nodes.size() << ", links: " << gog.links.size() << "\n";
    for (const auto& node : gog.nodes) {
      out << "  node " << signature_text(node.signature) << " " << render(node.group) << "\n";
    }
    for (const auto& l : gog.links) {
      out << "  link " << g.edge_name(l.label) << " " << signature_text(gog.nodes[l.from].signature) << " -> "
          << signature_text(gog.nodes[l.to].signature) << " " << render(l.group) << "\n";
    }
    out << "prediction: " << (gog.shape_agrees ? "agrees" : "differs") << "\n";
    if (split) out << "free splitting: " << split->text << " via link " << split->link << "\n";
    return {out.str()};
  }
  json j = header(c, g);
  j["decomposition"] = json::parse(gog_json(gog));
  if (assembled) {
    j["assembled"] = {{"text", assembled->text}, {"symbolic", assembled->symbolic}};
  } else {
    j["assembled"] = {{"text", nullptr}, {"unavailable", unavailable}};
  }
  j["free_splitting"] = split ? json{{"link", split->link}, {"reason", split->reason}, {"text", split->text}}
                              : json(nullptr);
  return {dumped(j)};
}

Report cmd_homology(const RunConfig& c) {
  const FiniteGraph g = load(c);
  const CubeComplex cc = build_uc(g, c.n, c.max_dim);
  if (cc.capped()) throw ValidationError("homology needs the full complex; drop --max-dim");
  const HomologyProfile h = homology(cc);
  if (c.format == Format::text) {
    std::ostringstream out;
    out << "betti: " << join(h.betti) << "\n";
    out << "torsion:";
    bool any = false;
    for (std::size_t d = 0; d < h.torsion.size(); ++d) {
      for (const auto& t : h.torsion[d]) {
        out << " H" << d << ":Z/" << t.get_str();
        any = true;
      }
    }
    out << (any ? "" : " none") << "\n";
    out << "euler: " << h.euler << "\n";
    return {out.str()};
  }
  if (c.format == Format::dot) throw ValidationError("homology has no DOT output");
  json j = header(c, g);
  j["homology"] = json::parse(homology_json(h));
  return {dumped(j)};
}

Report cmd_check(const RunConfig& c) {
  const FiniteGraph g = load(c);
  if (c.format == Format::dot) throw ValidationError("check has no DOT output");
  const CubeComplex cc = build_uc(g, c.n, c.max_dim);
  if (cc.built_dim() < 2 && c.n >= 2 && cc.capped()) {
    throw ValidationError("specialness needs squares; use --max-dim >= 2");
  }
  const HyperplaneSet hs = hyperplanes(cc);
  const SpecialnessReport sp = check_special(cc, hs);
  const SubdivisionReport sub = check_subdivision(g, c.n);

  std::optional<std::string> c1;
  std::optional<std::string> c2;
  std::optional<std::string> witness;
  const bool criteria = g.connected() && c.n >= 2;
  FiniteGraph target = g;
  if (criteria) {
    if (!sub.ok) target = sufficient_subdivision(g, c.n);
    if (auto cert = free_product_criterion_1(target, c.n)) c1 = certificate_json(target, c.n, *cert);
    if (auto cert = free_product_criterion_2(target, c.n)) c2 = certificate_json(target, c.n, *cert);
  }
  std::optional<Z2Witness> z2;
  if (g.connected()) z2 = z2_witness(g, c.n);

  Report r;
  r.status = sp.special() ? exit_ok : exit_invariant;
  if (c.format == Format::text) {
    std::ostringstream out;
    out << "special: " << (sp.special() ? "yes" : "no") << " (" << hs.planes.size() << " hyperplanes)\n";
    out << "subdivision: " << (sub.ok ? "sufficient" : "insufficient") << "\n";
    for (const auto& v : sub.violations) out << "  " << describe(g, v) << "\n";
    if (!criteria) {
      out << "free-product criteria: not applicable\n";
    } else if (!c1 && !c2) {
      out << "no free-product certificate found\n";
    } else {
      if (c1) out << "criterion 1: " << *c1 << "\n";
      if (c2) out << "criterion 2: " << *c2 << "\n";
    }
    if (z2) {
      out << "Z^2 witness: " << to_string(z2->kind) << "\n";
    } else {
      out << "Z^2 witness: none\n";
    }
    r.body = out.str();
    return r;
  }
  json j = header(c, g);
  const json planes = json::parse(hyperplane_report_json(cc, hs, sp));
  j["hyperplanes"] = planes["labels"];
  j["specialness"] = planes["specialness"];
  json violations = json::array();
  for (const auto& v : sub.violations) violations.push_back(describe(g, v));
  j["subdivision"] = {{"ok", sub.ok}, {"violations", violations}};
  json certs = json::array();
  if (c1) certs.push_back(json::parse(*c1));
  if (c2) certs.push_back(json::parse(*c2));
  j["certificates"] = certs;
  if (criteria && !sub.ok) {
    j["certificate_graph"] = {{"vertices", target.vertex_count()}, {"edges", target.edge_count()}};
  }
  if (z2) {
    auto names = [&](const std::vector<VertexId>& vs) {
      json a = json::array();
      for (VertexId v : vs) a.push_back(g.name(v));
      return a;
    };
    j["z2_witness"] = {{"kind", to_string(z2->kind)}, {"first", names(z2->first)}, {"second", names(z2->second)}};
  } else {
    j["z2_witness"] = nullptr;
  }
  r.body = dumped(j);
  return r;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Report r;
  try {
    if (config.command == "uc") {
      r = cmd_uc(config);
    } else if (config.command == "decompose") {
      r = cmd_decompose(config);
    } else if (config.command == "homology") {
      r = cmd_homology(config);
    } else if (config.command == "check") {
      r = cmd_check(config);
    } else {
      throw ValidationError("unknown command '" + config.command + "'");
    }
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return exit_validation;
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << "\n";
    return exit_invariant;
  } catch (const Unsupported& e) {
    err << "unsupported: " << e.what() << "\n";
    return exit_validation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_failure;
  }

  if (config.out_path) {
    std::ofstream file(*config.out_path);
    if (!file) {
      err << "error: cannot write '" << *config.out_path << "'\n";
      return exit_validation;
    }
    file << r.body;
  } else {
    out << r.body;
  }
  return r.status;
}

}  // namespace gbg::cli
