#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
  using gbg::cli::Format;
  CLI::App app{"Discrete configuration spaces and graph braid groups"};
  app.require_subcommand(1);

  gbg::cli::RunConfig config;
  std::string cut_list;
  const std::map<std::string, Format> formats{{"json", Format::json}, {"dot", Format::dot}, {"text", Format::text}};

  auto common = [&](CLI::App* sub, bool with_cut, bool with_dim) {
    sub->add_option("--graph", config.graph_path, "graph JSON file")->required();
    sub->add_option("-n", config.n, "number of particles")->required();
    sub->add_option("--format", config.format, "json, dot or text")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--out", config.out_path, "write the report here instead of stdout");
    if (with_cut) sub->add_option("--cut", cut_list, "cut edges u:v,u:v,... sharing a vertex")->required();
    if (with_dim) sub->add_option("--max-dim", config.max_dim, "highest cube dimension to build");
  };
  common(app.add_subcommand("uc", "build UC_n and report cube counts and components"), false, true);
  common(app.add_subcommand("decompose", "graph-of-groups decomposition along cut edges"), true, false);
  common(app.add_subcommand("homology", "integral homology of UC_n"), false, true);
  common(app.add_subcommand("check", "specialness, subdivision and free-product certificates"), false, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : gbg::cli::exit_validation;
  }
  config.command = app.get_subcommands().front()->get_name();
  for (std::size_t start = 0; !cut_list.empty() && start <= cut_list.size();) {
    const std::size_t comma = cut_list.find(',', start);
    const std::size_t end = comma == std::string::npos ? cut_list.size() : comma;
    if (end > start) config.cuts.push_back(cut_list.substr(start, end - start));
    start = end + 1;
  }
  return gbg::cli::run(config, std::cout, std::cerr);
}
