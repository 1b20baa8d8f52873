// bgalg: command-line front end. JSON on stdout, log lines on stderr.
// Exit status: 0 all checks pass, 1 some check failed, 2 usage or input error.

#include <iostream>

#include <CLI11.hpp>

#include "bga/error.hpp"
#include "commands.hpp"

namespace {

bga::BipartiteGraph load_graph(const std::string& path) {
  return bga::graph_from_json(bga::load_json_file(path));
}

int emit(const bga::cli::CommandResult& r) {
  if (!r.text.empty()) {
    std::cout << r.text;
  } else {
    std::cout << r.json.dump(2) << "\n";
  }
  if (!r.ok) std::cerr << "bgalg: some checks failed\n";
  return r.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bipartite graph C*-algebras: isomorphism, representations, generic position"};
  app.require_subcommand(1);

  std::string format = "json";
  std::string file, file2;

  auto* analyze = app.add_subcommand("analyze", "quadruples, loose edges, skeleton, certificate");
  analyze->add_option("graph", file, "graph JSON file")->required();
  analyze->add_option("--format", format, "json or dot")->check(CLI::IsMember({"json", "dot"}));

  bga::cli::IsoOptions iso_opt;
  auto* iso = app.add_subcommand("iso", "decide isomorphism of the two algebras");
  iso->add_option("graph", file, "first graph JSON file")->required();
  iso->add_option("graph2", file2, "second graph JSON file")->required();
  iso->add_flag("--oracle", iso_opt.oracle, "also run the exhaustive oracle");
  iso->add_flag("--verify-phi", iso_opt.verify_phi, "check the induced homomorphism numerically");
  iso->add_option("--bound", iso_opt.bound, "edge bound for the oracle")->capture_default_str();
  iso->add_option("--seed", iso_opt.seed, "seed for random t-samples")->capture_default_str();

  bga::cli::RepcheckOptions rep_opt;
  std::vector<double> t_list;
  auto* repcheck = app.add_subcommand("repcheck", "relation checks on the standard representation");
  repcheck->add_option("graph", file, "graph JSON file")->required();
  auto* t_opt = repcheck->add_option("--t", t_list, "comma-separated t samples in (0,1)")->delimiter(',');
  repcheck->add_option("--seed", rep_opt.seed, "seed for default t-samples")->capture_default_str();
  repcheck->add_option("--max-word", rep_opt.max_word_length, "longest word checked")->capture_default_str();

  bga::SynthesisOptions syn;
  auto* genpos = app.add_subcommand("genpos", "synthesize and verify a generic-position family");
  genpos->add_option("graph", file, "graph JSON file")->required();
  genpos->add_option("--k", syn.k, "block size")->capture_default_str();
  genpos->add_option("--seed", syn.seed, "random seed")->capture_default_str();
  genpos->add_option("--max-iter", syn.max_iter, "iteration cap")->capture_default_str();
  genpos->add_option("--tol", syn.tol, "residual target")->capture_default_str();

  auto* convert = app.add_subcommand("convert", "hypergraph JSON to bipartite graph");
  convert->add_option("hypergraph", file, "hypergraph JSON file")->required();
  convert->add_option("--format", format, "json or dot")->check(CLI::IsMember({"json", "dot"}));

  bga::cli::CensusOptions census_opt;
  auto* census = app.add_subcommand("census", "classify small graphs by algebra isomorphism");
  census->add_option("--max-edges", census_opt.max_edges, "largest edge count (<= 8)")->capture_default_str();
  census->add_flag("--disconnected", census_opt.disconnected, "include graphs with several components");

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) {
      const auto g = load_graph(file);
      if (format == "dot") return emit({{}, bga::to_dot(g), true});
      return emit(bga::cli::cmd_analyze(g));
    }
    if (iso->parsed()) return emit(bga::cli::cmd_iso(load_graph(file), load_graph(file2), iso_opt));
    if (repcheck->parsed()) {
      if (t_opt->count() > 0) rep_opt.t = t_list;
      return emit(bga::cli::cmd_repcheck(load_graph(file), rep_opt));
    }
    if (genpos->parsed()) {
      std::cerr << "bgalg: synthesizing with k=" << syn.k << " seed=" << syn.seed << "\n";
      return emit(bga::cli::cmd_genpos(load_graph(file), syn));
    }
    if (convert->parsed()) {
      const auto g = bga::from_hypergraph(bga::hypergraph_from_json(bga::load_json_file(file)));
      if (format == "dot") return emit({{}, bga::to_dot(g), true});
      return emit({bga::to_json(g), {}, true});
    }
    if (census->parsed()) return emit(bga::cli::cmd_census(census_opt));
  } catch (const bga::ParseError& e) {
    std::cerr << "bgalg: " << e.what() << "\n";
    std::cout << bga::Json{{"error", "ParseError"}, {"message", e.what()}, {"line", e.line()}, {"column", e.column()}}
                     .dump(2)
              << "\n";
    return 2;
  } catch (const bga::Error& e) {
    std::cerr << "bgalg: " << e.what() << "\n";
    std::cout << bga::Json{{"error", std::string(bga::to_string(e.code()))}, {"message", e.what()}}.dump(2)
              << "\n";
    return 2;
  }
  return 2;
}
