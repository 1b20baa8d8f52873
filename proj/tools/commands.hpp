#pragma once

// Subcommand bodies of bgalg, kept out of main() so tests can drive them.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bga/io.hpp"

namespace bga::cli {

inline constexpr const char* kK23Advisory = "not nuclear, not exact";

struct CommandResult {
  Json json;
  std::string text;  // when set, printed instead of the JSON (DOT export)
  bool ok = true;
};

CommandResult cmd_analyze(const BipartiteGraph& g);

struct IsoOptions {
  bool oracle = false;
  bool verify_phi = false;
  std::size_t bound = 8;
  std::uint64_t seed = 0;  // for the random t-samples of --verify-phi
};

CommandResult cmd_iso(const BipartiteGraph& g, const BipartiteGraph& h, const IsoOptions& opt);

struct RepcheckOptions {
  std::optional<std::vector<double>> t;  // default: default_t_samples(seed)
  std::uint64_t seed = 0;
  std::size_t max_word_length = 4;
};

CommandResult cmd_repcheck(const BipartiteGraph& g, const RepcheckOptions& opt);

CommandResult cmd_genpos(const BipartiteGraph& g, const SynthesisOptions& opt);

CommandResult cmd_convert(const Hypergraph& h);

struct CensusOptions {
  std::size_t max_edges = 4;
  /// Also admit disconnected graphs (no isolated vertices).
  bool disconnected = false;
};

/// Throws SizeBoundExceeded above 8 edges.
CommandResult cmd_census(const CensusOptions& opt);

/// Connected bipartite graphs with 1..max_edges edges, one per isomorphism
/// class (side swap allowed), in canonical form.
std::vector<BipartiteGraph> connected_graphs(std::size_t max_edges);

/// As connected_graphs, plus disjoint unions of them, up to max_edges in total.
std::vector<BipartiteGraph> graphs_without_isolated_vertices(std::size_t max_edges);

}  // namespace bga::cli
