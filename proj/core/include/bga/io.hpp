#pragma once

// JSON and DOT formats.
//
//   graph          {"u": [...], "v": [...], "e": [["u1","v1"], ...]}
//   hypergraph     {"vertices": [...], "hedges": [...], "source": {"e1": ["v1"], ...}}
//   skeleton       {"clopen": [["u","v"], ...],
//                   "components": [{"edges": [...], "pairing": [[..],[..]]}]}
//   representation {"dim": d, "images": {"u1": [[re, im], ...]}}   row-major
//   contractions   {"k": k, "blocks": {"u,v": [[[re, im], ...], ...]}}
//   verdict        {"isomorphic": b, "witness": {"u,v": "u',v'"}, "reason": s|null}
//
// Syntax errors raise ParseError with 1-based line and column; structural
// errors raise ParseError with line and column 0.

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "bga/genpos.hpp"
#include "bga/graph.hpp"
#include "bga/hypergraph.hpp"
#include "bga/iso.hpp"
#include "bga/repr.hpp"
#include "bga/skeleton.hpp"

namespace bga {

using Json = nlohmann::ordered_json;

Json parse_json(std::string_view text);
Json load_json_file(const std::string& path);

BipartiteGraph graph_from_json(const Json& j);
Json to_json(const BipartiteGraph& g);

Hypergraph hypergraph_from_json(const Json& j);
Json to_json(const Hypergraph& h);

/// "u,v" for an edge.
std::string edge_key(const BipartiteGraph& g, EdgeIndex e);
Json edge_json(const BipartiteGraph& g, EdgeIndex e);

Json to_json(const BipartiteGraph& g, const SpecSkeleton& s);

Json matrix_json(const ComplexMatrix& m);  // rows of [re, im]
Json to_json(const Representation& rep);
Representation representation_from_json(const BipartiteGraph& g, const Json& j);

Json to_json(const ContractionFamily& cf);
ContractionFamily contraction_family_from_json(const BipartiteGraph& g, const Json& j);

Json to_json(const CheckResult& r);
Json to_json(const CheckReport& r);

Json to_json(const BipartiteGraph& g, const BipartiteGraph& h, const IsoVerdict& v);

/// U vertices filled, V vertices hollow.
std::string to_dot(const BipartiteGraph& g);

}  // namespace bga
