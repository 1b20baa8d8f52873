#include "bga/io.hpp"

#include <fstream>
#include <sstream>

#include "bga/error.hpp"

namespace bga {

namespace {

[[noreturn]] void structural(const std::string& what) { throw ParseError(what, 0, 0); }

void require_object(const Json& j, const char* what) {
  if (!j.is_object()) structural(std::string(what) + ": expected a JSON object");
}

const Json& member(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) structural(std::string("missing key '") + key + "'");
  return *it;
}

std::vector<std::string> string_list(const Json& j, const char* what) {
  if (!j.is_array()) structural(std::string(what) + ": expected an array of strings");
  std::vector<std::string> out;
  for (const auto& x : j) {
    if (!x.is_string()) structural(std::string(what) + ": expected an array of strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

Complex complex_entry(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    structural("matrix entry: expected [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + e.what(),
                     line, col);
  }
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'", 0, 0);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

BipartiteGraph graph_from_json(const Json& j) {
  require_object(j, "graph");
  auto u = string_list(member(j, "u"), "u");
  auto v = string_list(member(j, "v"), "v");
  std::vector<LabelPair> edges;
  for (const auto& e : member(j, "e")) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
      structural("e: each edge must be a pair of labels");
    }
    edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  return BipartiteGraph(std::move(u), std::move(v), edges);
}

Json to_json(const BipartiteGraph& g) {
  Json e = Json::array();
  for (EdgeIndex i = 0; i < g.edge_count(); ++i) e.push_back(edge_json(g, i));
  return Json{{"u", g.u_labels()}, {"v", g.v_labels()}, {"e", std::move(e)}};
}

Hypergraph hypergraph_from_json(const Json& j) {
  require_object(j, "hypergraph");
  Hypergraph h;
  h.vertices = string_list(member(j, "vertices"), "vertices");
  h.hedges = string_list(member(j, "hedges"), "hedges");
  const auto& src = member(j, "source");
  require_object(src, "source");
  for (const auto& [k, v] : src.items()) h.source[k] = string_list(v, "source set");
  return h;
}

Json to_json(const Hypergraph& h) {
  Json src = Json::object();
  for (const auto& e : h.hedges) {
    auto it = h.source.find(e);
    src[e] = it == h.source.end() ? std::vector<std::string>{} : it->second;
  }
  return Json{{"vertices", h.vertices}, {"hedges", h.hedges}, {"source", std::move(src)}};
}

std::string edge_key(const BipartiteGraph& g, EdgeIndex e) {
  auto [a, b] = g.edge_labels(e);
  return a + "," + b;
}

Json edge_json(const BipartiteGraph& g, EdgeIndex e) {
  auto [a, b] = g.edge_labels(e);
  return Json::array({a, b});
}

Json to_json(const BipartiteGraph& g, const SpecSkeleton& s) {
  Json clopen = Json::array();
  for (auto e : s.clopen_points) clopen.push_back(edge_json(g, e));
  Json comps = Json::array();
  for (const auto& c : s.components) {
    Json edges = Json::array();
    for (auto e : c.boundary) edges.push_back(edge_json(g, e));
    Json pairing = Json::array();
    for (const auto& p : c.pairing) pairing.push_back(Json::array({edge_json(g, p[0]), edge_json(g, p[1])}));
    comps.push_back(Json{{"edges", std::move(edges)}, {"pairing", std::move(pairing)}});
  }
  return Json{{"clopen", std::move(clopen)}, {"components", std::move(comps)}};
}

Json matrix_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(Json::array({m(i, j).real(), m(i, j).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const Representation& rep) {
  Json images = Json::object();
  for (std::size_t x = 0; x < rep.images.size(); ++x) {
    Json flat = Json::array();
    const auto& m = rep.images[x];
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j) flat.push_back(Json::array({m(i, j).real(), m(i, j).imag()}));
    images[rep.graph.label(rep.graph.vertex_at(x))] = std::move(flat);
  }
  return Json{{"dim", rep.dim}, {"images", std::move(images)}};
}

Representation representation_from_json(const BipartiteGraph& g, const Json& j) {
  require_object(j, "representation");
  const auto& dj = member(j, "dim");
  if (!dj.is_number_unsigned()) structural("dim: expected a non-negative integer");
  const auto dim = dj.get<std::size_t>();
  const auto d = static_cast<Eigen::Index>(dim);
  Representation rep{g, dim, std::vector<ComplexMatrix>(g.vertex_count(), ComplexMatrix::Zero(d, d)), {}};
  const auto& images = member(j, "images");
  require_object(images, "images");
  for (const auto& [label, flat] : images.items()) {
    const auto x = g.global_id(g.vertex(label));
    if (!flat.is_array() || flat.size() != dim * dim) structural("image of '" + label + "' has the wrong size");
    for (std::size_t i = 0; i < dim * dim; ++i) {
      rep.images[x](static_cast<Eigen::Index>(i / dim), static_cast<Eigen::Index>(i % dim)) = complex_entry(flat[i]);
    }
  }
  return rep;
}

Json to_json(const ContractionFamily& cf) {
  Json blocks = Json::object();
  const auto& g = cf.graph;
  for (std::size_t u = 0; u < g.u_count(); ++u)
    for (std::size_t v = 0; v < g.v_count(); ++v)
      if (g.adjacent(u, v)) blocks[g.u_labels()[u] + "," + g.v_labels()[v]] = matrix_json(cf.block(u, v));
  return Json{{"k", cf.k}, {"blocks", std::move(blocks)}};
}

ContractionFamily contraction_family_from_json(const BipartiteGraph& g, const Json& j) {
  require_object(j, "contraction family");
  const auto& kj = member(j, "k");
  if (!kj.is_number_unsigned()) structural("k: expected a positive integer");
  const auto k = kj.get<std::size_t>();
  const auto kk = static_cast<Eigen::Index>(k);
  ContractionFamily cf{g, k, std::vector<ComplexMatrix>(g.u_count() * g.v_count(), ComplexMatrix::Zero(kk, kk))};
  const auto& blocks = member(j, "blocks");
  require_object(blocks, "blocks");
  for (const auto& [key, rows] : blocks.items()) {
    const auto comma = key.find(',');
    if (comma == std::string::npos) structural("block key '" + key + "' is not 'u,v'");
    const Vertex a = g.vertex(key.substr(0, comma));
    const Vertex b = g.vertex(key.substr(comma + 1));
    if (a.side != Side::U || b.side != Side::V) structural("block key '" + key + "' is not 'u,v'");
    if (!rows.is_array() || rows.size() != k) structural("block '" + key + "' has the wrong size");
    for (std::size_t r = 0; r < k; ++r) {
      if (!rows[r].is_array() || rows[r].size() != k) structural("block '" + key + "' has the wrong size");
      for (std::size_t c = 0; c < k; ++c) {
        cf.block(a.index, b.index)(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
            complex_entry(rows[r][c]);
      }
    }
  }
  return cf;
}

Json to_json(const CheckResult& r) {
  return Json{{"relation", r.relation}, {"max_deviation", r.max_deviation}, {"pass", r.pass}};
}

Json to_json(const CheckReport& r) {
  Json out = Json::array();
  for (const auto& c : r) out.push_back(to_json(c));
  return out;
}

Json to_json(const BipartiteGraph& g, const BipartiteGraph& h, const IsoVerdict& v) {
  Json out{{"isomorphic", v.isomorphic}};
  if (v.witness) {
    Json w = Json::object();
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) w[edge_key(g, e)] = edge_key(h, v.witness->forward[e]);
    out["witness"] = std::move(w);
  } else {
    out["witness"] = nullptr;
  }
  out["reason"] = v.reason ? Json(std::string(to_string(*v.reason))) : Json(nullptr);
  return out;
}

namespace {

std::string dot_id(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out + "\"";
}

}  // namespace

std::string to_dot(const BipartiteGraph& g) {
  std::ostringstream os;
  os << "graph G {\n";
  for (const auto& u : g.u_labels()) os << "  " << dot_id(u) << " [shape=circle, style=filled, fillcolor=black, fontcolor=white];\n";
  for (const auto& v : g.v_labels()) os << "  " << dot_id(v) << " [shape=circle];\n";
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    auto [a, b] = g.edge_labels(e);
    os << "  " << dot_id(a) << " -- " << dot_id(b) << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace bga
