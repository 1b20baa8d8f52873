#include "commands.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "bga/error.hpp"

namespace bga::cli {

namespace {

std::string certificate_hex(const BipartiteGraph& g) {
  return to_hex(canonical_certificate(derived_structure(g)));
}

Json quadruple_json(const BipartiteGraph& g, const Quadruple& q) {
  Json edges = Json::array();
  for (auto e : q.members) edges.push_back(edge_json(g, e));
  Json pairing = Json::array();
  for (const auto& p : q.pairing) pairing.push_back(Json::array({edge_json(g, p[0]), edge_json(g, p[1])}));
  return Json{{"edges", std::move(edges)}, {"pairing", std::move(pairing)}};
}

Json report_json(const PhiReport& r) {
  return Json{{"checks", to_json(r.checks)},
              {"pass", r.pass},
              {"caveat", r.caveat ? Json(*r.caveat) : Json(nullptr)}};
}

}  // namespace

CommandResult cmd_analyze(const BipartiteGraph& g) {
  const auto s = derived_structure(g);
  Json quads = Json::array();
  for (const auto& q : s.quadruples) quads.push_back(quadruple_json(g, q));
  Json loose = Json::array();
  for (auto e : s.loose) loose.push_back(edge_json(g, e));
  const bool k23 = contains_k23(g);
  const auto reduced = reduce_all_loose_edges(g);

  CommandResult r;
  r.json = Json{
      {"graph",
       {{"u_count", g.u_count()}, {"v_count", g.v_count()}, {"edge_count", g.edge_count()},
        {"connected", is_connected(g)}}},
      {"quadruples", std::move(quads)},
      {"loose", std::move(loose)},
      {"skeleton", to_json(g, spec_skeleton(s))},
      {"certificate", to_hex(canonical_certificate(s))},
      {"k23_flag", k23},
      {"advisory", k23 ? Json(kK23Advisory) : Json(nullptr)},
      {"scalar_summands", reduced.scalar_summands},
  };
  return r;
}

CommandResult cmd_iso(const BipartiteGraph& g, const BipartiteGraph& h, const IsoOptions& opt) {
  CommandResult r;
  const auto verdict = decide_iso(g, h);
  r.json = to_json(g, h, verdict);
  if (verdict.witness) {
    const auto w = verify_witness(g, h, *verdict.witness);
    r.json["witness_valid"] = w.valid;
    r.ok = r.ok && w.valid;
  }
  if (opt.oracle) {
    const auto oracle = brute_force_iso(g, h, opt.bound);
    const bool agree = oracle.isomorphic == verdict.isomorphic;
    r.json["oracle"] = Json{{"isomorphic", oracle.isomorphic}, {"agree", agree}};
    r.ok = r.ok && agree;
  }
  if (opt.verify_phi && verdict.witness) {
    const auto ts = default_t_samples(opt.seed);
    const auto phi = verify_phi(g, h, *verdict.witness, ts);
    r.json["phi"] = report_json(phi);
    r.json["phi"]["t_samples"] = ts;
    r.json["phi"]["seed"] = opt.seed;
    r.ok = r.ok && phi.pass;
  }
  return r;
}

CommandResult cmd_repcheck(const BipartiteGraph& g, const RepcheckOptions& opt) {
  const std::vector<double> ts = opt.t ? *opt.t : default_t_samples(opt.seed);
  const auto rep = standard_rep(g, ts);
  const auto gp = check_gp(rep);
  const auto gc = check_gc(edge_generators(rep));

  // Sandwich, words and commutants are evaluated per irreducible summand.
  std::size_t sandwich_checked = 0, sandwich_applicable = 0;
  double sandwich_norm = 0.0;
  bool sandwich_pass = true;
  std::size_t words_checked = 0;
  double word_norm = 0.0;
  bool irreducible = true;

  std::vector<std::string> labels;
  for (std::size_t x = 0; x < g.vertex_count(); ++x) labels.push_back(g.label(g.vertex_at(x)));

  for (std::size_t i = 0; i < rep.summands.size(); ++i) {
    const auto part = summand_rep(rep, i);
    irreducible = irreducible && commutant_dim(part) == 1;

    for (Side side : {Side::U, Side::V}) {
      const auto& xs = side == Side::U ? g.u_labels() : g.v_labels();
      const auto& ys = side == Side::U ? g.v_labels() : g.u_labels();
      for (std::size_t a = 0; a < xs.size(); ++a) {
        for (std::size_t b = a + 1; b < xs.size(); ++b) {
          for (const auto& y : ys) {
            const auto s = sandwich_check(part, xs[a], y, xs[b]);
            ++sandwich_checked;
            if (!s.applicable) continue;
            ++sandwich_applicable;
            sandwich_norm = std::max(sandwich_norm, s.norm);
            sandwich_pass = sandwich_pass && s.pass;
          }
        }
      }
    }

    std::vector<std::string> word;
    std::function<void()> walk = [&]() {
      if (word.size() >= 2 && !is_path_word(g, word)) {
        ++words_checked;
        word_norm = std::max(word_norm, max_abs(evaluate_word(part, word)));
      }
      if (word.size() == opt.max_word_length) return;
      for (const auto& x : labels) {
        word.push_back(x);
        walk();
        word.pop_back();
      }
    };
    walk();
  }

  Json commutant{{"summands", rep.summands.size()}, {"irreducible", irreducible}};
  bool commutant_ok = irreducible;
  if (rep.dim <= 24) {
    // Pairwise inequivalent irreducibles: the commutant is one scalar per summand.
    const auto total = commutant_dim(rep);
    commutant["total_dim"] = total;
    commutant_ok = commutant_ok && total == rep.summands.size();
  }
  commutant["pass"] = commutant_ok;

  const bool words_ok = word_norm <= kTau;
  CommandResult r;
  r.json = Json{
      {"t_samples", ts},
      {"seed", opt.seed},
      {"dim", rep.dim},
      {"gp", to_json(gp)},
      {"gc", to_json(gc)},
      {"sandwich",
       {{"checked", sandwich_checked}, {"applicable", sandwich_applicable}, {"max_norm", sandwich_norm},
        {"pass", sandwich_pass}}},
      {"commutant", std::move(commutant)},
      {"words",
       {{"max_length", opt.max_word_length}, {"non_path_checked", words_checked}, {"max_norm", word_norm},
        {"pass", words_ok}}},
      {"caveat", contains_k23(g) ? Json("graph contains K_{2,3}; checks cover representations of "
                                        "dimension <= 2 only and are necessary conditions")
                                 : Json(nullptr)},
  };
  r.ok = all_pass(gp) && all_pass(gc) && sandwich_pass && commutant_ok && words_ok;
  return r;
}

CommandResult cmd_genpos(const BipartiteGraph& g, const SynthesisOptions& opt) {
  SynthesisStats stats;
  const auto cf = synthesize(g, opt, &stats);
  const auto res = condition_residuals(cf);
  const auto pf = build_projection_family(cf);
  const auto gp = check_gp(pf.rep);
  const auto gen = check_generic_position(pf.rep);

  Json gen_edges = Json::array();
  for (const auto& e : gen.edges) {
    gen_edges.push_back(Json{{"edge", edge_json(g, e.edge)},
                             {"im_u_ker_v", e.im_u_ker_v},
                             {"ker_u_im_v", e.ker_u_im_v}});
  }
  Json ranks = Json::object();
  for (std::size_t x = 0; x < g.vertex_count(); ++x) {
    ranks[g.label(g.vertex_at(x))] = numerical_rank(pf.rep.images[x]);
  }

  CommandResult r;
  r.json = Json{
      {"k", opt.k},
      {"seed", opt.seed},
      {"max_iter", opt.max_iter},
      {"tol", opt.tol},
      {"iterations", stats.iterations},
      {"residuals",
       {{"column", res.column}, {"row", res.row}, {"pattern", res.pattern},
        {"min_edge_singular_value", res.min_edge_singular_value}}},
      {"family", to_json(cf)},
      {"gp", to_json(gp)},
      {"generic_position", {{"edges", std::move(gen_edges)}, {"pass", gen.pass}}},
      {"ranks", std::move(ranks)},
  };
  r.ok = all_pass(gp) && gen.pass && res.column <= kSynthAccept && res.row <= kSynthAccept;

  if (g.u_count() == 2 && g.v_count() == 2 && g.edge_count() == 4) {
    const auto hf = halmos_decompose(pf.rep);
    r.json["halmos"] = Json{{"C", matrix_json(hf.C)}, {"S", matrix_json(hf.S)}, {"residual", hf.residual}};
    r.ok = r.ok && hf.residual <= kSynthAccept;
  }
  return r;
}

CommandResult cmd_convert(const Hypergraph& h) {
  CommandResult r;
  r.json = to_json(from_hypergraph(h));
  return r;
}

// ---------------------------------------------------------------------------
// Census

namespace {

using GraphKey = std::tuple<std::size_t, std::size_t, std::vector<Edge>>;

GraphKey key_of(const BipartiteGraph& g) { return {g.u_count(), g.v_count(), g.edges()}; }

BipartiteGraph swap_sides(const BipartiteGraph& g) {
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) edges.push_back({e.v, e.u});
  return BipartiteGraph::from_indices(g.v_labels(), g.u_labels(), std::move(edges));
}

std::vector<std::string> numbered(const char* prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

/// Index-level union, relabelled u1.., v1...
BipartiteGraph union_of(const std::vector<const BipartiteGraph*>& parts) {
  std::size_t nu = 0, nv = 0;
  std::vector<Edge> edges;
  for (const auto* p : parts) {
    for (const auto& e : p->edges()) edges.push_back({e.u + nu, e.v + nv});
    nu += p->u_count();
    nv += p->v_count();
  }
  return BipartiteGraph::from_indices(numbered("u", nu), numbered("v", nv), std::move(edges));
}

}  // namespace

std::vector<BipartiteGraph> connected_graphs(std::size_t max_edges) {
  if (max_edges > 8) throw Error(ErrorCode::SizeBoundExceeded, "census is limited to 8 edges");
  std::vector<BipartiteGraph> all;
  if (max_edges == 0) return all;
  std::vector<BipartiteGraph> layer{canonical_form(complete_bipartite(1, 1))};
  for (std::size_t m = 1;; ++m) {
    all.insert(all.end(), layer.begin(), layer.end());
    if (m == max_edges) break;
    std::map<GraphKey, BipartiteGraph> next;
    auto add = [&](std::size_t nu, std::size_t nv, std::vector<Edge> edges) {
      auto c = canonical_form(BipartiteGraph::from_indices(numbered("u", nu), numbered("v", nv), std::move(edges)));
      auto k = key_of(c);
      next.emplace(std::move(k), std::move(c));
    };
    for (const auto& g : layer) {
      const auto nu = g.u_count(), nv = g.v_count();
      for (std::size_t u = 0; u < nu; ++u) {
        for (std::size_t v = 0; v < nv; ++v) {
          if (g.adjacent(u, v)) continue;
          auto edges = g.edges();
          edges.push_back({u, v});
          add(nu, nv, std::move(edges));
        }
        auto edges = g.edges();
        edges.push_back({u, nv});
        add(nu, nv + 1, std::move(edges));
      }
      for (std::size_t v = 0; v < nv; ++v) {
        auto edges = g.edges();
        edges.push_back({nu, v});
        add(nu + 1, nv, std::move(edges));
      }
    }
    layer.clear();
    for (auto& [k, g] : next) layer.push_back(std::move(g));
  }
  return all;
}

std::vector<BipartiteGraph> graphs_without_isolated_vertices(std::size_t max_edges) {
  const auto comps = connected_graphs(max_edges);
  // Oriented copies: ids 2i (as stored) and 2i+1 (sides swapped); a
  // component isomorphic to its swap without swapping keeps one id.
  std::vector<BipartiteGraph> oriented;
  std::vector<std::size_t> swap_id, edges_of;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const auto sw = swap_sides(comps[i]);
    const auto iso = is_graph_isomorphic(comps[i], sw);
    const bool self_dual = iso && !iso->swapped;
    const std::size_t a = oriented.size();
    oriented.push_back(comps[i]);
    edges_of.push_back(comps[i].edge_count());
    if (self_dual) {
      swap_id.push_back(a);
    } else {
      oriented.push_back(sw);
      edges_of.push_back(comps[i].edge_count());
      swap_id.push_back(a + 1);
      swap_id.push_back(a);
    }
  }

  std::vector<BipartiteGraph> out(comps.begin(), comps.end());
  std::set<std::vector<std::size_t>> seen;
  std::vector<std::size_t> pick;
  std::function<void(std::size_t, std::size_t)> extend = [&](std::size_t from, std::size_t budget) {
    if (pick.size() >= 2) {
      std::vector<std::size_t> swapped;
      for (auto id : pick) swapped.push_back(swap_id[id]);
      std::sort(swapped.begin(), swapped.end());
      const auto key = std::min(pick, swapped);
      if (seen.insert(key).second) {
        std::vector<const BipartiteGraph*> parts;
        for (auto id : key) parts.push_back(&oriented[id]);
        out.push_back(union_of(parts));
      }
    }
    for (std::size_t id = from; id < oriented.size(); ++id) {
      if (edges_of[id] > budget) continue;
      pick.push_back(id);
      extend(id, budget - edges_of[id]);
      pick.pop_back();
    }
  };
  extend(0, max_edges);
  return out;
}

CommandResult cmd_census(const CensusOptions& opt) {
  if (opt.max_edges > 8) throw Error(ErrorCode::SizeBoundExceeded, "census is limited to 8 edges");
  const auto graphs = opt.disconnected ? graphs_without_isolated_vertices(opt.max_edges)
                                       : connected_graphs(opt.max_edges);
  std::map<std::pair<std::size_t, std::string>, std::vector<const BipartiteGraph*>> classes;
  for (const auto& g : graphs) classes[{g.edge_count(), certificate_hex(g)}].push_back(&g);

  Json out_classes = Json::array();
  for (auto& [key, members] : classes) {
    std::sort(members.begin(), members.end(),
              [](const BipartiteGraph* a, const BipartiteGraph* b) { return key_of(*a) < key_of(*b); });
    Json reps = Json::array();
    for (const auto* g : members) reps.push_back(to_json(*g));
    const auto s = derived_structure(*members.front());
    out_classes.push_back(Json{{"edge_count", key.first},
                               {"quadruples", s.quadruples.size()},
                               {"loose", s.loose.size()},
                               {"certificate", key.second},
                               {"size", members.size()},
                               {"representatives", std::move(reps)}});
  }
  CommandResult r;
  r.json = Json{{"max_edges", opt.max_edges},
                {"connected_only", !opt.disconnected},
                {"graph_count", graphs.size()},
                {"class_count", classes.size()},
                {"classes", std::move(out_classes)}};
  return r;
}

}  // namespace bga::cli
