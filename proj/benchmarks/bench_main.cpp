#include <benchmark/benchmark.h>

#include <vector>

#include "bga/genpos.hpp"
#include "bga/iso.hpp"
#include "bga/repr.hpp"
#include "bga/skeleton.hpp"

namespace {

using namespace bga;

// Band graph: u_i is adjacent to v_{i-1}, v_i and v_{i+1}.
BipartiteGraph ladder(std::size_t n) {
  std::vector<std::string> u, v;
  for (std::size_t i = 0; i < n; ++i) {
    u.push_back("u" + std::to_string(i + 1));
    v.push_back("v" + std::to_string(i + 1));
  }
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i) {
    e.push_back({i, i});
    if (i + 1 < n) {
      e.push_back({i, i + 1});
      e.push_back({i + 1, i});
    }
  }
  return BipartiteGraph::from_indices(u, v, e);
}

void BM_DecideIsoComplete(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  const auto g = complete_bipartite(n, n);
  for (auto _ : st) benchmark::DoNotOptimize(decide_iso(g, g));
}
BENCHMARK(BM_DecideIsoComplete)->DenseRange(2, 5);

void BM_DecideIsoLadder(benchmark::State& st) {
  const auto g = ladder(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(decide_iso(g, g));
}
BENCHMARK(BM_DecideIsoLadder)->RangeMultiplier(2)->Range(4, 32);

void BM_CanonicalCertificate(benchmark::State& st) {
  const auto s = derived_structure(complete_bipartite(static_cast<std::size_t>(st.range(0)), 4));
  for (auto _ : st) benchmark::DoNotOptimize(canonical_certificate(s));
}
BENCHMARK(BM_CanonicalCertificate)->DenseRange(2, 5);

void BM_Synthesize(benchmark::State& st) {
  const auto g = complete_bipartite(2, 2);
  std::uint64_t seed = 0;
  for (auto _ : st) benchmark::DoNotOptimize(synthesize(g, {static_cast<std::size_t>(st.range(0)), seed++}));
}
BENCHMARK(BM_Synthesize)->DenseRange(1, 4);

void BM_StandardRepChecks(benchmark::State& st) {
  const auto g = complete_bipartite(static_cast<std::size_t>(st.range(0)), 3);
  const std::vector<double> ts{0.25, 0.5, 0.75};
  for (auto _ : st) {
    const auto rep = standard_rep(g, ts);
    benchmark::DoNotOptimize(check_gp(rep));
    benchmark::DoNotOptimize(check_gc(edge_generators(rep)));
  }
}
BENCHMARK(BM_StandardRepChecks)->DenseRange(2, 4);

}  // namespace

BENCHMARK_MAIN();
