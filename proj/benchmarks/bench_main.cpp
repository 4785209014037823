#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>
#include <string>

#include "artin/character.hpp"
#include "artin/fox.hpp"
#include "artin/groebner.hpp"
#include "artin/kt_module.hpp"
#include "artin/laurent_parse.hpp"
#include "artin/polyhedron.hpp"
#include "artin/sigma1.hpp"

using namespace artin;

namespace {

LabeledGraph load(const std::string& name) {
  std::ifstream in(std::string(ARTIN_BENCH_DATA_DIR) + "/" + name + ".artin");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

// Cycle on n vertices with alternating labels 4 and 6.
LabeledGraph even_cycle(int n) {
  LabeledGraph g;
  for (int i = 0; i < n; ++i) g.add_vertex("c" + std::to_string(i));
  for (int i = 0; i < n; ++i) {
    g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % n), i % 2 ? 6 : 4);
  }
  return g;
}

void BM_ComplementPolyhedron(benchmark::State& state) {
  const auto g = even_cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(complement_polyhedron(g, 1));
}
BENCHMARK(BM_ComplementPolyhedron)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

void BM_DecideSigma1(benchmark::State& state) {
  const auto g = load("f1");
  const auto chi = parse_character(g, "v=1,s=1,u=-1,w=-1");
  for (auto _ : state) benchmark::DoNotOptimize(decide_sigma1(chi));
}
BENCHMARK(BM_DecideSigma1);

void BM_UnitIdealReport(benchmark::State& state) {
  const std::vector<std::string> vars{"s", "u", "v", "w"};
  const std::vector<LaurentPoly<RationalField>> gens{
      parse_laurent("1+u*v", vars), parse_laurent("1+s*u+(s*u)^2", vars),
      parse_laurent("1+v*w", vars), parse_laurent("1+s*w", vars)};
  for (auto _ : state) benchmark::DoNotOptimize(unit_ideal_report(gens));
}
BENCHMARK(BM_UnitIdealReport)->Unit(benchmark::kMillisecond);

void BM_Jacobian(benchmark::State& state) {
  const auto g = load("f1");
  for (auto _ : state) benchmark::DoNotOptimize(jacobian(g));
}
BENCHMARK(BM_Jacobian);

// Star forest: one V vertex joined to n W vertices with m = 2.
void BM_Certificate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<std::string> ws;
  std::vector<ForestEdge> edges;
  for (int i = 0; i < n; ++i) {
    ws.push_back("w" + std::to_string(i));
    edges.push_back({"v", ws.back(), 2 + i % 3});
  }
  const BipartiteForest t({"v"}, ws, edges);
  const auto g = t.as_graph();
  std::vector<Rational> values(g.vertex_count(), Rational(-1));
  values[g.index_of("v")] = 1;
  const Character chi(g, values);
  for (auto _ : state) benchmark::DoNotOptimize(certify_not_finitely_generated(t, chi));
}
BENCHMARK(BM_Certificate)->DenseRange(1, 5, 2)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
