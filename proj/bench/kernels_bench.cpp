// Serial reference vs OpenMP variant of each kernel on the same input.
// Run with OMP_NUM_THREADS set to compare thread counts.

#include <benchmark/benchmark.h>

#include <random>

#include "symm/core/kernels.hpp"
#include "symm/geomset/instances.hpp"
#include "symm/graph/families.hpp"
#include "symm/graph/forbidden.hpp"
#include "symm/oracle/laws.hpp"

using namespace symm;

namespace {

Execution mode(const benchmark::State& s) { return s.range(0) ? Execution::parallel : Execution::serial; }

void label(benchmark::State& s) { s.SetLabel(s.range(0) ? "openmp" : "serial"); }

// Orbit of a two-edge removal under Aut(G_n).
void BM_OrbitClosure(benchmark::State& s) {
  auto gn = graph::gen_Gn(static_cast<std::size_t>(s.range(1)));
  auto lat = graph::edge_lattice(gn.graph);
  Bitset seed = Bitset::full(gn.graph.edge_count());
  seed.reset(0);
  seed.reset(gn.graph.edge_count() - 1);
  for (auto _ : s) benchmark::DoNotOptimize(orbit_closure(*lat.lattice, seed, 1000000, mode(s)));
  label(s);
}
BENCHMARK(BM_OrbitClosure)->ArgsProduct({{0, 1}, {3, 6}});

// Cospherical 5-subset search on grid points with none to find.
void BM_FirstSubset(benchmark::State& s) {
  std::mt19937_64 rng(0);
  std::uniform_int_distribution<long> c(-20, 20);
  geomset::PointSet pts;
  while (pts.size() < static_cast<std::size_t>(s.range(1))) pts.push_back(geomset::point(c(rng), c(rng), c(rng)));
  Bitset kept = Bitset::full(pts.size());
  for (auto _ : s) benchmark::DoNotOptimize(geomset::find_cospherical(pts, kept, 5, false, mode(s)));
  label(s);
}
BENCHMARK(BM_FirstSubset)->ArgsProduct({{0, 1}, {14, 18}})->Unit(benchmark::kMillisecond);

// Law-check truth table of the team predicate.
void BM_TruthTable(benchmark::State& s) {
  const std::size_t n = static_cast<std::size_t>(s.range(1));
  geomset::Relation r{n, std::vector<std::vector<bool>>(n, std::vector<bool>(n, false))};
  for (auto& row : r.respects) row[0] = true;
  auto p = geomset::team_predicate(r, 4);
  auto universe = oracle::all_subsets(n);
  for (auto _ : s) benchmark::DoNotOptimize(oracle::truth_table(p, universe, mode(s)));
  label(s);
}
BENCHMARK(BM_TruthTable)->ArgsProduct({{0, 1}, {5, 6}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
