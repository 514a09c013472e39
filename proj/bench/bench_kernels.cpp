// Serial reference against OpenMP for each kernel. Range argument is q.

#include <benchmark/benchmark.h>

#include "orthosum/kernels.hpp"
#include "orthosum/oracle.hpp"
#include "orthosum/orthogonal.hpp"
#include "orthosum/vector_geometry.hpp"

using namespace orthosum;

namespace {

kernels::FlatSet o2_set(const Field& f) {
  std::vector<FqMatrix> gens;
  for (const auto& g : enumerate_o2(f)) gens.push_back(g.matrix());
  return oracle::flatten(gens, 2);
}

template <auto Kernel>
void character_sums(benchmark::State& state) {
  const Field f = Field::of_order(state.range(0));
  const auto gens = o2_set(f);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(f, gens));
}

template <auto Kernel>
void sumset_distances(benchmark::State& state) {
  const Field f = Field::of_order(state.range(0));
  const auto gens = o2_set(f);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(f, gens));
}

template <auto Kernel>
void sphere_points(benchmark::State& state) {
  const Field f = Field::of_order(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(f, f.one(), 4));
}

template <auto Kernel>
void realizable_triples(benchmark::State& state) {
  const Field f = Field::of_order(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(f));
}

}  // namespace

BENCHMARK(character_sums<kernels::serial::character_sums>)->Arg(7)->Arg(13)->Arg(25)->Unit(benchmark::kMillisecond);
BENCHMARK(character_sums<kernels::omp::character_sums>)->Arg(7)->Arg(13)->Arg(25)->Unit(benchmark::kMillisecond);
BENCHMARK(sumset_distances<kernels::serial::sumset_distances>)->Arg(7)->Arg(13)->Arg(25)->Unit(benchmark::kMillisecond);
BENCHMARK(sumset_distances<kernels::omp::sumset_distances>)->Arg(7)->Arg(13)->Arg(25)->Unit(benchmark::kMillisecond);
BENCHMARK(sphere_points<kernels::serial::sphere_points>)->Arg(13)->Arg(25)->Unit(benchmark::kMillisecond);
BENCHMARK(sphere_points<kernels::omp::sphere_points>)->Arg(13)->Arg(25)->Unit(benchmark::kMillisecond);
BENCHMARK(realizable_triples<kernels::serial::realizable_triples>)->Arg(27)->Arg(49)->Unit(benchmark::kMillisecond);
BENCHMARK(realizable_triples<kernels::omp::realizable_triples>)->Arg(27)->Arg(49)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
