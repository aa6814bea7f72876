#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "bdg/codec.hpp"
#include "bdg/conditions.hpp"
#include "bdg/generators.hpp"
#include "bdg/hamilton.hpp"
#include "bdg/matching.hpp"
#include "bdg/oracle.hpp"

using namespace bdg;

namespace {

void BM_engine_random_satisfying(benchmark::State& state) {
  const int a = static_cast<int>(state.range(0));
  std::vector<BipartiteDigraph> pool;
  for (std::uint64_t seed = 0; seed < 16; ++seed)
    pool.push_back(random_satisfying(a, 2, seed));
  std::size_t next = 0;
  for (auto _ : state) {
    Outcome out = find_hamiltonian(pool[next++ % pool.size()], EngineMode::full);
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_engine_random_satisfying)->Arg(4)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_count_cycles_complete(benchmark::State& state) {
  const int a = static_cast<int>(state.range(0));
  BipartiteDigraph d = complete_bipartite(a, a);
  for (auto _ : state) {
    long long n = count_cycles(d, 2 * a);
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_count_cycles_complete)->Arg(3)->Arg(4)->Arg(5)->Arg(6);

void BM_brute_cycle_two_block(benchmark::State& state) {
  const int a = static_cast<int>(state.range(0));
  BipartiteDigraph d = two_block_family({a, a + 4, 1});
  for (auto _ : state) {
    auto cyc = brute_cycle(d, 2 * a);  // provably absent: full backtracking
    benchmark::DoNotOptimize(cyc);
  }
}
BENCHMARK(BM_brute_cycle_two_block)->Arg(3)->Arg(5)->Arg(7);

void BM_condition_check(benchmark::State& state) {
  const int a = static_cast<int>(state.range(0));
  BipartiteDigraph d = random_digraph(a, a, 0.5, 1);
  for (auto _ : state) {
    ConditionReport report = check(d, ConditionSpec::ak_star(2));
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_condition_check)->Arg(16)->Arg(64)->Arg(256);

void BM_complete_matching(benchmark::State& state) {
  const int a = static_cast<int>(state.range(0));
  BipartiteDigraph d = random_digraph(a, a, 0.1, 3);
  for (auto _ : state) {
    auto m = complete_matching(d);
    benchmark::DoNotOptimize(m);
  }
}
BENCHMARK(BM_complete_matching)->Arg(32)->Arg(128)->Arg(512);

void BM_codec_roundtrip(benchmark::State& state) {
  BipartiteDigraph d = random_digraph(64, 64, 0.5, 7);
  for (auto _ : state) {
    BipartiteDigraph back = parse_bdg(serialize_bdg(d));
    benchmark::DoNotOptimize(back);
  }
}
BENCHMARK(BM_codec_roundtrip);

void BM_exhaustive_a2(benchmark::State& state) {
  for (auto _ : state) {
    VerificationStats stats = exhaustive_verify(2, 2, EngineMode::full);
    benchmark::DoNotOptimize(stats);
  }
}
BENCHMARK(BM_exhaustive_a2);

void BM_enumeration_decode(benchmark::State& state) {
  for (auto _ : state)
    for (std::uint64_t code = 0; code < 4096; ++code) {
      BipartiteDigraph d = digraph_from_code(code, 3, 3);
      benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(BM_enumeration_decode);

}  // namespace

BENCHMARK_MAIN();
