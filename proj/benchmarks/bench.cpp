// Microbenchmarks for the four kernels everything else is built on:
// nil/braid reduction, identity testing, the deletion-set search, and the
// universal-group interval DP.

#include <benchmark/benchmark.h>

#include "coxlen/reflength.hpp"
#include "coxlen/rewrite.hpp"
#include "coxlen/universal.hpp"
#include "coxlen/word.hpp"

using namespace coxlen;

namespace {

Word random_word(int rank, std::size_t len, std::uint64_t seed) {
  std::uint64_t state = seed;
  RawWord w;
  for (std::size_t i = 0; i < len; ++i) {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    w.push_back(char((state >> 33) % std::uint64_t(rank)));
  }
  return Word(std::move(w));
}

void BM_reduce(benchmark::State& state) {
  auto sys = CoxeterSystem::triangle(3, 3, 4);
  Word w = random_word(3, std::size_t(state.range(0)), 42);
  for (auto _ : state) {
    clear_identity_cache();
    benchmark::DoNotOptimize(reduce(w, sys));
  }
}
BENCHMARK(BM_reduce)->Arg(8)->Arg(12)->Arg(16);

void BM_is_identity(benchmark::State& state) {
  auto sys = CoxeterSystem::triangle(3, 3, 4);
  // w * w^-1: a guaranteed identity word of length 2*range.
  Word half = random_word(3, std::size_t(state.range(0)), 7);
  RawWord both = half.raw();
  both.append(half.raw().rbegin(), half.raw().rend());
  Word w(std::move(both));
  for (auto _ : state) {
    clear_identity_cache();
    benchmark::DoNotOptimize(is_identity(w, sys));
  }
}
BENCHMARK(BM_is_identity)->Arg(4)->Arg(6)->Arg(8);

void BM_reflection_length(benchmark::State& state) {
  auto sys = CoxeterSystem::single_braided(3, 4);
  Word w = Word(std::vector<int>{1, 2, 3}).pow(int(state.range(0)));
  for (auto _ : state) {
    clear_identity_cache();
    benchmark::DoNotOptimize(reflection_length(w, sys));
  }
}
BENCHMARK(BM_reflection_length)->Arg(2)->Arg(3)->Arg(4);

void BM_universal_dp(benchmark::State& state) {
  Word w = random_word(4, std::size_t(state.range(0)), 99);
  for (auto _ : state)
    benchmark::DoNotOptimize(universal_reflection_length(w));
}
BENCHMARK(BM_universal_dp)->Arg(16)->Arg(32)->Arg(64)->Arg(128);

}  // namespace

BENCHMARK_MAIN();
