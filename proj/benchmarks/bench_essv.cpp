#include <benchmark/benchmark.h>

#include <random>

#include "essv/builders.hpp"
#include "essv/constructions.hpp"
#include "essv/decide.hpp"

using namespace essv;

namespace {

// Random complete DFA over {a,b}; same seed, same automaton.
Dfa random_dfa(std::size_t states, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<State> delta(states * 2);
  for (auto& t : delta) t = static_cast<State>(rng() % states);
  std::vector<bool> finals(states);
  for (std::size_t q = 0; q < states; ++q) finals[q] = rng() % 2 == 1;
  return minimize(Dfa(Alphabet::of("ab"), states, 0, finals, delta));
}

// Largest syntactic monoid among a few seeds.
Dfa hard_dfa(std::size_t states) {
  Dfa best = random_dfa(states, 1);
  std::size_t size = syntactic_stamp(best).monoid().size();
  for (std::uint64_t seed = 2; seed < 40; ++seed) {
    Dfa d = random_dfa(states, seed);
    const std::size_t s = syntactic_stamp(d).monoid().size();
    if (s > size) {
      size = s;
      best = std::move(d);
    }
  }
  return best;
}

void BM_SyntacticStamp(benchmark::State& state) {
  const Dfa d = hard_dfa(static_cast<std::size_t>(state.range(0)));
  std::size_t size = 0;
  for (auto _ : state) {
    const Stamp s = syntactic_stamp(d);
    size = s.monoid().size();
    benchmark::DoNotOptimize(size);
  }
  state.counters["monoid"] = static_cast<double>(size);
}
BENCHMARK(BM_SyntacticStamp)->DenseRange(3, 6)->Unit(benchmark::kMicrosecond);

void BM_EssentialQuotient(benchmark::State& state) {
  const Stamp s = syntactic_stamp(hard_dfa(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(essential_quotient(s).quotient_stamp.monoid().size());
  state.counters["monoid"] = static_cast<double>(s.monoid().size());
}
BENCHMARK(BM_EssentialQuotient)->DenseRange(3, 5)->Unit(benchmark::kMicrosecond);

void BM_EquationalCheck(benchmark::State& state) {
  const Stamp s = syntactic_stamp(hard_dfa(static_cast<std::size_t>(state.range(0))));
  const auto basis = builtin_basis("J").identities;
  for (auto _ : state) benchmark::DoNotOptimize(is_essentially_v_equational(s, basis));
  state.counters["monoid"] = static_cast<double>(s.monoid().size());
}
BENCHMARK(BM_EquationalCheck)->DenseRange(3, 5)->Unit(benchmark::kMicrosecond);

void BM_JoinWithLi(benchmark::State& state) {
  const Dfa d = hard_dfa(4);
  for (auto _ : state) benchmark::DoNotOptimize(in_join_with_li(d, "R").in_join);
}
BENCHMARK(BM_JoinWithLi)->Unit(benchmark::kMicrosecond);

void BM_SimonProfile(benchmark::State& state) {
  const Alphabet ab = Alphabet::of("ab");
  std::size_t states = 0;
  for (auto _ : state) {
    states = simon_profile(ab, static_cast<std::size_t>(state.range(0))).state_count();
    benchmark::DoNotOptimize(states);
  }
  state.counters["states"] = static_cast<double>(states);
}
BENCHMARK(BM_SimonProfile)->DenseRange(1, 4)->Unit(benchmark::kMicrosecond);

void BM_J1Report(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(j1_counterexample_report().rows.size());
}
BENCHMARK(BM_J1Report)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
