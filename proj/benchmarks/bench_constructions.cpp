#include <benchmark/benchmark.h>

#include "scx/concat.hpp"
#include "scx/minimize.hpp"
#include "scx/unary.hpp"
#include "scx/witness.hpp"

namespace {

void BM_SquareConstruction(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const scx::Dfa w = scx::binary_witness(n);
  for (auto _ : state) {
    auto c = scx::square_construction(w);
    benchmark::DoNotOptimize(c.dfa.num_states());
  }
  state.counters["states"] = static_cast<double>(scx::expected_square_states(n));
}
BENCHMARK(BM_SquareConstruction)->DenseRange(6, 14, 2)->Unit(benchmark::kMillisecond);

void BM_MinimizeSquare(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const auto c = scx::square_construction(scx::binary_witness(n));
  for (auto _ : state) {
    auto m = scx::minimize(c.dfa);
    benchmark::DoNotOptimize(m.num_states());
  }
  state.counters["states"] = static_cast<double>(c.dfa.num_states());
}
BENCHMARK(BM_MinimizeSquare)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

void BM_OracleConcat(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const scx::Dfa w = scx::binary_witness(n);
  for (auto _ : state) {
    auto m = scx::oracle_concat(w, w);
    benchmark::DoNotOptimize(m.num_states());
  }
}
BENCHMARK(BM_OracleConcat)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_UnaryPowerLengthSets(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const auto k = static_cast<unsigned>(state.range(1));
  const auto s = scx::to_length_set(scx::unary_cycle_witness(n));
  for (auto _ : state) {
    auto d = scx::from_length_set(scx::unary_power(s, k));
    benchmark::DoNotOptimize(d.num_states());
  }
}
BENCHMARK(BM_UnaryPowerLengthSets)->ArgsProduct({{10, 30, 60}, {2, 5}});

void BM_UnaryPowerAutomaton(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const auto k = static_cast<unsigned>(state.range(1));
  const scx::Dfa w = scx::unary_cycle_witness(n);
  for (auto _ : state) {
    auto d = scx::minimize(scx::power_construction(w, k));
    benchmark::DoNotOptimize(d.num_states());
  }
}
BENCHMARK(BM_UnaryPowerAutomaton)->ArgsProduct({{10, 30, 60}, {2, 5}});

}  // namespace

BENCHMARK_MAIN();
