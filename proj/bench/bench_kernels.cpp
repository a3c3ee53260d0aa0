#include <benchmark/benchmark.h>

#include <random>

#include "imark/closedform.hpp"
#include "imark/periodicity.hpp"
#include "imark/sweep.hpp"

using namespace imark;

namespace {

const FamilyEvaluator& div2_evaluator() {
  static const FamilyEvaluator ev(RangeDiv2Family{5});
  return ev;
}

const GrundyTable& div2_table() {
  static const GrundyTable table = build_table(*div2_evaluator().spec(), 1'000'000);
  return table;
}

std::vector<Heap> random_heaps(std::size_t count) {
  std::mt19937_64 rng(17);
  std::vector<Heap> out(count);
  for (auto& n : out) n = rng() & ((Heap{1} << 40) - 1);
  return out;
}

void BM_CompareGrundySerial(benchmark::State& state) {
  const Heap upto = static_cast<Heap>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(sweep::compare_grundy_serial(div2_evaluator(), div2_table(), upto));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(upto));
}

void BM_CompareGrundyParallel(benchmark::State& state) {
  const Heap upto = static_cast<Heap>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(sweep::compare_grundy(div2_evaluator(), div2_table(), upto));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(upto));
}

void BM_MexSerial(benchmark::State& state) {
  const auto samples = random_heaps(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(sweep::mex_violations_serial(div2_evaluator(), samples));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_MexParallel(benchmark::State& state) {
  const auto samples = random_heaps(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sweep::mex_violations(div2_evaluator(), samples));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_ProfilesSerial(benchmark::State& state) {
  const auto seq = grundy_sequence(div2_table());
  for (auto _ : state) benchmark::DoNotOptimize(sweep::mismatch_profiles_serial(seq, 64));
}

void BM_ProfilesParallel(benchmark::State& state) {
  const auto seq = grundy_sequence(div2_table());
  for (auto _ : state) benchmark::DoNotOptimize(sweep::mismatch_profiles(seq, 64));
}

void BM_OracleBuild(benchmark::State& state) {
  const auto spec = GameSpec::make({1, 2, 3}, {2, 3});
  const Heap limit = static_cast<Heap>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_table(spec, limit));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_FastQueryNear2To60(benchmark::State& state) {
  std::vector<FamilyEvaluator> evs;
  evs.emplace_back(MarkFamily{});
  evs.emplace_back(IMark12Family{});
  evs.emplace_back(RangeDivTFamily{7});
  evs.emplace_back(RangeDiv2Family{8});
  evs.emplace_back(A2AFamily{4});
  const auto& ev = evs[static_cast<std::size_t>(state.range(0))];
  std::mt19937_64 rng(5);
  for (auto _ : state) benchmark::DoNotOptimize(ev.grundy((Heap{1} << 60) + (rng() >> 8)));
  state.SetLabel(ev.name());
}

}  // namespace

BENCHMARK(BM_CompareGrundySerial)->Arg(1'000'000);
BENCHMARK(BM_CompareGrundyParallel)->Arg(1'000'000);
BENCHMARK(BM_MexSerial)->Arg(100'000);
BENCHMARK(BM_MexParallel)->Arg(100'000);
BENCHMARK(BM_ProfilesSerial);
BENCHMARK(BM_ProfilesParallel);
BENCHMARK(BM_OracleBuild)->Arg(1'000'000)->Arg(10'000'000);
BENCHMARK(BM_FastQueryNear2To60)->DenseRange(0, 4);

BENCHMARK_MAIN();
