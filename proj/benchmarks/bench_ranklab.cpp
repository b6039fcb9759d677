#include <benchmark/benchmark.h>

#include <map>

#include "ranklab/dixon.hpp"
#include "ranklab/oscsemi.hpp"
#include "ranklab/rank.hpp"
#include "ranklab/weil.hpp"

using namespace ranklab;

namespace {

const CharacterTable& cached(const std::string& spec) {
  static std::map<std::string, CharacterTable> memo;
  auto it = memo.find(spec);
  if (it == memo.end()) it = memo.emplace(spec, char_table(make_group(GroupSpec::parse(spec)))).first;
  return it->second;
}

void BM_GroupEnumeration(benchmark::State& st, const char* spec) {
  for (auto _ : st) benchmark::DoNotOptimize(make_group(GroupSpec::parse(spec)));
}
BENCHMARK_CAPTURE(BM_GroupEnumeration, GL_3_3, "GL:3:3")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_GroupEnumeration, Sp_4_3, "Sp:4:3")->Unit(benchmark::kMillisecond);

void BM_CharTable(benchmark::State& st, const char* spec) {
  auto g = make_group(GroupSpec::parse(spec));
  for (auto _ : st) benchmark::DoNotOptimize(char_table(g));
}
BENCHMARK_CAPTURE(BM_CharTable, GL_2_5, "GL:2:5")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_CharTable, GL_3_3, "GL:3:3")->Unit(benchmark::kMillisecond);

void BM_WeilOperator(benchmark::State& st) {
  auto g = make_group(GroupSpec::parse("Sp:4:3"));
  WeilRep w(g);
  size_t i = 0;
  for (auto _ : st) {
    benchmark::DoNotOptimize(w.op(i));
    i = (i + 7919) % g->order();
  }
}
BENCHMARK(BM_WeilOperator);

void BM_TensorRanks(benchmark::State& st, const char* spec) {
  const auto& t = cached(spec);
  for (auto _ : st) benchmark::DoNotOptimize(tensor_ranks(t));
}
BENCHMARK_CAPTURE(BM_TensorRanks, GL_3_3, "GL:3:3")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_TensorRanks, Sp_4_3, "Sp:4:3")->Unit(benchmark::kMillisecond);

void BM_EtaCorrespondence(benchmark::State& st) {
  auto pair = PairSpec::parse("SpO:4:3:form=1");
  const auto& t = cached("Sp:4:3");
  const auto& tp = cached(pair.second().str());
  for (auto _ : st) benchmark::DoNotOptimize(eta_correspondence(pair, t, tp));
}
BENCHMARK(BM_EtaCorrespondence)->Unit(benchmark::kMillisecond);

void BM_SemigroupCheck(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(semigroup_check(3, 1));
}
BENCHMARK(BM_SemigroupCheck)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
