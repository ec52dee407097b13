#include <benchmark/benchmark.h>

#include <filesystem>
#include <string>

#include "vlang/analysis.hpp"
#include "vlang/desugar.hpp"
#include "vlang/model_parser.hpp"
#include "vlang/text.hpp"

namespace {

std::string Data(const char* name) {
  return vlang::ReadFile(std::filesystem::path(VLANG_BENCH_DATA_DIR) / name);
}

const vlang::ModelParser& Parser() {
  static const vlang::ModelParser p(vlang::ParseGrammar(Data("cd.mclang")));
  return p;
}

vlang::Model Load(const char* name) {
  return vlang::Model::FromAst(
      vlang::DesugarToMinimal(Parser().schema(), Parser().Parse(Data(name))));
}

std::string Chain(int n) {
  std::string text = "classdiagram C {";
  for (int i = 0; i < n; ++i) {
    text += " class K" + std::to_string(i);
    if (i + 1 < n) text += " extends K" + std::to_string(i + 1);
    text += ";";
  }
  return text + " }";
}

void BM_ParseGrammar(benchmark::State& state) {
  std::string text = Data("cd.mclang");
  for (auto _ : state) benchmark::DoNotOptimize(vlang::ParseGrammar(text));
}
BENCHMARK(BM_ParseGrammar);

void BM_ParseModel(benchmark::State& state) {
  std::string text = Chain(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Parser().Parse(text));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ParseModel)->RangeMultiplier(4)->Range(4, 256)->Complexity();

void BM_EnumerateBase(benchmark::State& state) {
  std::vector<std::string> classes;
  for (int i = 0; i < state.range(0); ++i) classes.push_back("C" + std::to_string(i));
  vlang::Universe u{{classes.begin(), classes.end()}, {}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(vlang::EnumerateAll(u, vlang::Validity()).size());
  }
}
BENCHMARK(BM_EnumerateBase)->DenseRange(2, 5);

void BM_Refinement(benchmark::State& state) {
  vlang::SemanticsConfig c;
  c.mapping_features = {vlang::kMapSuperDirect};
  c.bounds.max_objects = static_cast<std::size_t>(state.range(0));
  auto refined = Load("refined.cd");
  auto abstract = Load("abstract.cd");
  for (auto _ : state) {
    benchmark::DoNotOptimize(vlang::CheckRefinement(refined, abstract, c).holds);
  }
}
BENCHMARK(BM_Refinement)->DenseRange(0, 2);

}  // namespace

BENCHMARK_MAIN();
