#include <benchmark/benchmark.h>

#include <string>

#include "fixtures.hpp"
#include "nomstruct/analyzer.hpp"
#include "nomstruct/parser.hpp"
#include "nomstruct/pretty.hpp"
#include "nomstruct/record_type.hpp"
#include "nomstruct/token.hpp"
#include "table_gen.hpp"

using namespace nomstruct;
namespace ts = nomstruct::testsupport;

namespace {

const std::string& corpus_text() {
  static const std::string text =
      ts::read_file(std::string(NOMSTRUCT_FIXTURES) + "/figs123.cls");
  return text;
}

std::string scale_text(int classes) {
  return to_source(ts::scale_program(classes, 5));
}

void BM_tokenize_corpus(benchmark::State& state) {
  SourceProgram src{corpus_text(), "<bench>"};
  for (auto _ : state) benchmark::DoNotOptimize(tokenize(src));
}
BENCHMARK(BM_tokenize_corpus);

void BM_parse_corpus(benchmark::State& state) {
  SourceProgram src{corpus_text(), "<bench>"};
  for (auto _ : state) benchmark::DoNotOptimize(parse_program(src));
}
BENCHMARK(BM_parse_corpus);

void BM_build_table(benchmark::State& state) {
  SourceProgram src{scale_text(static_cast<int>(state.range(0))), "<bench>"};
  for (auto _ : state) {
    state.PauseTiming();
    ParseResult parsed = parse_program(src);
    state.ResumeTiming();
    benchmark::DoNotOptimize(build_class_table(std::move(parsed.decls)));
  }
}
BENCHMARK(BM_build_table)->Arg(20)->Arg(100);

void BM_subtype_all_pairs(benchmark::State& state) {
  ClassTable table = ts::must_table(
      scale_text(static_cast<int>(state.range(0))), "<bench>");
  TableRecordTypes t = build_table_record_types(table);
  NodeId n = static_cast<NodeId>(t.graph.nodes.size());
  for (auto _ : state) {
    StructuralDecider decider(t.graph);
    int yes = 0;
    for (NodeId a = 0; a < n; ++a)
      for (NodeId b = 0; b < n; ++b)
        yes += decider.subtype(a, b, SubtypeMode::WidthOnly) ? 1 : 0;
    benchmark::DoNotOptimize(yes);
  }
}
BENCHMARK(BM_subtype_all_pairs)->Arg(20)->Arg(100);

void BM_full_report(benchmark::State& state) {
  ClassTable table = ts::must_table(
      scale_text(static_cast<int>(state.range(0))), "<bench>");
  for (auto _ : state)
    benchmark::DoNotOptimize(full_report(table));
}
BENCHMARK(BM_full_report)->Arg(20)->Arg(50)->Arg(100)
    ->Unit(benchmark::kMillisecond);

void BM_typecheck_corpus(benchmark::State& state) {
  ClassTable table = ts::must_table(corpus_text(), "<bench>");
  for (auto _ : state)
    benchmark::DoNotOptimize(typecheck_bodies(table));
}
BENCHMARK(BM_typecheck_corpus);

}  // namespace

BENCHMARK_MAIN();
