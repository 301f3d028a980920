// bench_pipeline.cpp
// Copyright (c) 2026, lexm contributors
// SPDX-License-Identifier: Apache-2.0
//
// Pipeline benchmarks over synthetic contracts of increasing size. The
// interesting figure is bytes/second through parse+analyze, which backs the
// one-second budget on megabyte documents.

#include <benchmark/benchmark.h>

#include <string>

#include "lexm/analyzer.hpp"
#include "lexm/docdiff.hpp"
#include "lexm/parser.hpp"
#include "lexm/render.hpp"

namespace {

std::string synthetic_contract(int clauses) {
    std::string source;
    source.reserve(static_cast<std::size_t>(clauses) * 700);
    for (int i = 1; i <= clauses; ++i) {
        source += "\\section[\\type{General}]{Clause " + std::to_string(i) + "}\n\n";
        source += "\\define{Term" + std::to_string(i) + "}{a defined expression.}\n\n";
        source += "The parties agree that \\def{Term" + std::to_string(i) +
                  "} applies under \\leg{Corporations Act section 87} per clause "
                  "\\ref{Clause 1}, payable as \\var{Amount} on demand.\n\n";
        source += "\\begin{itemize}\n\\item first obligation;\n"
                  "\\item second obligation; \\or\n\\item third obligation.\n"
                  "\\end{itemize}\n\n";
    }
    return source;
}

void BM_Parse(benchmark::State& state) {
    std::string source = synthetic_contract(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(lexm::parse(source, "bench"));
    }
    state.SetBytesProcessed(static_cast<int64_t>(state.iterations()) *
                            static_cast<int64_t>(source.size()));
}
BENCHMARK(BM_Parse)->Arg(8)->Arg(64)->Arg(512)->Arg(2048);

void BM_ParseAnalyze(benchmark::State& state) {
    std::string source = synthetic_contract(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        lexm::ParseResult parsed = lexm::parse(source, "bench");
        benchmark::DoNotOptimize(lexm::analyze(parsed.document, parsed.diagnostics));
    }
    state.SetBytesProcessed(static_cast<int64_t>(state.iterations()) *
                            static_cast<int64_t>(source.size()));
}
BENCHMARK(BM_ParseAnalyze)->Arg(8)->Arg(64)->Arg(512)->Arg(2048);

void BM_RenderText(benchmark::State& state) {
    lexm::ParseResult parsed = lexm::parse(synthetic_contract(256), "bench");
    lexm::AnalyzedDocument analyzed = lexm::analyze(parsed.document);
    for (auto _ : state) {
        benchmark::DoNotOptimize(lexm::render_text(analyzed));
    }
}
BENCHMARK(BM_RenderText);

void BM_RenderHtml(benchmark::State& state) {
    lexm::ParseResult parsed = lexm::parse(synthetic_contract(256), "bench");
    lexm::AnalyzedDocument analyzed = lexm::analyze(parsed.document);
    for (auto _ : state) {
        benchmark::DoNotOptimize(lexm::render_html(analyzed));
    }
}
BENCHMARK(BM_RenderHtml);

void BM_RenderJson(benchmark::State& state) {
    lexm::ParseResult parsed = lexm::parse(synthetic_contract(256), "bench");
    lexm::AnalyzedDocument analyzed = lexm::analyze(parsed.document);
    for (auto _ : state) {
        benchmark::DoNotOptimize(lexm::render_json(analyzed));
    }
}
BENCHMARK(BM_RenderJson);

void BM_RenderMarkup(benchmark::State& state) {
    lexm::ParseResult parsed = lexm::parse(synthetic_contract(256), "bench");
    for (auto _ : state) {
        benchmark::DoNotOptimize(lexm::render_markup(parsed.document));
    }
}
BENCHMARK(BM_RenderMarkup);

void BM_Diff(benchmark::State& state) {
    std::string old_source = synthetic_contract(static_cast<int>(state.range(0)));
    std::string new_source = old_source;
    std::size_t at = new_source.find("second obligation");
    new_source.replace(at, 17, "revised obligation");
    lexm::ParseResult old_parsed = lexm::parse(old_source, "old");
    lexm::ParseResult new_parsed = lexm::parse(new_source, "new");
    lexm::AnalyzedDocument old_doc = lexm::analyze(old_parsed.document);
    lexm::AnalyzedDocument new_doc = lexm::analyze(new_parsed.document);
    for (auto _ : state) {
        benchmark::DoNotOptimize(lexm::diff(old_doc, new_doc));
    }
}
BENCHMARK(BM_Diff)->Arg(64)->Arg(512);

} // namespace

BENCHMARK_MAIN();
