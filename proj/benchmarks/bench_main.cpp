#include <benchmark/benchmark.h>

#include <random>

#include "evidentia/checks.hpp"
#include "evidentia/compiler.hpp"
#include "evidentia/dsl/parser.hpp"
#include "evidentia/hyperrational.hpp"
#include "evidentia/oracle.hpp"
#include "evidentia/query.hpp"
#include "evidentia/random_model.hpp"

using namespace evidentia;

namespace {

std::vector<Hyperrational> samples(std::size_t n, int degree) {
  random::Rng rng(1);
  std::uniform_int_distribution<long> coef(-50, 50);
  std::vector<Hyperrational> out;
  while (out.size() < n) {
    Poly num, den;
    for (int i = 0; i <= degree; ++i) {
      num.emplace_back(coef(rng));
      den.emplace_back(coef(rng));
    }
    den.back() = den.back() == 0 ? 1 : den.back();
    if (num.back() == 0)
      num.back() = 1;
    out.push_back(Hyperrational::from_polys(num, den));
  }
  return out;
}

void BM_HyperrationalAdd(benchmark::State& state) {
  const auto xs = samples(64, static_cast<int>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(xs[i % 64] + xs[(i + 1) % 64]);
    ++i;
  }
}
BENCHMARK(BM_HyperrationalAdd)->Arg(0)->Arg(1)->Arg(3);

void BM_HyperrationalMultiply(benchmark::State& state) {
  const auto xs = samples(64, static_cast<int>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(xs[i % 64] * xs[(i + 1) % 64]);
    ++i;
  }
}
BENCHMARK(BM_HyperrationalMultiply)->Arg(0)->Arg(1)->Arg(3);

void BM_HyperrationalCompare(benchmark::State& state) {
  const auto xs = samples(64, static_cast<int>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(xs[i % 64] < xs[(i + 1) % 64]);
    ++i;
  }
}
BENCHMARK(BM_HyperrationalCompare)->Arg(0)->Arg(3);

void BM_MonomialRatio(benchmark::State& state) {
  const Hyperrational a = Hyperrational::monomial(13, 52, 1);
  const Hyperrational b = Hyperrational::monomial(4, 52, 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(a / b);
}
BENCHMARK(BM_MonomialRatio);

void BM_ProductRuleExhaustive(benchmark::State& state) {
  checks::CheckOptions options;
  options.instances = 0;
  options.exhaustive_atoms = static_cast<std::size_t>(state.range(0));
  std::uint64_t pairs = 0;
  for (auto _ : state)
    pairs += checks::product_rule_suite({}, options).cases;
  state.counters["pairs/s"] = benchmark::Counter(static_cast<double>(pairs), benchmark::Counter::kIsRate);
}
BENCHMARK(BM_ProductRuleExhaustive)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

const std::string& deck_source() {
  static const std::string source = [] {
    for (const auto& f : checks::builtin_fixtures())
      if (f.name == "deck")
        return f.source;
    return std::string();
  }();
  return source;
}

void BM_ParseDeck(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(dsl::parse_source(deck_source()));
}
BENCHMARK(BM_ParseDeck);

void BM_CompileEvaluateDeck(benchmark::State& state) {
  const auto ast = dsl::parse_source(deck_source()).ast;
  for (auto _ : state) {
    auto compiled = compile(ast, {state.range(0) != 0});
    benchmark::DoNotOptimize(evaluate_all(*compiled.model));
  }
}
BENCHMARK(BM_CompileEvaluateDeck)->Arg(0)->Arg(1);

void BM_RandomModelEngineVsOracle(benchmark::State& state) {
  random::Rng rng(7);
  random::ModelShape shape;
  const auto ast = random::model(rng, shape);
  for (auto _ : state) {
    auto compiled = compile(ast);
    benchmark::DoNotOptimize(evaluate_all(*compiled.model));
    benchmark::DoNotOptimize(oracle::oracle_queries(ast));
  }
}
BENCHMARK(BM_RandomModelEngineVsOracle)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
