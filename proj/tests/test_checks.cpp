#include <doctest.h>

#include "evidentia/checks.hpp"
#include "evidentia/compiler.hpp"
#include "evidentia/dsl/parser.hpp"

using namespace evidentia;
using namespace evidentia::checks;

TEST_CASE("builtin fixtures parse and compile") {
  const auto& fixtures = builtin_fixtures();
  CHECK(fixtures.size() == 5);
  for (const auto& f : fixtures) {
    CAPTURE(f.name);
    const auto parsed = dsl::parse_source(f.source);
    REQUIRE(parsed.ok());
    CHECK(compile(parsed.ast).ok());
    CHECK(compile(parsed.ast, {true}).ok());
  }
}

TEST_CASE("small runs of every suite pass") {
  CheckOptions options;
  options.instances = 20;
  options.exhaustive_atoms = 6;
  const auto results = run_all(builtin_fixtures(), options);
  REQUIRE(results.size() == 7);
  for (const auto& r : results) {
    CAPTURE(r.name);
    CHECK(r.passed());
    CHECK(r.cases > 0);
    CHECK(r.counterexamples.empty());
  }
  CHECK(hyperrational_suite(300, 3).passed());
}

TEST_CASE("suites are reproducible from the seed") {
  CheckOptions options;
  options.instances = 15;
  options.exhaustive_atoms = 4;
  options.seed = 99;
  for (auto suite : {product_rule_suite, oracle_equivalence_suite, additivity_suite}) {
    const SuiteResult a = suite(builtin_fixtures(), options);
    const SuiteResult b = suite(builtin_fixtures(), options);
    CHECK(a.cases == b.cases);
    CHECK(a.skipped == b.skipped);
  }
  const SuiteResult x = hyperrational_suite(100, 5);
  const SuiteResult y = hyperrational_suite(100, 5);
  CHECK(x.cases == y.cases);
}

TEST_CASE("exhaustive product rule counts every pair") {
  CheckOptions options;
  options.instances = 0;
  options.exhaustive_atoms = 3;
  const SuiteResult r = product_rule_suite({}, options);
  // 4 + 16 + 64 pairs on 1, 2 and 3 atoms; pairs with an empty B are skipped.
  CHECK(r.cases == 2 + 12 + 56);
  CHECK(r.skipped == 2 + 4 + 8);
  CHECK(r.passed());
}

TEST_CASE("a model file can be checked on its own") {
  const std::vector<Fixture> one = {{"two", R"(model "two" { dimension r = {A, B, C} }
query P(r == A | r in {A, B}) query O(r == C) query E(r == B))"}};
  CheckOptions options;
  options.instances = 0;
  options.exhaustive_atoms = 0;
  const SuiteResult oracle = oracle_equivalence_suite(one, options);
  CHECK(oracle.cases == 3);
  CHECK(oracle.passed());
  const SuiteResult scale = scale_invariance_suite(one, options);
  CHECK(scale.passed());
  CHECK(scale.skipped == 1);
}
