#include <doctest.h>

#include <fstream>
#include <sstream>

#include "evidentia/compiler.hpp"
#include "evidentia/dsl/parser.hpp"
#include "evidentia/query.hpp"

using namespace evidentia;

namespace {

std::string fixture(const std::string& name) {
  std::ifstream in(std::string(EVIDENTIA_SOURCE_DIR) + "/fixtures/" + name + ".evd");
  REQUIRE(in);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

dsl::ModelAst parsed(const std::string& source) {
  auto r = dsl::parse_source(source);
  REQUIRE(r.ok());
  return std::move(r.ast);
}

CompiledModel compiled(const std::string& source, bool scaled = false) {
  auto r = compile(parsed(source), {scaled});
  INFO(r.diagnostics.render("m.evd"));
  REQUIRE(r.ok());
  return std::move(*r.model);
}

std::string compile_errors(const std::string& source, CompileOptions options = {}) {
  return compile(parsed(source), options).diagnostics.render("m.evd");
}

Hyperrational value_of(const QueryResult& r) {
  INFO(r.query);
  REQUIRE_FALSE(r.error.has_value());
  REQUIRE(r.value.has_value());
  return *r.value;
}

}  // namespace

TEST_CASE("deck compiles to 52 atoms") {
  const CompiledModel m = compiled(fixture("deck"));
  CHECK(m.space->size() == 52);
  CHECK_FALSE(m.space->is_scaled());
  CHECK(m.space->total_cardinality() == Hyperrational(52));
  CHECK(m.partitions.size() == 1);
  CHECK(m.queries.size() == 3);
  const auto results = evaluate_all(m);
  CHECK(value_of(results[0]) == Hyperrational::from_rational(1, 13));
  CHECK(results[0].provenance == "Theorem 4");
  CHECK(value_of(results[1]) == Hyperrational::from_rational(1, 4));
  CHECK(results[1].provenance == "Theorem 5");
  REQUIRE(results[2].rows.size() == 3);
  CHECK(results[2].rows[0].name == "aces");
  CHECK(results[2].rows[0].value == Hyperrational::from_rational(1, 13));
  CHECK(results[2].rows[1].value == Hyperrational::from_rational(3, 13));
  CHECK(results[2].rows[2].value == Hyperrational::from_rational(9, 13));
}

TEST_CASE("scaled coin") {
  const CompiledModel m = compiled(fixture("coin"), true);
  CHECK(m.space->is_scaled());
  CHECK(m.space->total_cardinality() == Hyperrational::aleph());
  const auto results = evaluate_all(m);
  REQUIRE(results.size() == 6);
  CHECK(value_of(results[0]) == Hyperrational::aleph() / Hyperrational(2));
  CHECK(value_of(results[1]) == Hyperrational::aleph());
  CHECK(results[1].provenance == "Axiom 3");
  CHECK(value_of(results[2]) == Hyperrational::from_rational(1, 2));
  CHECK(value_of(results[3]) == Hyperrational(1));
  CHECK(results[3].odds_kind == Odds::Kind::finite);
  CHECK(results[4].log_odds.has_value());
  CHECK(value_of(results[5]) == Hyperrational(1) / Hyperrational::aleph());
  CHECK(value_of(results[5]).magnitude() == MagnitudeClass::infinitesimal);

  const auto finite = evaluate_all(compiled(fixture("coin")));
  CHECK(value_of(finite[1]) == Hyperrational(2));
  CHECK(value_of(finite[5]) == Hyperrational::from_rational(1, 2));
}

TEST_CASE("quadrant fixtures give one half") {
  for (const char* name : {"quadrant", "quadrant_ratio"}) {
    CAPTURE(name);
    for (bool scaled : {false, true}) {
      const auto results = evaluate_all(compiled(fixture(name), scaled));
      CHECK(value_of(results[0]) == Hyperrational::from_rational(1, 2));
      CHECK(value_of(results[1]) == Hyperrational::from_rational(1, 2));
      REQUIRE(results[2].rows.size() == 2);
      CHECK(results[2].rows[0].value == Hyperrational::from_rational(1, 2));
    }
  }
}

TEST_CASE("tranche labels and whole-tranche comparisons") {
  const CompiledModel m = compiled(R"(model "x" { continuum t from -1 to 1 tranches 4 }
query P(t < 0) query P(t <= 0) query P(t >= 0.5) query P(t > -5) query P(t < -1))");
  REQUIRE(m.space->dimensions()[0].labels.size() == 4);
  CHECK(m.space->dimensions()[0].labels[0] == "[-1,-0.5)");
  CHECK(m.space->dimensions()[0].labels[3] == "[0.5,1)");
  const auto r = evaluate_all(m);
  CHECK(value_of(r[0]) == Hyperrational::from_rational(1, 2));
  CHECK(value_of(r[1]) == Hyperrational::from_rational(1, 2));
  CHECK(value_of(r[2]) == Hyperrational::from_rational(1, 4));
  CHECK(value_of(r[3]) == Hyperrational(1));
  CHECK(value_of(r[4]) == Hyperrational(0));
}

TEST_CASE("compile errors") {
  CHECK(compile_errors(R"(model "x" { continuum t from 0 to 90 tranches 4 }
query P(t < 45))") == "");
  CHECK(compile_errors(R"(model "x" { continuum t from 0 to 90 tranches 4 }
query P(t < 30))") ==
        "m.evd:2:9: error: bound 30 falls inside tranche [22.5,45) of 't'; use a tranche count "
        "that aligns with it\n");
  CHECK(compile_errors(R"(model "x" { continuum t from 0 to 1 tranches aleph })") ==
        "m.evd:1:13: error: continuum 't' uses aleph tranches, which need the scaled flag\n");
  CHECK(compile_errors(R"(model "x" { dimension a = {1,2,3,4} dimension b = {1,2,3,4} })",
                       {false, 15})
            .find("model has more than 15 elements; use coarser tranches") != std::string::npos);
  CHECK(compile_errors(R"(model "x" { continuum t from 0 to 1 tranches 100000000 })")
            .find("use coarser tranches") != std::string::npos);
  CHECK(compile_errors(R"(model "x" {})") == "m.evd:1:1: error: empty model\n");
  CHECK(compile_errors(R"(model "x" { dimension r = {A, B}
  partition p { a: r == A; } })")
            .find("partition 'p'") != std::string::npos);
  CHECK(compile_errors(R"(model "x" { dimension r = {A, B}
  partition p { a: r == A; b: true; } })")
            .find("partition 'p'") != std::string::npos);
}

TEST_CASE("evaluation errors stay per query") {
  const auto r = evaluate_all(compiled(R"(model "x" { dimension r = {A, B} }
query P(r == A | false) query O(true) query O(false) query L(true) query P(r == B))"));
  REQUIRE(r.size() == 5);
  CHECK(r[0].error == "conditioning on impossibility");
  CHECK(r[1].odds_kind == Odds::Kind::infinite);
  CHECK_FALSE(r[1].value.has_value());
  CHECK(r[2].odds_kind == Odds::Kind::zero);
  CHECK(r[3].error.has_value());
  CHECK(value_of(r[4]) == Hyperrational::from_rational(1, 2));
}

TEST_CASE("aleph tranche counts") {
  const dsl::ModelAst ast = parsed(fixture("quadrant_aleph"));
  const auto& decl = std::get<dsl::ContinuumDecl>(ast.declarations[0]);
  CHECK(aleph_tranche_count(ast, decl) == 6);
  const dsl::ModelAst none = parsed(R"(model "x" { continuum t from 0 to 1 tranches aleph }
query P(t < 2) query P(t >= 0))");
  CHECK(aleph_tranche_count(none, std::get<dsl::ContinuumDecl>(none.declarations[0])) == 1);
  const dsl::ModelAst mixed = parsed(R"(model "x" { continuum t from -1 to 2 tranches aleph }
query P(t < 0.5) query P(t > 0 | t < 1.25))");
  CHECK(aleph_tranche_count(mixed, std::get<dsl::ContinuumDecl>(mixed.declarations[0])) == 12);

  const auto results = evaluate_all(compiled(fixture("quadrant_aleph"), true));
  CHECK(value_of(results[0]) == Hyperrational::from_rational(1, 2));
  CHECK(value_of(results[1]) == Hyperrational::from_rational(2, 3));
  CHECK(value_of(results[2]) == Hyperrational::aleph() / Hyperrational(2));
  CHECK(value_of(results[3]) == Hyperrational(1) / Hyperrational::aleph());
}

TEST_CASE("compilation is deterministic") {
  for (const char* name : {"deck", "dice", "quadrant_ratio"}) {
    const CompiledModel a = compiled(fixture(name));
    const CompiledModel b = compiled(fixture(name));
    REQUIRE(a.space->size() == b.space->size());
    for (std::size_t i = 0; i < a.space->size(); ++i)
      CHECK(a.space->label(i) == b.space->label(i));
    const auto ra = evaluate_all(a);
    const auto rb = evaluate_all(b);
    for (std::size_t i = 0; i < ra.size(); ++i) {
      CHECK(ra[i].query == rb[i].query);
      CHECK(ra[i].value == rb[i].value);
    }
  }
}

TEST_CASE("dice fixture") {
  const auto r = evaluate_all(compiled(fixture("dice")));
  CHECK(value_of(r[0]) == Hyperrational::from_rational(1, 6));
  CHECK(value_of(r[1]) == Hyperrational::from_rational(1, 6));
  CHECK(value_of(r[2]) == Hyperrational::from_rational(1, 2));
  CHECK(value_of(r[4]) == Hyperrational(1));
  CHECK(r[5].rows[0].value == Hyperrational::from_rational(1, 6));
  CHECK(value_of(r[6]) == Hyperrational::from_rational(1, 36));
}
