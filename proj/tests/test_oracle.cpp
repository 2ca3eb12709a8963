#include <doctest.h>

#include <fstream>
#include <sstream>

#include "evidentia/dsl/parser.hpp"
#include "evidentia/oracle.hpp"

using namespace evidentia;
using namespace evidentia::oracle;

namespace {

dsl::ModelAst parsed(const std::string& source) {
  auto r = dsl::parse_source(source);
  REQUIRE(r.ok());
  return std::move(r.ast);
}

dsl::ModelAst fixture(const std::string& name) {
  std::ifstream in(std::string(EVIDENTIA_SOURCE_DIR) + "/fixtures/" + name + ".evd");
  REQUIRE(in);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parsed(ss.str());
}

}  // namespace

TEST_CASE("deck by counting") {
  const auto ast = fixture("deck");
  const SpaceSpec shape = space_spec(ast);
  CHECK(shape.atom_count() == 52);
  CHECK(oracle_probability(shape, *ast.queries[0].a) == mpq_class(1, 13));
  CHECK(oracle_conditional(shape, *ast.queries[1].a, *ast.queries[1].b) == mpq_class(1, 4));
  const auto results = oracle_queries(ast);
  REQUIRE(results.size() == 3);
  CHECK(results[0].query_id == "#0 P(rank == A)");
  REQUIRE(results[2].rows.size() == 3);
  CHECK(results[2].rows[1] == mpq_class(3, 13));
  CHECK(results[2].rows[2] == mpq_class(9, 13));
}

TEST_CASE("dice by counting") {
  const auto ast = fixture("dice");
  const auto r = oracle_queries(ast);
  CHECK(r[0].value == mpq_class(1, 6));
  CHECK(r[1].value == mpq_class(1, 6));
  CHECK(r[2].value == mpq_class(1, 2));
  CHECK(r[4].value == mpq_class(1));
  CHECK(r[6].value == mpq_class(1, 36));
  CHECK(r[0].enumerated == 36);
}

TEST_CASE("tautologies, contradictions and odds") {
  const auto ast = parsed(R"(model "x" { dimension r = {A, B} dimension s = {x, y, z} }
query P(true) query P(r == A or not r == A) query P(r == A | false)
query O(true) query O(false) query O(s == x) query E(s in {x, y}) query atomic)");
  const auto r = oracle_queries(ast);
  CHECK(r[0].value == mpq_class(1));
  CHECK(r[1].value == mpq_class(1));
  CHECK(r[2].error == "conditioning on impossibility");
  CHECK(r[3].infinite_odds);
  CHECK(r[4].value == mpq_class(0));
  CHECK(r[5].value == mpq_class(1, 2));
  CHECK(r[6].value == mpq_class(4));
  CHECK(r[7].value == mpq_class(1, 6));
}

TEST_CASE("continuum tranches") {
  const auto ast = fixture("quadrant");
  const auto r = oracle_queries(ast);
  CHECK(r[0].value == mpq_class(1, 2));
  CHECK(r[1].value == mpq_class(1, 2));
  const auto split = parsed(R"(model "x" { continuum t from 0 to 90 tranches 4 } query P(t < 30))");
  CHECK_THROWS_AS(oracle_queries(split), std::invalid_argument);
  CHECK_THROWS_AS(space_spec(fixture("quadrant_aleph")), std::invalid_argument);
}

TEST_CASE("atom limit") {
  const auto big = parsed(R"(model "x" { continuum t from 0 to 1 tranches 5000
  continuum u from 0 to 1 tranches 5000 } query P(t < 0.5))");
  CHECK(space_spec(big).atom_count() == 25'000'000);
  CHECK_THROWS_AS(count(space_spec(big), *big.queries[0].a), std::invalid_argument);
  CHECK_THROWS_AS(oracle_queries(big), std::invalid_argument);

  const auto ast = parsed(R"(model "x" { continuum t from 0 to 1 tranches 50
  dimension r = {A, B, C} } query P(t < 0.5 and r == A))");
  CHECK_THROWS_AS(count(space_spec(ast), *ast.queries[0].a, 149), std::invalid_argument);
  const Counts c = count(space_spec(ast), *ast.queries[0].a, 150);
  CHECK(c.satisfying == 25);
  CHECK(c.enumerated == 150);
}
