#include <doctest.h>

#include <fstream>
#include <sstream>

#include "evidentia/dsl/lexer.hpp"
#include "evidentia/dsl/parser.hpp"
#include "evidentia/dsl/printer.hpp"
#include "evidentia/random_model.hpp"

using namespace evidentia;
using namespace evidentia::dsl;

namespace {

std::string read(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string fixture(const std::string& name) {
  return read(std::string(EVIDENTIA_SOURCE_DIR) + "/fixtures/" + name + ".evd");
}

// Rendered diagnostics for `source`, one per line.
std::string errors(const std::string& source) {
  return parse_source(source).diagnostics.render("m.evd");
}

void check_spans_inside(const std::string& source) {
  const auto r = parse_source(source);
  for (const auto& d : r.diagnostics.items()) {
    CHECK(d.span.begin <= d.span.end);
    CHECK(d.span.end <= std::max<std::size_t>(source.size(), 1));
    CHECK(d.span.line >= 1);
    CHECK(d.span.column >= 1);
  }
}

}  // namespace

TEST_CASE("tokenize") {
  Diagnostics diags;
  const auto tokens = tokenize(R"(model "coin" { dimension face = {H, T} })", diags);
  CHECK(diags.empty());
  CHECK(tokens.size() == 12);
  CHECK(tokens[1].kind == TokenKind::string);
  CHECK(tokens[1].text == "coin");
  CHECK(tokens[1].span.column == 7);
  CHECK(tokens[4].kind == TokenKind::identifier);
  CHECK(tokens[5].kind == TokenKind::assign);

  CHECK(tokenize("", diags).empty());
  CHECK(tokenize("  # only a comment\n\t", diags).empty());
  CHECK(diags.empty());

  const auto ops = tokenize("== = < <= > >= | : ; , ( ) -2.5 7", diags);
  REQUIRE(ops.size() == 14);
  CHECK(ops[0].kind == TokenKind::equal);
  CHECK(ops[1].kind == TokenKind::assign);
  CHECK(ops[3].kind == TokenKind::less_eq);
  CHECK(ops[5].kind == TokenKind::greater_eq);
  CHECK(ops[12].kind == TokenKind::number);
  CHECK(ops[12].text == "-2.5");

  Diagnostics bad;
  tokenize("@", bad);
  REQUIRE(bad.items().size() == 1);
  CHECK(bad.items()[0].span.line == 1);
  CHECK(bad.items()[0].span.column == 1);
  CHECK(bad.render("m.evd") == "m.evd:1:1: error: illegal character '@'\n");

  Diagnostics escaped;
  const auto s = tokenize(R"("a \"quoted\" \\ word")", escaped);
  REQUIRE(s.size() == 1);
  CHECK(s[0].text == R"(a "quoted" \ word)");

  Diagnostics lines;
  const auto multi = tokenize("model\n  \"x\" # c\n{", lines);
  REQUIRE(multi.size() == 3);
  CHECK(multi[1].span.line == 2);
  CHECK(multi[1].span.column == 3);
  CHECK(multi[2].span.line == 3);
  CHECK(multi[2].span.begin == 16);
}

TEST_CASE("lexical errors") {
  CHECK(errors("model \"x\" { dimension r = {A} } $") ==
        "m.evd:1:33: error: illegal character '$'\n");
  CHECK(errors("model \"x") ==
        "m.evd:1:7: error: unterminated string\n"
        "m.evd:1:6: error: expected model name but found end of input\n");
  CHECK(errors("model \"x\" { dimension r = {A} } ±").find("illegal character '±'") !=
        std::string::npos);
}

TEST_CASE("parse the deck fixture") {
  const auto r = parse_source(fixture("deck"));
  REQUIRE(r.ok());
  const ModelAst& ast = r.ast;
  CHECK(ast.name == "deck");
  CHECK(ast.declarations.size() == 2);
  CHECK(ast.partitions.size() == 1);
  CHECK(ast.queries.size() == 3);
  CHECK(std::get<DimensionDecl>(ast.declarations[0]).labels.size() == 13);
  CHECK(ast.partitions[0].blocks.size() == 3);
  CHECK(ast.queries[1].kind == QueryKind::conditional);
  CHECK(query_text(ast.queries[1]) == "P(rank == A | rank in {A, J, Q, K})");
  CHECK(query_text(ast.queries[2]) == "table(groups)");
}

TEST_CASE("golden syntax tree dump") {
  const auto r = parse_source(fixture("deck"));
  REQUIRE(r.ok());
  CHECK(dump(r.ast) == read(std::string(EVIDENTIA_SOURCE_DIR) + "/tests/golden/deck.ast"));
}

TEST_CASE("precedence: not binds tighter than and, and tighter than or") {
  const auto r = parse_source(R"(model "x" { dimension a = {p, q} dimension b = {p, q} }
query P(not a == p and b == q or a == q))");
  REQUIRE(r.ok());
  const Pred& top = *r.ast.queries[0].a;
  REQUIRE(top.kind == Pred::Kind::disjunction);
  REQUIRE(top.operands[0]->kind == Pred::Kind::conjunction);
  CHECK(top.operands[0]->operands[0]->kind == Pred::Kind::negation);
  CHECK(to_source(top) == "not a == p and b == q or a == q");
}

TEST_CASE("continuum declarations") {
  const auto r = parse_source(R"(model "x" {
  continuum t from -1.5 to 2 tranches 7
  continuum u from 0 to 1 tranches aleph
}
query P(t < 0.5 and u >= 0.25))");
  REQUIRE(r.ok());
  const auto& t = std::get<ContinuumDecl>(r.ast.declarations[0]);
  CHECK(t.lo == mpq_class(-3, 2));
  CHECK(t.hi == 2);
  CHECK(t.tranches == 7u);
  CHECK_FALSE(std::get<ContinuumDecl>(r.ast.declarations[1]).tranches.has_value());
  CHECK(r.ast.queries[0].a->operands[0]->bound == mpq_class(1, 2));
}

TEST_CASE("semantic errors found while parsing") {
  CHECK(errors(R"(model "x" {})").empty());
  CHECK(errors(R"(model "x" { dimension r = {A, A} })") ==
        "m.evd:1:31: error: duplicate label 'A' in dimension 'r'\n");
  CHECK(errors(R"(model "x" { dimension r = {A} dimension r = {B} })") ==
        "m.evd:1:41: error: duplicate declaration 'r'\n");
  CHECK(errors("model \"x\" { dimension r = {A} }\nquery P(s == A)") ==
        "m.evd:2:9: error: unknown identifier 's'\n");
  CHECK(errors("model \"x\" { dimension r = {A} }\nquery P(r == B)") ==
        "m.evd:2:14: error: 'B' is not a label of dimension 'r'\n");
  CHECK(errors("model \"x\" { dimension r = {A} }\nquery P(r < 3)") ==
        "m.evd:2:9: error: dimension 'r' has opaque labels; use == or in\n");
  CHECK(errors("model \"x\" { continuum t from 0 to 1 tranches 4 }\nquery P(t == A)") ==
        "m.evd:2:9: error: continuum 't' supports only <, <=, > and >=\n");
  CHECK(errors(R"(model "x" { continuum t from 1 to 0 tranches 4 })") ==
        "m.evd:1:30: error: continuum 't' needs from < to\n");
  CHECK(errors(R"(model "x" { continuum t from 0 to 1 tranches 0 })") ==
        "m.evd:1:46: error: tranche count must be a positive integer\n");
  CHECK(errors(R"(model "x" { continuum t from 0 to 1 tranches 2.5 })") ==
        "m.evd:1:46: error: tranche count must be a positive integer\n");
  CHECK(errors("model \"x\" { dimension r = {A, B}\n partition p { a: r == A; a: r == B; } }") ==
        "m.evd:2:27: error: duplicate block 'a' in partition 'p'\n");
  CHECK(errors(R"(model "x" { dimension model = {A} })") ==
        "m.evd:1:23: error: 'model' is a reserved word and cannot name a dimension\n");
  CHECK(errors(R"(model "x" { dimension r = {A} } query table(nope))") ==
        "m.evd:1:45: error: unknown partition 'nope'\n");
}

TEST_CASE("syntax errors are accumulated") {
  CHECK(errors("model \"x\" { dimension r = {A}\n dimension q = {B,}\n dimension z = {C} }\n"
               "query P(z == C) query X(r) query P(r == A)") ==
        "m.evd:2:19: error: expected label but found '}'\n"
        "m.evd:4:23: error: expected 'P', 'O', 'L', 'E', 'table' or 'atomic' but found 'X'\n");
  CHECK(errors(R"(model "x" { dimension r = {A})") ==
        "m.evd:1:30: error: expected '}' but found end of input\n");
  CHECK(errors("@") == "m.evd:1:1: error: illegal character '@'\n");
  CHECK(errors("") == "m.evd:1:1: error: empty model\n");
}

TEST_CASE("error spans lie within the source") {
  for (const char* src :
       {"@", "", "model", "model \"x\" {", "model \"x\" { dimension", "model \"x\" { dimension r = {A} } query",
        "model \"x\" { dimension r = {A} } query P(r ==", "model \"x\" { continuum t from 0 to",
        "model \"x\" { partition p { a: ; } }", "model \"x\" { dimension r = {A} } query P(r == A | )",
        "query P(x)", "}}}}", "model \"x\" { dimension r = {A} }\n\n\nquery P((r == A)"}) {
    CAPTURE(src);
    CHECK(parse_source(src).diagnostics.has_errors());
    check_spans_inside(src);
  }
}

TEST_CASE("fixtures round-trip through the printer") {
  for (const char* name : {"deck", "coin", "dice", "quadrant", "quadrant_ratio", "quadrant_aleph"}) {
    CAPTURE(name);
    const auto first = parse_source(fixture(name));
    REQUIRE(first.ok());
    const std::string printed = to_source(first.ast);
    const auto second = parse_source(printed);
    REQUIRE(second.ok());
    CHECK(structurally_equal(first.ast, second.ast));
    CHECK(to_source(second.ast) == printed);
  }
}

TEST_CASE("random syntax trees round-trip through the printer") {
  random::Rng rng(2024);
  random::ModelShape shape;
  shape.aleph_tranches = true;
  for (int i = 0; i < 500; ++i) {
    const ModelAst ast = random::model(rng, shape);
    const std::string printed = to_source(ast);
    CAPTURE(printed);
    const auto reparsed = parse_source(printed);
    REQUIRE(reparsed.ok());
    CHECK(structurally_equal(ast, reparsed.ast));
  }
}

TEST_CASE("labels that need quoting") {
  CHECK(label_source("A") == "A");
  CHECK(label_source("10") == "10");
  CHECK(label_source("-2.5") == "-2.5");
  CHECK(label_source("two words") == "\"two words\"");
  CHECK(label_source("q\"x") == "\"q\\\"x\"");
  CHECK(label_source("") == "\"\"");
  const auto r = parse_source(
      "model \"x\" { dimension r = {\"a b\", \"q\\\"x\", true, in, 007} }\nquery P(r in {true, \"a b\"})");
  REQUIRE(r.ok());
  const auto again = parse_source(to_source(r.ast));
  REQUIRE(again.ok());
  CHECK(structurally_equal(r.ast, again.ast));
}

TEST_CASE("number conversion") {
  CHECK(decimal_to_rational("0.25") == mpq_class(1, 4));
  CHECK(decimal_to_rational("-3") == -3);
  CHECK(decimal_to_rational("068") == 68);
  CHECK(decimal_to_rational("1.068") == mpq_class(267, 250));
  CHECK_THROWS_AS(decimal_to_rational("1."), std::invalid_argument);
  CHECK(rational_to_text(mpq_class(1, 4)) == "0.25");
  CHECK(rational_to_text(mpq_class(-1, 20)) == "-0.05");
  CHECK(rational_to_text(mpq_class(1, 3)) == "1/3");
  CHECK(rational_to_text(mpq_class(45)) == "45");
}
