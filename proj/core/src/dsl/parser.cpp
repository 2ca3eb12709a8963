#include "evidentia/dsl/parser.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <stdexcept>

namespace evidentia::dsl {

namespace {

constexpr std::array kReserved = {
    "model", "dimension", "continuum", "from", "to", "tranches", "aleph", "partition",
    "query", "and",       "or",        "not",  "in", "true",     "false",
};

// Thrown after a syntax error has been reported; caught at a recovery point.
struct SyntaxError {};

struct Symbol {
  bool continuum = false;
  std::set<std::string, std::less<>> labels;
};

class Parser {
public:
  Parser(std::span<const Token> tokens, Diagnostics& diags) : toks_(tokens), diags_(diags) {}

  ModelAst run() {
    ModelAst ast;
    if (toks_.empty()) {
      diags_.error("empty model", SourceSpan{});
      return ast;
    }
    const SourceSpan start = toks_.front().span;
    try {
      expect_word("model");
      ast.name = expect(TokenKind::string, "model name").text;
      expect(TokenKind::lbrace, "'{'");
    } catch (const SyntaxError&) {
      sync_top();
      recovered_ = true;
    }
    parse_body(ast);
    while (!at_end()) {
      try {
        ast.queries.push_back(parse_query());
      } catch (const SyntaxError&) {
        sync_to_query();
      }
    }
    ast.span = SourceSpan::cover(start, toks_.back().span);
    return ast;
  }

private:
  // --- token helpers -------------------------------------------------------

  bool at_end() const { return pos_ >= toks_.size(); }
  const Token& peek() const { return toks_[pos_]; }
  bool at(TokenKind k) const { return !at_end() && peek().kind == k; }
  bool at_word(std::string_view w) const {
    return at(TokenKind::identifier) && peek().text == w;
  }
  const Token& advance() { return toks_[pos_++]; }

  SourceSpan here() const {
    if (!at_end())
      return peek().span;
    SourceSpan s = toks_.back().span;
    s.begin = s.end;
    s.line = s.end_line;
    s.column = s.end_column;
    return s;
  }
  SourceSpan previous() const { return toks_[pos_ - 1].span; }

  std::string found() const {
    if (at_end())
      return "end of input";
    return "'" + peek().text + "'";
  }

  [[noreturn]] void fail(const std::string& expected) {
    diags_.error("expected " + expected + " but found " + found(), here());
    throw SyntaxError{};
  }

  const Token& expect(TokenKind k, const std::string& what) {
    if (!at(k))
      fail(what);
    return advance();
  }

  void expect_word(std::string_view w) {
    if (!at_word(w))
      fail("'" + std::string(w) + "'");
    advance();
  }

  const Token& expect_name(const std::string& what) {
    const Token& t = expect(TokenKind::identifier, what);
    if (is_reserved_word(t.text))
      diags_.error("'" + t.text + "' is a reserved word and cannot name a " + what, t.span);
    return t;
  }

  static bool is_decl_keyword(const Token& t) {
    return t.kind == TokenKind::identifier &&
           (t.text == "dimension" || t.text == "continuum" || t.text == "partition" ||
            t.text == "query");
  }

  void sync_top() {
    while (!at_end() && !is_decl_keyword(peek()))
      advance();
  }

  void sync_to_query() {
    if (!at_end())
      advance();
    while (!at_end() && !at_word("query"))
      advance();
  }

  // --- model body ----------------------------------------------------------

  void parse_body(ModelAst& ast) {
    bool seen_partition = false;
    while (!at_end() && !at(TokenKind::rbrace) && !at_word("query")) {
      try {
        if (at_word("dimension") || at_word("continuum")) {
          if (seen_partition)
            diags_.error("declarations must come before partitions", here());
          ast.declarations.push_back(parse_declaration());
        } else if (at_word("partition")) {
          seen_partition = true;
          ast.partitions.push_back(parse_partition());
        } else {
          fail("'dimension', 'continuum', 'partition' or '}'");
        }
      } catch (const SyntaxError&) {
        advance_past_error();
        sync_top();
        recovered_ = true;
      }
    }
    if (at(TokenKind::rbrace)) {
      advance();
    } else if (!recovered_) {
      diags_.error("expected '}' but found " + found(), here());
    }
  }

  void advance_past_error() {
    if (!at_end() && !is_decl_keyword(peek()))
      advance();
  }

  Declaration parse_declaration() {
    const SourceSpan start = here();
    if (at_word("dimension")) {
      advance();
      DimensionDecl d;
      const Token& name = expect_name("dimension");
      d.name = name.text;
      expect(TokenKind::assign, "'='");
      d.labels = parse_label_set();
      std::set<std::string, std::less<>> seen;
      for (const auto& l : d.labels)
        if (!seen.insert(l.text).second)
          diags_.error("duplicate label '" + l.text + "' in dimension '" + d.name + "'", l.span);
      d.span = SourceSpan::cover(start, previous());
      declare(d.name, name.span, Symbol{false, std::move(seen)});
      return d;
    }
    expect_word("continuum");
    ContinuumDecl c;
    const Token& name = expect_name("continuum");
    c.name = name.text;
    expect_word("from");
    const Token& lo = expect(TokenKind::number, "number");
    expect_word("to");
    const Token& hi = expect(TokenKind::number, "number");
    expect_word("tranches");
    c.lo = decimal_to_rational(lo.text);
    c.hi = decimal_to_rational(hi.text);
    if (at_word("aleph")) {
      advance();
    } else {
      const Token& n = expect(TokenKind::number, "tranche count or 'aleph'");
      const mpq_class count = decimal_to_rational(n.text);
      if (count.get_den() != 1 || count < 1 || !count.get_num().fits_ulong_p())
        diags_.error("tranche count must be a positive integer", n.span);
      else
        c.tranches = count.get_num().get_ui();
    }
    if (c.lo >= c.hi)
      diags_.error("continuum '" + c.name + "' needs from < to", SourceSpan::cover(lo.span, hi.span));
    c.span = SourceSpan::cover(start, previous());
    declare(c.name, name.span, Symbol{true, {}});
    return c;
  }

  void declare(const std::string& name, const SourceSpan& span, Symbol sym) {
    if (!symbols_.emplace(name, std::move(sym)).second)
      diags_.error("duplicate declaration '" + name + "'", span);
  }

  std::vector<Label> parse_label_set() {
    expect(TokenKind::lbrace, "'{'");
    std::vector<Label> labels;
    labels.push_back(parse_label());
    while (at(TokenKind::comma)) {
      advance();
      labels.push_back(parse_label());
    }
    expect(TokenKind::rbrace, "',' or '}'");
    return labels;
  }

  Label parse_label() {
    if (at(TokenKind::identifier) || at(TokenKind::string) || at(TokenKind::number)) {
      const Token& t = advance();
      return {t.text, t.span};
    }
    fail("label");
  }

  PartitionDecl parse_partition() {
    const SourceSpan start = here();
    expect_word("partition");
    PartitionDecl p;
    const Token& name = expect_name("partition");
    p.name = name.text;
    if (!partitions_.insert(p.name).second)
      diags_.error("duplicate partition '" + p.name + "'", name.span);
    expect(TokenKind::lbrace, "'{'");
    std::set<std::string> block_names;
    while (!at_end() && !at(TokenKind::rbrace) && !is_decl_keyword(peek())) {
      try {
        PartitionBlockDecl b;
        const Token& bname = expect_name("block");
        b.name = bname.text;
        if (!block_names.insert(b.name).second)
          diags_.error("duplicate block '" + b.name + "' in partition '" + p.name + "'",
                       bname.span);
        expect(TokenKind::colon, "':'");
        b.pred = parse_pred();
        expect(TokenKind::semicolon, "';'");
        b.span = SourceSpan::cover(bname.span, previous());
        p.blocks.push_back(std::move(b));
      } catch (const SyntaxError&) {
        while (!at_end() && !at(TokenKind::semicolon) && !at(TokenKind::rbrace) &&
               !is_decl_keyword(peek()))
          advance();
        if (at(TokenKind::semicolon))
          advance();
      }
    }
    expect(TokenKind::rbrace, "block or '}'");
    if (p.blocks.empty() && block_names.empty())
      diags_.error("partition '" + p.name + "' has no blocks", name.span);
    p.span = SourceSpan::cover(start, previous());
    return p;
  }

  // --- queries -------------------------------------------------------------

  Query parse_query() {
    const SourceSpan start = here();
    expect_word("query");
    Query q;
    if (!at(TokenKind::identifier))
      fail("'P', 'O', 'L', 'E', 'table' or 'atomic'");
    const std::string word = peek().text;
    if (word == "atomic") {
      advance();
      q.kind = QueryKind::atomic;
    } else if (word == "table") {
      advance();
      q.kind = QueryKind::table;
      expect(TokenKind::lparen, "'('");
      const Token& name = expect(TokenKind::identifier, "partition name");
      q.table = name.text;
      if (!partitions_.contains(q.table))
        diags_.error("unknown partition '" + q.table + "'", name.span);
      expect(TokenKind::rparen, "')'");
    } else if (word == "P" || word == "O" || word == "L" || word == "E") {
      advance();
      q.kind = word == "P"   ? QueryKind::probability
               : word == "O" ? QueryKind::odds
               : word == "L" ? QueryKind::log_odds
                             : QueryKind::evidence;
      expect(TokenKind::lparen, "'('");
      q.a = parse_pred();
      if (q.kind == QueryKind::probability && at(TokenKind::pipe)) {
        advance();
        q.kind = QueryKind::conditional;
        q.b = parse_pred();
      }
      expect(TokenKind::rparen, q.kind == QueryKind::probability ? "'|' or ')'" : "')'");
    } else {
      fail("'P', 'O', 'L', 'E', 'table' or 'atomic'");
    }
    q.span = SourceSpan::cover(start, previous());
    return q;
  }

  // --- predicates ----------------------------------------------------------

  PredPtr parse_pred() {
    std::vector<PredPtr> terms{parse_and()};
    while (at_word("or")) {
      advance();
      terms.push_back(parse_and());
    }
    if (terms.size() == 1)
      return terms.front();
    const SourceSpan span = SourceSpan::cover(terms.front()->span, terms.back()->span);
    return Pred::disjunction_of(std::move(terms), span);
  }

  PredPtr parse_and() {
    std::vector<PredPtr> terms{parse_unary()};
    while (at_word("and")) {
      advance();
      terms.push_back(parse_unary());
    }
    if (terms.size() == 1)
      return terms.front();
    const SourceSpan span = SourceSpan::cover(terms.front()->span, terms.back()->span);
    return Pred::conjunction_of(std::move(terms), span);
  }

  PredPtr parse_unary() {
    if (at_word("not")) {
      const SourceSpan start = advance().span;
      PredPtr inner = parse_unary();
      const SourceSpan span = SourceSpan::cover(start, inner->span);
      return Pred::negation_of(std::move(inner), span);
    }
    return parse_atom();
  }

  PredPtr parse_atom() {
    if (at(TokenKind::lparen)) {
      const SourceSpan open = advance().span;
      auto inner = std::make_shared<Pred>(*parse_pred());
      inner->span = SourceSpan::cover(open, expect(TokenKind::rparen, "')'").span);
      return inner;
    }
    if (at_word("true") || at_word("false")) {
      const Token& t = advance();
      return Pred::constant_of(t.text == "true", t.span);
    }
    if (!at(TokenKind::identifier) || is_reserved_word(peek().text))
      fail("predicate");
    const Token& var = advance();
    const Symbol* sym = lookup(var);

    if (at(TokenKind::equal) || at_word("in")) {
      std::vector<Label> labels;
      const bool single = at(TokenKind::equal);
      advance();
      if (single)
        labels.push_back(parse_label());
      else
        labels = parse_label_set();
      const SourceSpan span = SourceSpan::cover(var.span, previous());
      if (sym && sym->continuum) {
        diags_.error("continuum '" + var.text + "' supports only <, <=, > and >=", span);
      } else if (sym) {
        for (const auto& l : labels)
          if (!sym->labels.contains(l.text))
            diags_.error("'" + l.text + "' is not a label of dimension '" + var.text + "'",
                         l.span);
      }
      return single ? Pred::equals_of(var.text, labels.front(), span)
                    : Pred::member_of_set(var.text, std::move(labels), span);
    }

    CompareOp op;
    if (at(TokenKind::less))
      op = CompareOp::less;
    else if (at(TokenKind::less_eq))
      op = CompareOp::less_eq;
    else if (at(TokenKind::greater))
      op = CompareOp::greater;
    else if (at(TokenKind::greater_eq))
      op = CompareOp::greater_eq;
    else
      fail("'==', 'in', '<', '<=', '>' or '>=' after '" + var.text + "'");
    advance();
    const Token& num = expect(TokenKind::number, "number");
    const SourceSpan span = SourceSpan::cover(var.span, num.span);
    if (sym && !sym->continuum)
      diags_.error("dimension '" + var.text + "' has opaque labels; use == or in", span);
    return Pred::compare_of(var.text, op, decimal_to_rational(num.text), span);
  }

  const Symbol* lookup(const Token& var) {
    auto it = symbols_.find(var.text);
    if (it == symbols_.end()) {
      diags_.error("unknown identifier '" + var.text + "'", var.span);
      return nullptr;
    }
    return &it->second;
  }

  std::span<const Token> toks_;
  Diagnostics& diags_;
  std::size_t pos_ = 0;
  bool recovered_ = false;
  std::map<std::string, Symbol, std::less<>> symbols_;
  std::set<std::string, std::less<>> partitions_;
};

}  // namespace

bool is_reserved_word(std::string_view word) {
  return std::find(kReserved.begin(), kReserved.end(), word) != kReserved.end();
}

ModelAst parse(std::span<const Token> tokens, Diagnostics& diags) {
  return Parser(tokens, diags).run();
}

ParseResult parse_source(std::string_view source) {
  ParseResult r;
  const std::vector<Token> tokens = tokenize(source, r.diagnostics);
  if (tokens.empty() && r.diagnostics.has_errors())
    return r;
  r.ast = parse(tokens, r.diagnostics);
  return r;
}

}  // namespace evidentia::dsl
