#include "evidentia/dsl/ast.hpp"

#include <algorithm>
#include <stdexcept>

namespace evidentia::dsl {

const std::string& declaration_name(const Declaration& d) {
  return std::visit([](const auto& x) -> const std::string& { return x.name; }, d);
}

const SourceSpan& declaration_span(const Declaration& d) {
  return std::visit([](const auto& x) -> const SourceSpan& { return x.span; }, d);
}

std::string_view to_string(CompareOp op) {
  switch (op) {
    case CompareOp::less: return "<";
    case CompareOp::less_eq: return "<=";
    case CompareOp::greater: return ">";
    case CompareOp::greater_eq: return ">=";
  }
  return "?";
}

std::string_view to_string(QueryKind k) {
  switch (k) {
    case QueryKind::probability: return "P";
    case QueryKind::conditional: return "P_cond";
    case QueryKind::odds: return "O";
    case QueryKind::log_odds: return "L";
    case QueryKind::evidence: return "E";
    case QueryKind::table: return "table";
    case QueryKind::atomic: return "atomic";
  }
  return "?";
}

PredPtr Pred::constant_of(bool v, SourceSpan span) {
  auto p = std::make_shared<Pred>();
  p->kind = Kind::constant;
  p->value = v;
  p->span = span;
  return p;
}

PredPtr Pred::equals_of(std::string var, Label label, SourceSpan span) {
  auto p = std::make_shared<Pred>();
  p->kind = Kind::equals;
  p->variable = std::move(var);
  p->labels.push_back(std::move(label));
  p->span = span;
  return p;
}

PredPtr Pred::member_of_set(std::string var, std::vector<Label> labels, SourceSpan span) {
  auto p = std::make_shared<Pred>();
  p->kind = Kind::member_of;
  p->variable = std::move(var);
  p->labels = std::move(labels);
  p->span = span;
  return p;
}

PredPtr Pred::compare_of(std::string var, CompareOp op, mpq_class bound, SourceSpan span) {
  auto p = std::make_shared<Pred>();
  p->kind = Kind::compare;
  p->variable = std::move(var);
  p->op = op;
  p->bound = std::move(bound);
  p->span = span;
  return p;
}

PredPtr Pred::negation_of(PredPtr inner, SourceSpan span) {
  auto p = std::make_shared<Pred>();
  p->kind = Kind::negation;
  p->operands.push_back(std::move(inner));
  p->span = span;
  return p;
}

PredPtr Pred::conjunction_of(std::vector<PredPtr> ps, SourceSpan span) {
  auto p = std::make_shared<Pred>();
  p->kind = Kind::conjunction;
  p->operands = std::move(ps);
  p->span = span;
  return p;
}

PredPtr Pred::disjunction_of(std::vector<PredPtr> ps, SourceSpan span) {
  auto p = std::make_shared<Pred>();
  p->kind = Kind::disjunction;
  p->operands = std::move(ps);
  p->span = span;
  return p;
}

mpq_class decimal_to_rational(std::string_view text) {
  std::string digits;
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && text[i] == '-') {
    negative = true;
    ++i;
  }
  std::size_t frac = 0;
  bool seen_point = false;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '.' && !seen_point) {
      seen_point = true;
    } else if (c >= '0' && c <= '9') {
      digits += c;
      if (seen_point)
        ++frac;
    } else {
      throw std::invalid_argument("malformed number '" + std::string(text) + "'");
    }
  }
  if (digits.empty() || (seen_point && frac == 0))
    throw std::invalid_argument("malformed number '" + std::string(text) + "'");
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, frac);
  mpq_class q(mpz_class(digits, 10), den);
  q.canonicalize();
  return negative ? mpq_class(-q) : q;
}

std::string rational_to_text(const mpq_class& value) {
  mpz_class den = value.get_den();
  unsigned long twos = mpz_remove(den.get_mpz_t(), den.get_mpz_t(), mpz_class(2).get_mpz_t());
  unsigned long fives = mpz_remove(den.get_mpz_t(), den.get_mpz_t(), mpz_class(5).get_mpz_t());
  if (den != 1)
    return value.get_str();
  const unsigned long places = std::max(twos, fives);
  if (places == 0)
    return value.get_num().get_str();
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, places);
  const mpz_class scaled = value.get_num() * (scale / value.get_den());
  std::string s = mpz_class(abs(scaled)).get_str();
  if (s.size() <= places)
    s.insert(0, places + 1 - s.size(), '0');
  s.insert(s.size() - places, ".");
  return (scaled < 0 ? "-" : "") + s;
}

namespace {

bool same_labels(const std::vector<Label>& a, const std::vector<Label>& b) {
  return std::equal(a.begin(), a.end(), b.begin(), b.end(),
                    [](const Label& x, const Label& y) { return x.text == y.text; });
}

bool same_pred(const PredPtr& a, const PredPtr& b) {
  if (!a || !b)
    return !a && !b;
  return structurally_equal(*a, *b);
}

}  // namespace

bool structurally_equal(const Pred& a, const Pred& b) {
  if (a.kind != b.kind)
    return false;
  switch (a.kind) {
    case Pred::Kind::constant:
      return a.value == b.value;
    case Pred::Kind::equals:
    case Pred::Kind::member_of:
      return a.variable == b.variable && same_labels(a.labels, b.labels);
    case Pred::Kind::compare:
      return a.variable == b.variable && a.op == b.op && a.bound == b.bound;
    default:
      return std::equal(a.operands.begin(), a.operands.end(), b.operands.begin(),
                        b.operands.end(), same_pred);
  }
}

bool structurally_equal(const ModelAst& a, const ModelAst& b) {
  if (a.name != b.name || a.declarations.size() != b.declarations.size() ||
      a.partitions.size() != b.partitions.size() || a.queries.size() != b.queries.size())
    return false;
  for (std::size_t i = 0; i < a.declarations.size(); ++i) {
    const auto& x = a.declarations[i];
    const auto& y = b.declarations[i];
    if (x.index() != y.index())
      return false;
    if (const auto* dx = std::get_if<DimensionDecl>(&x)) {
      const auto& dy = std::get<DimensionDecl>(y);
      if (dx->name != dy.name || !same_labels(dx->labels, dy.labels))
        return false;
    } else {
      const auto& cx = std::get<ContinuumDecl>(x);
      const auto& cy = std::get<ContinuumDecl>(y);
      if (cx.name != cy.name || cx.lo != cy.lo || cx.hi != cy.hi || cx.tranches != cy.tranches)
        return false;
    }
  }
  for (std::size_t i = 0; i < a.partitions.size(); ++i) {
    const auto& px = a.partitions[i];
    const auto& py = b.partitions[i];
    if (px.name != py.name || px.blocks.size() != py.blocks.size())
      return false;
    for (std::size_t j = 0; j < px.blocks.size(); ++j)
      if (px.blocks[j].name != py.blocks[j].name ||
          !same_pred(px.blocks[j].pred, py.blocks[j].pred))
        return false;
  }
  for (std::size_t i = 0; i < a.queries.size(); ++i) {
    const auto& qx = a.queries[i];
    const auto& qy = b.queries[i];
    if (qx.kind != qy.kind || qx.table != qy.table || !same_pred(qx.a, qy.a) ||
        !same_pred(qx.b, qy.b))
      return false;
  }
  return true;
}

}  // namespace evidentia::dsl
