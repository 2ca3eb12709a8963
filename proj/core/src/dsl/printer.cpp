#include "evidentia/dsl/printer.hpp"

#include <sstream>

namespace evidentia::dsl {

namespace {

bool lexes_as_identifier(std::string_view s) {
  if (s.empty())
    return false;
  auto start = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
  if (!start(s[0]))
    return false;
  for (char c : s)
    if (!start(c) && !(c >= '0' && c <= '9'))
      return false;
  return true;
}

bool lexes_as_number(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && s[i] == '-')
    ++i;
  const std::size_t int_start = i;
  while (i < s.size() && s[i] >= '0' && s[i] <= '9')
    ++i;
  if (i == int_start)
    return false;
  if (i == s.size())
    return true;
  if (s[i] != '.')
    return false;
  const std::size_t frac_start = ++i;
  while (i < s.size() && s[i] >= '0' && s[i] <= '9')
    ++i;
  return i == s.size() && i > frac_start;
}

int precedence(const Pred& p) {
  switch (p.kind) {
    case Pred::Kind::disjunction: return 1;
    case Pred::Kind::conjunction: return 2;
    case Pred::Kind::negation: return 3;
    default: return 4;
  }
}

std::string label_list(const std::vector<Label>& labels) {
  std::string out = "{";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i > 0)
      out += ", ";
    out += label_source(labels[i].text);
  }
  return out + "}";
}

void print_pred(const Pred& p, std::string& out) {
  const int prec = precedence(p);
  auto child = [&](const Pred& c, bool parens) {
    if (parens)
      out += "(";
    print_pred(c, out);
    if (parens)
      out += ")";
  };
  switch (p.kind) {
    case Pred::Kind::constant:
      out += p.value ? "true" : "false";
      return;
    case Pred::Kind::equals:
      out += p.variable + " == " + label_source(p.labels.front().text);
      return;
    case Pred::Kind::member_of:
      out += p.variable + " in " + label_list(p.labels);
      return;
    case Pred::Kind::compare:
      out += p.variable + " " + std::string(to_string(p.op)) + " " + rational_to_text(p.bound);
      return;
    case Pred::Kind::negation:
      out += "not ";
      child(*p.operands.front(), precedence(*p.operands.front()) < prec);
      return;
    case Pred::Kind::conjunction:
    case Pred::Kind::disjunction: {
      const char* sep = p.kind == Pred::Kind::conjunction ? " and " : " or ";
      for (std::size_t i = 0; i < p.operands.size(); ++i) {
        if (i > 0)
          out += sep;
        // A nested node of the same kind keeps its parentheses so the
        // reparsed tree has the same shape.
        child(*p.operands[i], precedence(*p.operands[i]) <= prec);
      }
      return;
    }
  }
}

std::string quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\')
      out += '\\';
    if (c == '\n')
      out += "\\n";
    else if (c == '\t')
      out += "\\t";
    else
      out += c;
  }
  return out + "\"";
}

}  // namespace

std::string label_source(std::string_view label) {
  if (lexes_as_identifier(label) || lexes_as_number(label))
    return std::string(label);
  return quote(label);
}

std::string to_source(const Pred& pred) {
  std::string out;
  print_pred(pred, out);
  return out;
}

std::string query_text(const Query& q) {
  switch (q.kind) {
    case QueryKind::atomic:
      return "atomic";
    case QueryKind::table:
      return "table(" + q.table + ")";
    case QueryKind::conditional:
      return "P(" + to_source(*q.a) + " | " + to_source(*q.b) + ")";
    default:
      return std::string(to_string(q.kind)) + "(" + to_source(*q.a) + ")";
  }
}

std::string to_source(const ModelAst& ast) {
  std::ostringstream os;
  os << "model " << quote(ast.name) << " {\n";
  for (const auto& d : ast.declarations) {
    if (const auto* dim = std::get_if<DimensionDecl>(&d)) {
      os << "  dimension " << dim->name << " = " << label_list(dim->labels) << "\n";
    } else {
      const auto& c = std::get<ContinuumDecl>(d);
      os << "  continuum " << c.name << " from " << rational_to_text(c.lo) << " to "
         << rational_to_text(c.hi) << " tranches "
         << (c.tranches ? std::to_string(*c.tranches) : std::string("aleph")) << "\n";
    }
  }
  for (const auto& p : ast.partitions) {
    os << "  partition " << p.name << " {\n";
    for (const auto& b : p.blocks)
      os << "    " << b.name << ": " << to_source(*b.pred) << ";\n";
    os << "  }\n";
  }
  os << "}\n";
  for (const auto& q : ast.queries)
    os << "query " << query_text(q) << "\n";
  return os.str();
}

namespace {

void dump_pred(const Pred& p, int depth, std::ostringstream& os) {
  const std::string indent(static_cast<std::size_t>(depth) * 2, ' ');
  os << indent;
  switch (p.kind) {
    case Pred::Kind::constant:
      os << (p.value ? "true" : "false");
      break;
    case Pred::Kind::equals:
      os << "equals " << p.variable << " " << label_source(p.labels.front().text);
      break;
    case Pred::Kind::member_of:
      os << "in " << p.variable << " " << label_list(p.labels);
      break;
    case Pred::Kind::compare:
      os << "compare " << p.variable << " " << to_string(p.op) << " " << rational_to_text(p.bound);
      break;
    case Pred::Kind::negation: os << "not"; break;
    case Pred::Kind::conjunction: os << "and"; break;
    case Pred::Kind::disjunction: os << "or"; break;
  }
  os << " @" << p.span.to_string() << "\n";
  for (const auto& c : p.operands)
    dump_pred(*c, depth + 1, os);
}

}  // namespace

std::string dump(const ModelAst& ast) {
  std::ostringstream os;
  os << "model " << quote(ast.name) << " @" << ast.span.to_string() << "\n";
  for (const auto& d : ast.declarations) {
    if (const auto* dim = std::get_if<DimensionDecl>(&d)) {
      os << "  dimension " << dim->name << " @" << dim->span.to_string() << "\n";
      for (const auto& l : dim->labels)
        os << "    label " << label_source(l.text) << " @" << l.span.to_string() << "\n";
    } else {
      const auto& c = std::get<ContinuumDecl>(d);
      os << "  continuum " << c.name << " from " << rational_to_text(c.lo) << " to "
         << rational_to_text(c.hi) << " tranches "
         << (c.tranches ? std::to_string(*c.tranches) : std::string("aleph")) << " @"
         << c.span.to_string() << "\n";
    }
  }
  for (const auto& p : ast.partitions) {
    os << "  partition " << p.name << " @" << p.span.to_string() << "\n";
    for (const auto& b : p.blocks) {
      os << "    block " << b.name << " @" << b.span.to_string() << "\n";
      dump_pred(*b.pred, 3, os);
    }
  }
  for (const auto& q : ast.queries) {
    os << "query " << to_string(q.kind);
    if (q.kind == QueryKind::table)
      os << " " << q.table;
    os << " @" << q.span.to_string() << "\n";
    if (q.a)
      dump_pred(*q.a, 1, os);
    if (q.b)
      dump_pred(*q.b, 1, os);
  }
  return os.str();
}

}  // namespace evidentia::dsl
