#include "evidentia/compiler.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "evidentia/dsl/printer.hpp"

namespace evidentia {

namespace {

// A lowering failure tied to a source location.
struct LoweringError : std::invalid_argument {
  LoweringError(const std::string& what, dsl::SourceSpan where)
      : std::invalid_argument(what), span(where) {}
  dsl::SourceSpan span;
};

void for_each_pred(const dsl::Pred& p, const std::function<void(const dsl::Pred&)>& f) {
  f(p);
  for (const auto& c : p.operands)
    for_each_pred(*c, f);
}

void for_each_model_pred(const dsl::ModelAst& ast,
                         const std::function<void(const dsl::Pred&)>& f) {
  for (const auto& part : ast.partitions)
    for (const auto& b : part.blocks)
      if (b.pred)
        for_each_pred(*b.pred, f);
  for (const auto& q : ast.queries) {
    if (q.a)
      for_each_pred(*q.a, f);
    if (q.b)
      for_each_pred(*q.b, f);
  }
}

std::string tranche_label(const mpq_class& a, const mpq_class& b) {
  return "[" + dsl::rational_to_text(a) + "," + dsl::rational_to_text(b) + ")";
}

// Per-label truth table for a leaf predicate on one dimension.
std::vector<char> leaf_table(const CompiledModel& m, std::size_t dim, const dsl::Pred& p) {
  const Axis& axis = m.axes[dim];
  const auto& labels = m.space->dimensions()[dim].labels;
  std::vector<char> table(labels.size(), 0);

  if (p.kind == dsl::Pred::Kind::compare) {
    if (!axis.continuum)
      throw LoweringError("dimension '" + axis.name + "' has opaque labels; use == or in", p.span);
    for (std::size_t i = 0; i < labels.size(); ++i) {
      const mpq_class a = axis.lo + axis.width * static_cast<unsigned long>(i);
      const mpq_class b = a + axis.width;
      const bool below = p.op == dsl::CompareOp::less || p.op == dsl::CompareOp::less_eq;
      // Whole tranches only: [a,b) is below c when b <= c, above when a >= c.
      if (b <= p.bound)
        table[i] = below;
      else if (a >= p.bound)
        table[i] = !below;
      else
        throw LoweringError("bound " + dsl::rational_to_text(p.bound) + " falls inside tranche " +
                                tranche_label(a, b) + " of '" + axis.name +
                                "'; use a tranche count that aligns with it",
                            p.span);
    }
    return table;
  }

  if (axis.continuum)
    throw LoweringError("continuum '" + axis.name + "' supports only <, <=, > and >=", p.span);
  for (const auto& l : p.labels) {
    auto it = std::find(labels.begin(), labels.end(), l.text);
    if (it == labels.end())
      throw LoweringError("'" + l.text + "' is not a label of dimension '" + axis.name + "'",
                          l.span);
    table[static_cast<std::size_t>(it - labels.begin())] = 1;
  }
  return table;
}

Proposition lower(const CompiledModel& m, const dsl::Pred& p) {
  using Kind = dsl::Pred::Kind;
  switch (p.kind) {
    case Kind::constant:
      return p.value ? Proposition::top(m.space) : Proposition::bottom(m.space);
    case Kind::negation:
      return ~lower(m, *p.operands.front());
    case Kind::conjunction:
    case Kind::disjunction: {
      Proposition acc = lower(m, *p.operands.front());
      for (std::size_t i = 1; i < p.operands.size(); ++i) {
        const Proposition next = lower(m, *p.operands[i]);
        acc = p.kind == Kind::conjunction ? (acc & next) : (acc | next);
      }
      return acc;
    }
    default:
      break;
  }
  auto it = std::find_if(m.axes.begin(), m.axes.end(),
                         [&](const Axis& a) { return a.name == p.variable; });
  if (it == m.axes.end())
    throw LoweringError("unknown identifier '" + p.variable + "'", p.span);
  const auto dim = static_cast<std::size_t>(it - m.axes.begin());
  const std::vector<char> table = leaf_table(m, dim, p);
  return prop_from_predicate(m.space, [&](const PossibilitySpace& s, std::size_t id) {
    return table[s.coordinate(id, dim)] != 0;
  });
}

}  // namespace

Proposition CompiledModel::proposition(const dsl::Pred& pred) const { return lower(*this, pred); }

std::uint64_t aleph_tranche_count(const dsl::ModelAst& ast, const dsl::ContinuumDecl& decl) {
  mpz_class n = 1;
  const mpq_class range = decl.hi - decl.lo;
  for_each_model_pred(ast, [&](const dsl::Pred& p) {
    if (p.kind != dsl::Pred::Kind::compare || p.variable != decl.name)
      return;
    if (p.bound <= decl.lo || p.bound >= decl.hi)
      return;
    mpq_class offset = (p.bound - decl.lo) / range;
    offset.canonicalize();
    mpz_lcm(n.get_mpz_t(), n.get_mpz_t(), offset.get_den_mpz_t());
  });
  if (!n.fits_ulong_p())
    throw std::overflow_error("aleph tranche count too large");
  return n.get_ui();
}

CompileResult compile(const dsl::ModelAst& ast, const CompileOptions& options) {
  CompileResult result;
  auto& diags = result.diagnostics;
  if (ast.declarations.empty()) {
    diags.error("empty model", ast.span);
    return result;
  }

  CompiledModel m;
  m.name = ast.name;
  std::vector<Dimension> dims;
  mpz_class total = 1;
  bool too_large = false;
  auto grow = [&](std::uint64_t count) {
    total *= static_cast<unsigned long>(count);
    if (total > options.max_atoms && !too_large) {
      too_large = true;
      diags.error("model has more than " + std::to_string(options.max_atoms) +
                      " elements; use coarser tranches",
                  ast.span);
    }
    return !too_large;
  };
  for (const auto& decl : ast.declarations) {
    if (const auto* d = std::get_if<dsl::DimensionDecl>(&decl)) {
      if (!grow(d->labels.size()))
        continue;
      Dimension dim{d->name, {}};
      for (const auto& l : d->labels)
        dim.labels.push_back(l.text);
      dims.push_back(std::move(dim));
      m.axes.push_back({d->name, false, 0, 0});
    } else {
      const auto& c = std::get<dsl::ContinuumDecl>(decl);
      std::uint64_t n = 0;
      if (c.tranches) {
        n = *c.tranches;
      } else if (!options.scaled) {
        diags.error("continuum '" + c.name + "' uses aleph tranches, which need the scaled flag",
                    c.span);
        continue;
      } else {
        n = aleph_tranche_count(ast, c);
      }
      if (!grow(n))
        continue;
      Axis axis{c.name, true, c.lo, (c.hi - c.lo) / mpq_class(static_cast<unsigned long>(n))};
      axis.width.canonicalize();
      Dimension dim{c.name, {}};
      dim.labels.reserve(n);
      for (std::uint64_t i = 0; i < n; ++i) {
        const mpq_class a = axis.lo + axis.width * static_cast<unsigned long>(i);
        dim.labels.push_back(tranche_label(a, a + axis.width));
      }
      dims.push_back(std::move(dim));
      m.axes.push_back(std::move(axis));
    }
  }
  if (diags.has_errors())
    return result;

  try {
    m.space = options.scaled ? build_scaled_space(std::move(dims), options.max_atoms)
                             : build_finite_space(std::move(dims), options.max_atoms);
  } catch (const std::invalid_argument& e) {
    diags.error(e.what(), ast.span);
    return result;
  }

  for (const auto& part : ast.partitions) {
    try {
      std::vector<Block> blocks;
      for (const auto& b : part.blocks)
        blocks.push_back({b.name, lower(m, *b.pred)});
      m.partitions.push_back({part.name, make_partition(m.space, std::move(blocks))});
    } catch (const LoweringError& e) {
      diags.error(e.what(), e.span);
    } catch (const std::invalid_argument& e) {
      diags.error("partition '" + part.name + "': " + e.what(), part.span);
    }
  }

  for (const auto& q : ast.queries) {
    CompiledQuery cq{q, dsl::query_text(q), std::nullopt, std::nullopt, 0};
    try {
      if (q.a)
        cq.a = lower(m, *q.a);
      if (q.b)
        cq.b = lower(m, *q.b);
    } catch (const LoweringError& e) {
      diags.error(e.what(), e.span);
      continue;
    }
    if (q.kind == dsl::QueryKind::table) {
      auto it = std::find_if(m.partitions.begin(), m.partitions.end(),
                             [&](const NamedPartition& p) { return p.name == q.table; });
      if (it == m.partitions.end()) {
        diags.error("unknown partition '" + q.table + "'", q.span);
        continue;
      }
      cq.partition = static_cast<std::size_t>(it - m.partitions.begin());
    }
    m.queries.push_back(std::move(cq));
  }

  if (!diags.has_errors())
    result.model = std::move(m);
  return result;
}

}  // namespace evidentia
