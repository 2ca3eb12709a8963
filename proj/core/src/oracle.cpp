#include "evidentia/oracle.hpp"

#include <limits>
#include <stdexcept>

#include "evidentia/dsl/printer.hpp"

namespace evidentia::oracle {

std::uint64_t SpaceSpec::atom_count() const {
  std::uint64_t n = 1;
  for (const auto& a : axes) {
    if (a.size() != 0 && n > std::numeric_limits<std::uint64_t>::max() / a.size())
      return std::numeric_limits<std::uint64_t>::max();
    n *= a.size();
  }
  return n;
}

SpaceSpec space_spec(const dsl::ModelAst& ast) {
  SpaceSpec out;
  for (const auto& decl : ast.declarations) {
    Axis axis;
    if (const auto* d = std::get_if<dsl::DimensionDecl>(&decl)) {
      axis.name = d->name;
      for (const auto& l : d->labels)
        axis.labels.push_back(l.text);
    } else {
      const auto& c = std::get<dsl::ContinuumDecl>(decl);
      if (!c.tranches)
        throw std::invalid_argument("continuum '" + c.name + "' has aleph tranches; no finite oracle");
      axis.name = c.name;
      axis.continuum = true;
      axis.lo = c.lo;
      axis.tranches = *c.tranches;
      axis.width = (c.hi - c.lo) / mpq_class(static_cast<unsigned long>(*c.tranches));
      axis.width.canonicalize();
    }
    out.axes.push_back(std::move(axis));
  }
  return out;
}

namespace {

const Axis& find_axis(const SpaceSpec& space, const std::string& name, std::size_t& index) {
  for (std::size_t i = 0; i < space.axes.size(); ++i) {
    if (space.axes[i].name == name) {
      index = i;
      return space.axes[i];
    }
  }
  throw std::invalid_argument("unknown identifier '" + name + "'");
}

bool holds(const SpaceSpec& space, const dsl::Pred& p, const std::vector<std::uint64_t>& at) {
  using Kind = dsl::Pred::Kind;
  switch (p.kind) {
    case Kind::constant:
      return p.value;
    case Kind::negation:
      return !holds(space, *p.operands.front(), at);
    case Kind::conjunction:
      for (const auto& c : p.operands)
        if (!holds(space, *c, at))
          return false;
      return true;
    case Kind::disjunction:
      for (const auto& c : p.operands)
        if (holds(space, *c, at))
          return true;
      return false;
    case Kind::equals:
    case Kind::member_of: {
      std::size_t i = 0;
      const Axis& axis = find_axis(space, p.variable, i);
      if (axis.continuum)
        throw std::invalid_argument("label test on continuum '" + axis.name + "'");
      const std::string& label = axis.labels[at[i]];
      for (const auto& l : p.labels)
        if (l.text == label)
          return true;
      return false;
    }
    case Kind::compare: {
      std::size_t i = 0;
      const Axis& axis = find_axis(space, p.variable, i);
      if (!axis.continuum)
        throw std::invalid_argument("numeric comparison on dimension '" + axis.name + "'");
      const mpq_class lower = axis.lo + axis.width * static_cast<unsigned long>(at[i]);
      const mpq_class upper = lower + axis.width;
      const bool wants_below =
          p.op == dsl::CompareOp::less || p.op == dsl::CompareOp::less_eq;
      if (upper <= p.bound)
        return wants_below;
      if (lower >= p.bound)
        return !wants_below;
      throw std::invalid_argument("bound splits a tranche of '" + axis.name + "'");
    }
  }
  return false;
}

template <typename Visit>
std::uint64_t enumerate(const SpaceSpec& space, std::uint64_t max_atoms, Visit&& visit) {
  const std::uint64_t total = space.atom_count();
  if (total > max_atoms)
    throw std::invalid_argument("space of " + std::to_string(total) + " atoms exceeds the oracle limit");
  std::vector<std::uint64_t> at(space.axes.size(), 0);
  for (std::uint64_t n = 0; n < total; ++n) {
    visit(at);
    // odometer, last axis fastest
    for (std::size_t k = at.size(); k-- > 0;) {
      if (++at[k] < space.axes[k].size())
        break;
      at[k] = 0;
    }
  }
  return total;
}

}  // namespace

Counts count(const SpaceSpec& space, const dsl::Pred& pred, std::uint64_t max_atoms) {
  Counts c;
  c.enumerated = enumerate(space, max_atoms, [&](const std::vector<std::uint64_t>& at) {
    if (holds(space, pred, at))
      ++c.satisfying;
  });
  return c;
}

mpq_class oracle_probability(const SpaceSpec& space, const dsl::Pred& pred,
                             std::uint64_t max_atoms) {
  const Counts c = count(space, pred, max_atoms);
  mpq_class q(static_cast<unsigned long>(c.satisfying), static_cast<unsigned long>(c.enumerated));
  q.canonicalize();
  return q;
}

mpq_class oracle_conditional(const SpaceSpec& space, const dsl::Pred& a, const dsl::Pred& b,
                             std::uint64_t max_atoms) {
  std::uint64_t both = 0;
  std::uint64_t given = 0;
  enumerate(space, max_atoms, [&](const std::vector<std::uint64_t>& at) {
    if (holds(space, b, at)) {
      ++given;
      if (holds(space, a, at))
        ++both;
    }
  });
  if (given == 0)
    throw std::domain_error("conditioning on impossibility");
  mpq_class q(static_cast<unsigned long>(both), static_cast<unsigned long>(given));
  q.canonicalize();
  return q;
}

std::vector<OracleResult> oracle_queries(const dsl::ModelAst& ast, std::uint64_t max_atoms) {
  const SpaceSpec space = space_spec(ast);
  std::vector<OracleResult> out;
  for (std::size_t i = 0; i < ast.queries.size(); ++i) {
    const auto& q = ast.queries[i];
    OracleResult r;
    r.query_id = "#" + std::to_string(i) + " " + dsl::query_text(q);
    r.kind = q.kind;
    try {
      switch (q.kind) {
        case dsl::QueryKind::probability:
          r.value = oracle_probability(space, *q.a, max_atoms);
          break;
        case dsl::QueryKind::conditional:
          r.value = oracle_conditional(space, *q.a, *q.b, max_atoms);
          break;
        case dsl::QueryKind::evidence:
          r.value = mpq_class(static_cast<unsigned long>(count(space, *q.a, max_atoms).satisfying));
          break;
        case dsl::QueryKind::odds:
        case dsl::QueryKind::log_odds: {
          const Counts c = count(space, *q.a, max_atoms);
          const std::uint64_t against = c.enumerated - c.satisfying;
          if (against == 0) {
            r.infinite_odds = true;
            if (q.kind == dsl::QueryKind::log_odds)
              r.error = "log-odds undefined";
          } else {
            mpq_class v(static_cast<unsigned long>(c.satisfying), static_cast<unsigned long>(against));
            v.canonicalize();
            r.value = v;
            if (c.satisfying == 0 && q.kind == dsl::QueryKind::log_odds)
              r.error = "log-odds undefined";
          }
          break;
        }
        case dsl::QueryKind::table:
          for (const auto& part : ast.partitions)
            if (part.name == q.table)
              for (const auto& b : part.blocks)
                r.rows.push_back(oracle_probability(space, *b.pred, max_atoms));
          break;
        case dsl::QueryKind::atomic:
          r.value = mpq_class(1, static_cast<unsigned long>(space.atom_count()));
          break;
      }
    } catch (const std::domain_error& e) {
      r.error = e.what();
    }
    r.enumerated = space.atom_count();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace evidentia::oracle
