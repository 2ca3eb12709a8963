#include "evidentia/random_model.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace evidentia::random {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

template <typename T>
const T& pick(Rng& rng, const std::vector<T>& xs) {
  return xs[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(xs.size()) - 1))];
}

std::string random_label(Rng& rng, int index) {
  const std::string n = std::to_string(index);
  switch (uniform(rng, 0, 5)) {
    case 0: return "l" + n;
    case 1: return n;
    case 2: return "-" + n;
    case 3: return n + ".5";
    case 4: return "label " + n;
    default: return "x_" + n + "'";
  }
}

const std::vector<std::string> kWidths = {"1", "0.5", "0.25", "2", "5", "0.1", "3", "10"};

std::vector<dsl::Label> random_subset(Rng& rng, const std::vector<dsl::Label>& labels) {
  std::vector<dsl::Label> out;
  for (const auto& l : labels)
    if (coin(rng, 0.4))
      out.push_back(l);
  if (out.empty())
    out.push_back(pick(rng, labels));
  return out;
}

// Bounds usable against a continuum: tranche boundaries, plus points
// outside the range. For aleph tranches any point of a coarse grid works.
mpq_class random_bound(Rng& rng, const dsl::ContinuumDecl& c) {
  const mpq_class range = c.hi - c.lo;
  if (coin(rng, 0.1))
    return coin(rng) ? mpq_class(c.lo - 1) : mpq_class(c.hi + 1);
  if (!c.tranches) {
    const int steps = pick(rng, std::vector<int>{2, 4, 5, 8, 10});
    mpq_class b = c.lo + range * mpq_class(uniform(rng, 0, steps), steps);
    b.canonicalize();
    return b;
  }
  const auto n = static_cast<int>(*c.tranches);
  mpq_class b = c.lo + range * mpq_class(uniform(rng, 0, n), n);
  b.canonicalize();
  return b;
}

dsl::PredPtr random_leaf(Rng& rng, const dsl::ModelAst& ast) {
  if (coin(rng, 0.08))
    return dsl::Pred::constant_of(coin(rng));
  const auto& decl = pick(rng, ast.declarations);
  if (const auto* d = std::get_if<dsl::DimensionDecl>(&decl)) {
    if (coin(rng))
      return dsl::Pred::equals_of(d->name, pick(rng, d->labels));
    return dsl::Pred::member_of_set(d->name, random_subset(rng, d->labels));
  }
  const auto& c = std::get<dsl::ContinuumDecl>(decl);
  const auto op = static_cast<dsl::CompareOp>(uniform(rng, 0, 3));
  return dsl::Pred::compare_of(c.name, op, random_bound(rng, c));
}

std::uint64_t declaration_size(const dsl::Declaration& d) {
  if (const auto* dim = std::get_if<dsl::DimensionDecl>(&d))
    return dim->labels.size();
  const auto& c = std::get<dsl::ContinuumDecl>(d);
  return c.tranches ? *c.tranches : 1;
}

// Splits the labels of a dimension, or the range of a continuum, into
// blocks.
dsl::PartitionDecl random_partition(Rng& rng, const dsl::ModelAst& ast, int index) {
  dsl::PartitionDecl part;
  part.name = "p" + std::to_string(index);
  const auto& decl = pick(rng, ast.declarations);
  if (const auto* d = std::get_if<dsl::DimensionDecl>(&decl)) {
    const int k = uniform(rng, 1, std::min<int>(4, static_cast<int>(d->labels.size())));
    std::vector<std::vector<dsl::Label>> groups(static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < d->labels.size(); ++i) {
      const auto g = i < groups.size() ? i : static_cast<std::size_t>(uniform(rng, 0, k - 1));
      groups[g].push_back(d->labels[i]);
    }
    for (std::size_t g = 0; g < groups.size(); ++g) {
      auto pred = groups[g].size() == 1 && coin(rng)
                      ? dsl::Pred::equals_of(d->name, groups[g].front())
                      : dsl::Pred::member_of_set(d->name, groups[g]);
      part.blocks.push_back({"b" + std::to_string(g), pred, {}});
    }
    return part;
  }
  const auto& c = std::get<dsl::ContinuumDecl>(decl);
  const mpq_class cut = random_bound(rng, c);
  part.blocks.push_back({"low", dsl::Pred::compare_of(c.name, dsl::CompareOp::less, cut), {}});
  part.blocks.push_back(
      {"high", dsl::Pred::compare_of(c.name, dsl::CompareOp::greater_eq, cut), {}});
  return part;
}

}  // namespace

dsl::PredPtr predicate(Rng& rng, const dsl::ModelAst& ast, int depth) {
  if (depth <= 0 || coin(rng, 0.35))
    return random_leaf(rng, ast);
  switch (uniform(rng, 0, 2)) {
    case 0:
      return dsl::Pred::negation_of(predicate(rng, ast, depth - 1));
    case 1:
    case 2: {
      std::vector<dsl::PredPtr> ops;
      const int n = uniform(rng, 2, 3);
      for (int i = 0; i < n; ++i)
        ops.push_back(predicate(rng, ast, depth - 1));
      return uniform(rng, 1, 2) == 1 ? dsl::Pred::conjunction_of(std::move(ops))
                                     : dsl::Pred::disjunction_of(std::move(ops));
    }
  }
  return random_leaf(rng, ast);
}

dsl::ModelAst model(Rng& rng, const ModelShape& shape) {
  dsl::ModelAst ast;
  ast.name = "random " + std::to_string(uniform(rng, 0, 9999));
  std::uint64_t atoms = 1;
  const int decls = uniform(rng, 1, shape.max_declarations);
  for (int i = 0; i < decls; ++i) {
    dsl::Declaration decl;
    if (coin(rng, 0.6)) {
      dsl::DimensionDecl d;
      d.name = "d" + std::to_string(i);
      const int n = uniform(rng, 1, shape.max_labels);
      for (int j = 0; j < n; ++j)
        d.labels.push_back({random_label(rng, j), {}});
      decl = std::move(d);
    } else {
      dsl::ContinuumDecl c;
      c.name = "c" + std::to_string(i);
      c.lo = dsl::decimal_to_rational(std::to_string(uniform(rng, -20, 20)) +
                                      (coin(rng, 0.3) ? ".5" : ""));
      const mpq_class width = dsl::decimal_to_rational(pick(rng, kWidths));
      const int n = uniform(rng, 1, shape.max_tranches);
      c.hi = c.lo + width * n;
      if (shape.aleph_tranches && coin(rng, 0.3))
        c.tranches = std::nullopt;
      else
        c.tranches = static_cast<std::uint64_t>(n);
      decl = std::move(c);
    }
    const std::uint64_t size = declaration_size(decl);
    if (atoms * size > shape.max_atoms)
      continue;
    atoms *= size;
    ast.declarations.push_back(std::move(decl));
  }
  if (ast.declarations.empty()) {
    dsl::DimensionDecl d;
    d.name = "d";
    d.labels = {{"yes", {}}, {"no", {}}};
    ast.declarations.emplace_back(std::move(d));
  }

  const int parts = uniform(rng, 0, 2);
  for (int i = 0; i < parts; ++i)
    ast.partitions.push_back(random_partition(rng, ast, i));

  const int queries = uniform(rng, 1, shape.max_queries);
  for (int i = 0; i < queries; ++i) {
    dsl::Query q;
    q.kind = static_cast<dsl::QueryKind>(uniform(rng, 0, 6));
    if (q.kind == dsl::QueryKind::table && ast.partitions.empty())
      q.kind = dsl::QueryKind::probability;
    switch (q.kind) {
      case dsl::QueryKind::table:
        q.table = pick(rng, ast.partitions).name;
        break;
      case dsl::QueryKind::atomic:
        break;
      case dsl::QueryKind::conditional:
        q.a = predicate(rng, ast, shape.max_depth);
        q.b = predicate(rng, ast, shape.max_depth);
        break;
      default:
        q.a = predicate(rng, ast, shape.max_depth);
        break;
    }
    ast.queries.push_back(std::move(q));
  }
  return ast;
}

Proposition proposition(Rng& rng, const SpacePtr& space, double density) {
  std::bernoulli_distribution keep(density);
  std::vector<std::size_t> ids;
  for (std::size_t i = 0; i < space->size(); ++i)
    if (keep(rng))
      ids.push_back(i);
  return Proposition::from_ids(space, ids);
}

SpacePtr space(Rng& rng, std::size_t max_atoms, bool scaled, int max_dims) {
  std::vector<Dimension> dims;
  std::size_t atoms = 1;
  const int n = uniform(rng, 1, max_dims);
  for (int i = 0; i < n; ++i) {
    const auto room = static_cast<int>(std::min<std::size_t>(max_atoms / atoms, 16));
    if (room < 1)
      break;
    const int size = uniform(rng, 1, room);
    Dimension d{"v" + std::to_string(i), {}};
    for (int j = 0; j < size; ++j)
      d.labels.push_back("s" + std::to_string(j));
    atoms *= static_cast<std::size_t>(size);
    dims.push_back(std::move(d));
  }
  if (dims.empty())
    dims.push_back({"v0", {"s0"}});
  return scaled ? build_scaled_space(std::move(dims), max_atoms)
                : build_finite_space(std::move(dims), max_atoms);
}

std::vector<Proposition> disjoint_family(Rng& rng, const SpacePtr& space, int parts) {
  std::vector<std::vector<std::size_t>> ids(static_cast<std::size_t>(parts));
  for (std::size_t i = 0; i < space->size(); ++i) {
    const int slot = uniform(rng, -1, parts - 1);  // -1: in no member
    if (slot >= 0)
      ids[static_cast<std::size_t>(slot)].push_back(i);
  }
  std::vector<Proposition> out;
  for (const auto& v : ids)
    out.push_back(Proposition::from_ids(space, v));
  return out;
}

}  // namespace evidentia::random
