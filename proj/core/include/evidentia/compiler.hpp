#pragma once

// Lowers a parsed model to a possibility space plus executable queries.
//
// Every declaration becomes one dimension of the product space. A continuum
// `from lo to hi tranches n` becomes n equal-width tranches labelled
// `[a,b)`; comparisons against it select whole tranches, so a bound that
// falls strictly inside a tranche is a compile error. With the scaled flag
// the same product is compiled as a scaled space of total cardinality aleph,
// and `tranches aleph` is allowed: the tranche count is then the smallest one
// whose boundaries include every bound the model compares against.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "evidentia/dsl/ast.hpp"
#include "evidentia/dsl/diagnostic.hpp"
#include "evidentia/possibility_space.hpp"

namespace evidentia {

struct CompileOptions {
  bool scaled = false;
  std::size_t max_atoms = kDefaultAtomLimit;
};

/// How one dimension of the compiled space was declared.
struct Axis {
  std::string name;
  bool continuum = false;
  mpq_class lo;     // continuum only
  mpq_class width;  // tranche width, continuum only
};

struct NamedPartition {
  std::string name;
  StateSpacePartition partition;
};

struct CompiledQuery {
  dsl::Query source;
  std::string text;
  std::optional<Proposition> a;
  std::optional<Proposition> b;
  std::size_t partition = 0;  // index into CompiledModel::partitions, table only
};

class CompiledModel {
public:
  std::string name;
  SpacePtr space;
  std::vector<Axis> axes;  // parallel to space->dimensions()
  std::vector<NamedPartition> partitions;
  std::vector<CompiledQuery> queries;

  /// Lowers a predicate over this model's declarations. Throws
  /// std::invalid_argument for unknown names, unknown labels, type
  /// mismatches and bounds that split a tranche.
  Proposition proposition(const dsl::Pred& pred) const;
};

struct CompileResult {
  std::optional<CompiledModel> model;
  dsl::Diagnostics diagnostics;

  bool ok() const { return model.has_value() && !diagnostics.has_errors(); }
};

CompileResult compile(const dsl::ModelAst& ast, const CompileOptions& options = {});

/// Tranche count chosen for a `tranches aleph` continuum: the least n such
/// that every bound compared against `name` strictly inside (lo, hi) lies on
/// a tranche boundary.
std::uint64_t aleph_tranche_count(const dsl::ModelAst& ast, const dsl::ContinuumDecl& decl);

}  // namespace evidentia
