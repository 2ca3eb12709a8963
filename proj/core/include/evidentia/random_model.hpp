#pragma once

// Seeded generators for randomized models, predicates and propositions.

#include <cstdint>
#include <random>
#include <vector>

#include "evidentia/dsl/ast.hpp"
#include "evidentia/possibility_space.hpp"

namespace evidentia::random {

using Rng = std::mt19937_64;

struct ModelShape {
  std::uint64_t max_atoms = 10'000;
  int max_declarations = 4;
  int max_labels = 12;
  int max_tranches = 48;
  int max_depth = 3;
  int max_queries = 6;
  bool aleph_tranches = false;  // allow `tranches aleph`
};

/// A well-formed model: every name declared, every label known, every
/// comparison bound on a tranche boundary or outside the range. Spans are
/// left empty.
dsl::ModelAst model(Rng& rng, const ModelShape& shape = {});

/// A random predicate over the declarations of `ast`.
dsl::PredPtr predicate(Rng& rng, const dsl::ModelAst& ast, int depth);

/// Random subset of the atoms of `space`, each atom kept with probability
/// `density`.
Proposition proposition(Rng& rng, const SpacePtr& space, double density = 0.5);

/// A random product space of 1..max_dims dimensions with at most
/// `max_atoms` atoms, finite or scaled.
SpacePtr space(Rng& rng, std::size_t max_atoms, bool scaled, int max_dims = 3);

/// `parts` pairwise disjoint propositions over `space`; some may be empty.
std::vector<Proposition> disjoint_family(Rng& rng, const SpacePtr& space, int parts);

}  // namespace evidentia::random
