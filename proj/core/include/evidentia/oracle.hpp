#pragma once

// Brute-force counting oracle. Recomputes finite-space answers by walking
// every label tuple of a model and counting the ones a predicate accepts,
// using plain GMP rationals. It shares only the syntax tree with the engine:
// no possibility spaces, propositions, evidence or hyperrationals.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "evidentia/dsl/ast.hpp"

namespace evidentia::oracle {

inline constexpr std::uint64_t kMaxAtoms = 10'000'000;

struct Axis {
  std::string name;
  std::vector<std::string> labels;  // opaque labels; empty for a continuum
  bool continuum = false;
  mpq_class lo;
  mpq_class width;
  std::uint64_t tranches = 0;

  std::uint64_t size() const { return continuum ? tranches : labels.size(); }
};

struct SpaceSpec {
  std::vector<Axis> axes;

  /// Product of axis sizes, saturating at UINT64_MAX.
  std::uint64_t atom_count() const;
};

/// The label structure of a model's finite space. Throws
/// std::invalid_argument for `tranches aleph` continua, which have no finite
/// enumeration.
SpaceSpec space_spec(const dsl::ModelAst& ast);

struct Counts {
  std::uint64_t satisfying = 0;
  std::uint64_t enumerated = 0;
};

/// Number of atoms accepted by `pred`. Throws std::invalid_argument when the
/// space exceeds `max_atoms` or a bound splits a tranche.
Counts count(const SpaceSpec& space, const dsl::Pred& pred, std::uint64_t max_atoms = kMaxAtoms);

/// #atoms satisfying pred / #atoms.
mpq_class oracle_probability(const SpaceSpec& space, const dsl::Pred& pred,
                             std::uint64_t max_atoms = kMaxAtoms);

/// #(a and b) / #b. Throws std::domain_error when no atom satisfies b.
mpq_class oracle_conditional(const SpaceSpec& space, const dsl::Pred& a, const dsl::Pred& b,
                             std::uint64_t max_atoms = kMaxAtoms);

struct OracleResult {
  std::string query_id;       // "#index query-text"
  dsl::QueryKind kind = dsl::QueryKind::probability;
  std::optional<mpq_class> value;  // absent when error or infinite odds
  bool infinite_odds = false;
  std::vector<mpq_class> rows;     // table queries
  std::optional<std::string> error;
  std::uint64_t enumerated = 0;
};

/// Answers every query of a model by counting (E as a count, O as a count
/// ratio, L by its odds, atomic as 1/#atoms).
std::vector<OracleResult> oracle_queries(const dsl::ModelAst& ast,
                                         std::uint64_t max_atoms = kMaxAtoms);

}  // namespace evidentia::oracle
