#pragma once

// Syntax tree for model files:
//
//   model "deck" {
//     dimension rank = {A, 2, ..., K}
//     continuum theta from 0 to 90 tranches 90
//     partition groups { aces: rank == A; rest: not rank == A; }
//   }
//   query P(rank == A | rank in {A, J, Q, K})
//
// Trees are immutable once built; predicate nodes are shared.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "evidentia/dsl/diagnostic.hpp"

namespace evidentia::dsl {

struct Label {
  std::string text;
  SourceSpan span;
};

struct DimensionDecl {
  std::string name;
  std::vector<Label> labels;
  SourceSpan span;
};

struct ContinuumDecl {
  std::string name;
  mpq_class lo;
  mpq_class hi;
  /// Tranche count; nullopt for `tranches aleph`.
  std::optional<std::uint64_t> tranches;
  SourceSpan span;
};

using Declaration = std::variant<DimensionDecl, ContinuumDecl>;

const std::string& declaration_name(const Declaration& d);
const SourceSpan& declaration_span(const Declaration& d);

enum class CompareOp { less, less_eq, greater, greater_eq };

std::string_view to_string(CompareOp op);

struct Pred;
using PredPtr = std::shared_ptr<const Pred>;

struct Pred {
  enum class Kind { constant, equals, member_of, compare, negation, conjunction, disjunction };

  Kind kind = Kind::constant;
  bool value = false;          // constant
  std::string variable;        // equals, member_of, compare
  std::vector<Label> labels;   // equals (one), member_of
  CompareOp op = CompareOp::less;
  mpq_class bound;             // compare
  std::vector<PredPtr> operands;  // negation (one), conjunction, disjunction (two or more)
  SourceSpan span;

  static PredPtr constant_of(bool v, SourceSpan span = {});
  static PredPtr equals_of(std::string var, Label label, SourceSpan span = {});
  static PredPtr member_of_set(std::string var, std::vector<Label> labels, SourceSpan span = {});
  static PredPtr compare_of(std::string var, CompareOp op, mpq_class bound, SourceSpan span = {});
  static PredPtr negation_of(PredPtr p, SourceSpan span = {});
  static PredPtr conjunction_of(std::vector<PredPtr> ps, SourceSpan span = {});
  static PredPtr disjunction_of(std::vector<PredPtr> ps, SourceSpan span = {});
};

struct PartitionBlockDecl {
  std::string name;
  PredPtr pred;
  SourceSpan span;
};

struct PartitionDecl {
  std::string name;
  std::vector<PartitionBlockDecl> blocks;
  SourceSpan span;
};

enum class QueryKind { probability, conditional, odds, log_odds, evidence, table, atomic };

std::string_view to_string(QueryKind k);

struct Query {
  QueryKind kind = QueryKind::probability;
  PredPtr a;          // all but table and atomic
  PredPtr b;          // conditional only
  std::string table;  // table only
  SourceSpan span;
};

struct ModelAst {
  std::string name;
  std::vector<Declaration> declarations;
  std::vector<PartitionDecl> partitions;
  std::vector<Query> queries;
  SourceSpan span;
};

/// Exact value of a NUMBER token such as `-12.25`. Throws
/// std::invalid_argument on malformed text.
mpq_class decimal_to_rational(std::string_view text);

/// Inverse of decimal_to_rational for terminating decimals; other rationals
/// render as `p/q`.
std::string rational_to_text(const mpq_class& value);

/// Equality of everything except source spans.
bool structurally_equal(const Pred& a, const Pred& b);
bool structurally_equal(const ModelAst& a, const ModelAst& b);

}  // namespace evidentia::dsl
