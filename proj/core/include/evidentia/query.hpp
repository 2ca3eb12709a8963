#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "evidentia/compiler.hpp"
#include "evidentia/decimal.hpp"
#include "evidentia/evidence.hpp"
#include "evidentia/hyperrational.hpp"

namespace evidentia {

struct EvalOptions {
  int digits = 6;
  LogBase log_base = LogBase::natural;
};

struct QueryRow {
  std::string name;
  Hyperrational value;
};

/// The exact answer to one query plus what produced it.
struct QueryResult {
  std::string query;
  dsl::QueryKind kind = dsl::QueryKind::probability;
  std::string provenance;  // "Theorem 4", ...

  /// Exact value; for O and L this is the odds (absent for zero or infinite
  /// odds, see odds_kind).
  std::optional<Hyperrational> value;
  std::optional<Odds::Kind> odds_kind;
  std::optional<std::string> log_odds;  // L only, approximate
  std::vector<QueryRow> rows;            // table only
  std::optional<std::string> error;
};

std::string_view provenance(dsl::QueryKind kind);

/// Never throws for evaluation failures such as conditioning on an
/// impossible proposition; those are reported in QueryResult::error.
QueryResult evaluate(const CompiledModel& model, const CompiledQuery& query,
                     const EvalOptions& options = {});

std::vector<QueryResult> evaluate_all(const CompiledModel& model, const EvalOptions& options = {});

}  // namespace evidentia
