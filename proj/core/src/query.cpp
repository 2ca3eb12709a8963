#include "evidentia/query.hpp"

#include <stdexcept>

namespace evidentia {

std::string_view provenance(dsl::QueryKind kind) {
  switch (kind) {
    case dsl::QueryKind::probability: return "Theorem 4";
    case dsl::QueryKind::conditional: return "Theorem 5";
    case dsl::QueryKind::odds: return "Theorem 3";
    case dsl::QueryKind::log_odds: return "Theorem 3";
    case dsl::QueryKind::evidence: return "Axiom 3";
    case dsl::QueryKind::table: return "Theorem 4";
    case dsl::QueryKind::atomic: return "Theorem 4";
  }
  return "?";
}

QueryResult evaluate(const CompiledModel& model, const CompiledQuery& query,
                     const EvalOptions& options) {
  QueryResult r;
  r.query = query.text;
  r.kind = query.source.kind;
  r.provenance = std::string(provenance(r.kind));
  try {
    switch (r.kind) {
      case dsl::QueryKind::probability:
        r.value = probability(*query.a).value();
        break;
      case dsl::QueryKind::conditional:
        r.value = conditional_probability(*query.a, *query.b).value();
        break;
      case dsl::QueryKind::evidence:
        r.value = evidence(*query.a).value();
        break;
      case dsl::QueryKind::odds: {
        const Odds o = odds(*query.a);
        r.odds_kind = o.kind;
        if (o.defined())
          r.value = o.value;
        break;
      }
      case dsl::QueryKind::log_odds: {
        const Odds o = odds(*query.a);
        r.odds_kind = o.kind;
        if (o.defined())
          r.value = o.value;
        r.log_odds = log_odds(*query.a, options.digits, options.log_base).decimal;
        break;
      }
      case dsl::QueryKind::table:
        for (auto& [name, p] : partition_distribution(model.partitions[query.partition].partition))
          r.rows.push_back({name, p.value()});
        break;
      case dsl::QueryKind::atomic:
        r.value = atomic_probability(*model.space).value();
        break;
    }
  } catch (const std::domain_error& e) {
    r.error = e.what();
  }
  return r;
}

std::vector<QueryResult> evaluate_all(const CompiledModel& model, const EvalOptions& options) {
  std::vector<QueryResult> out;
  out.reserve(model.queries.size());
  for (const auto& q : model.queries)
    out.push_back(evaluate(model, q, options));
  return out;
}

}  // namespace evidentia
