#pragma once

#include <string>
#include <string_view>

#include "evidentia/dsl/ast.hpp"

namespace evidentia::dsl {

/// Canonical source text; reparses to a structurally equal tree.
std::string to_source(const ModelAst& ast);
std::string to_source(const Pred& pred);

/// `P(rank == A | rank in {A, J, Q, K})`, `table(groups)`, `atomic`.
std::string query_text(const Query& q);

/// A label as it must be written in source: bare when it lexes as a single
/// identifier or number, quoted otherwise.
std::string label_source(std::string_view label);

/// Indented tree with source spans, one node per line.
std::string dump(const ModelAst& ast);

}  // namespace evidentia::dsl
