#pragma once

#include <span>
#include <string_view>

#include "evidentia/dsl/ast.hpp"
#include "evidentia/dsl/diagnostic.hpp"
#include "evidentia/dsl/lexer.hpp"

namespace evidentia::dsl {

/// Recursive-descent parser for model files. Identifiers are resolved
/// against the declarations seen so far, so unknown names, opaque labels
/// compared numerically, and unknown labels are all reported here.
///
/// Errors are accumulated; after a syntax error the parser resynchronizes at
/// the next declaration, block or query. The returned tree is only
/// meaningful when no error was reported.
ModelAst parse(std::span<const Token> tokens, Diagnostics& diags);

struct ParseResult {
  ModelAst ast;
  Diagnostics diagnostics;

  bool ok() const { return !diagnostics.has_errors(); }
};

/// tokenize() followed by parse().
ParseResult parse_source(std::string_view source);

/// Words that cannot name a declaration, partition or block.
bool is_reserved_word(std::string_view word);

}  // namespace evidentia::dsl
