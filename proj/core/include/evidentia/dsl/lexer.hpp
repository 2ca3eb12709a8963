#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "evidentia/dsl/diagnostic.hpp"

namespace evidentia::dsl {

enum class TokenKind {
  identifier,  // also every keyword; the parser matches keywords by text
  string,
  number,
  lbrace,
  rbrace,
  lparen,
  rparen,
  comma,
  assign,     // =
  equal,      // ==
  less,
  less_eq,
  greater,
  greater_eq,
  pipe,
  colon,
  semicolon,
};

std::string_view to_string(TokenKind k);

struct Token {
  TokenKind kind;
  std::string text;  // decoded contents for strings, raw text otherwise
  SourceSpan span;
};

/// Splits `source` into tokens, skipping whitespace and `#` comments. Illegal
/// characters and unterminated strings are reported to `diags` and skipped.
std::vector<Token> tokenize(std::string_view source, Diagnostics& diags);

}  // namespace evidentia::dsl
