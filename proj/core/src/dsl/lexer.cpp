#include "evidentia/dsl/lexer.hpp"

namespace evidentia::dsl {

std::string_view to_string(TokenKind k) {
  switch (k) {
    case TokenKind::identifier: return "identifier";
    case TokenKind::string: return "string";
    case TokenKind::number: return "number";
    case TokenKind::lbrace: return "'{'";
    case TokenKind::rbrace: return "'}'";
    case TokenKind::lparen: return "'('";
    case TokenKind::rparen: return "')'";
    case TokenKind::comma: return "','";
    case TokenKind::assign: return "'='";
    case TokenKind::equal: return "'=='";
    case TokenKind::less: return "'<'";
    case TokenKind::less_eq: return "'<='";
    case TokenKind::greater: return "'>'";
    case TokenKind::greater_eq: return "'>='";
    case TokenKind::pipe: return "'|'";
    case TokenKind::colon: return "':'";
    case TokenKind::semicolon: return "';'";
  }
  return "?";
}

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_ident_start(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; }
bool is_ident(char c) { return is_ident_start(c) || is_digit(c); }

class Lexer {
public:
  Lexer(std::string_view src, Diagnostics& diags) : src_(src), diags_(diags) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_trivia();
      if (eof())
        return out;
      mark();
      const char c = peek();
      if (is_ident_start(c)) {
        while (!eof() && is_ident(peek()))
          next();
        out.push_back(make(TokenKind::identifier, std::string(src_.substr(start_, pos_ - start_))));
      } else if (is_digit(c) || (c == '-' && is_digit(peek(1)))) {
        lex_number(out);
      } else if (c == '"') {
        lex_string(out);
      } else {
        lex_punct(out);
      }
    }
  }

private:
  bool eof() const { return pos_ >= src_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }
  void next() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else if ((static_cast<unsigned char>(src_[pos_]) & 0xC0) != 0x80) {
      ++col_;  // count code points, not continuation bytes
    }
    ++pos_;
  }
  void mark() {
    start_ = pos_;
    start_line_ = line_;
    start_col_ = col_;
  }
  SourceSpan span() const { return {start_, pos_, start_line_, start_col_, line_, col_}; }
  Token make(TokenKind k, std::string text) const { return {k, std::move(text), span()}; }

  void skip_trivia() {
    while (!eof()) {
      const char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        next();
      } else if (c == '#') {
        while (!eof() && peek() != '\n')
          next();
      } else {
        return;
      }
    }
  }

  void lex_number(std::vector<Token>& out) {
    if (peek() == '-')
      next();
    while (!eof() && is_digit(peek()))
      next();
    if (peek() == '.' && is_digit(peek(1))) {
      next();
      while (!eof() && is_digit(peek()))
        next();
    }
    out.push_back(make(TokenKind::number, std::string(src_.substr(start_, pos_ - start_))));
  }

  void lex_string(std::vector<Token>& out) {
    next();  // opening quote
    std::string text;
    while (!eof() && peek() != '"' && peek() != '\n') {
      if (peek() == '\\') {
        next();
        if (eof())
          break;
        const char e = peek();
        if (e == 'n')
          text += '\n';
        else if (e == 't')
          text += '\t';
        else if (e == '"' || e == '\\')
          text += e;
        else
          diags_.error(std::string("unknown escape '\\") + e + "'", span());
        next();
      } else {
        text += peek();
        next();
      }
    }
    if (peek() != '"') {
      diags_.error("unterminated string", span());
      return;
    }
    next();
    out.push_back(make(TokenKind::string, std::move(text)));
  }

  void lex_punct(std::vector<Token>& out) {
    const char c = peek();
    auto one = [&](TokenKind k) {
      next();
      out.push_back(make(k, std::string(src_.substr(start_, 1))));
    };
    auto maybe_two = [&](TokenKind single, TokenKind dbl) {
      next();
      if (peek() == '=') {
        next();
        out.push_back(make(dbl, std::string(src_.substr(start_, 2))));
      } else {
        out.push_back(make(single, std::string(src_.substr(start_, 1))));
      }
    };
    switch (c) {
      case '{': one(TokenKind::lbrace); return;
      case '}': one(TokenKind::rbrace); return;
      case '(': one(TokenKind::lparen); return;
      case ')': one(TokenKind::rparen); return;
      case ',': one(TokenKind::comma); return;
      case '|': one(TokenKind::pipe); return;
      case ':': one(TokenKind::colon); return;
      case ';': one(TokenKind::semicolon); return;
      case '=': maybe_two(TokenKind::assign, TokenKind::equal); return;
      case '<': maybe_two(TokenKind::less, TokenKind::less_eq); return;
      case '>': maybe_two(TokenKind::greater, TokenKind::greater_eq); return;
      default: break;
    }
    // Consume one whole UTF-8 sequence so the report names a full character.
    next();
    while (!eof() && (static_cast<unsigned char>(peek()) & 0xC0) == 0x80)
      ++pos_;
    diags_.error("illegal character '" + std::string(src_.substr(start_, pos_ - start_)) + "'",
                 span());
  }

  std::string_view src_;
  Diagnostics& diags_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  std::size_t start_ = 0;
  int start_line_ = 1;
  int start_col_ = 1;
};

}  // namespace

std::vector<Token> tokenize(std::string_view source, Diagnostics& diags) {
  return Lexer(source, diags).run();
}

}  // namespace evidentia::dsl
