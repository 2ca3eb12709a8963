#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace evidentia::dsl {

/// Half-open byte range [begin, end) into the source, with 1-based
/// line/column of both ends.
struct SourceSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
  int line = 1;
  int column = 1;
  int end_line = 1;
  int end_column = 1;

  /// The smallest span covering both.
  static SourceSpan cover(const SourceSpan& a, const SourceSpan& b);
  std::string to_string() const;  // "2:3-2:17"
};

enum class Severity { error, warning };

struct Diagnostic {
  Severity severity = Severity::error;
  std::string message;
  SourceSpan span;
};

class Diagnostics {
public:
  void error(std::string message, const SourceSpan& span) {
    items_.push_back({Severity::error, std::move(message), span});
  }
  void warning(std::string message, const SourceSpan& span) {
    items_.push_back({Severity::warning, std::move(message), span});
  }
  void append(const Diagnostics& other) {
    items_.insert(items_.end(), other.items_.begin(), other.items_.end());
  }

  bool has_errors() const;
  bool empty() const { return items_.empty(); }
  const std::vector<Diagnostic>& items() const { return items_; }

  /// One line per diagnostic: `file:line:col: error: message`.
  std::string render(std::string_view filename) const;

private:
  std::vector<Diagnostic> items_;
};

}  // namespace evidentia::dsl
