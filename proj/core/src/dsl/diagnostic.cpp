#include "evidentia/dsl/diagnostic.hpp"

#include <algorithm>

namespace evidentia::dsl {

SourceSpan SourceSpan::cover(const SourceSpan& a, const SourceSpan& b) {
  SourceSpan s = a.begin <= b.begin ? a : b;
  const SourceSpan& last = a.end >= b.end ? a : b;
  s.end = last.end;
  s.end_line = last.end_line;
  s.end_column = last.end_column;
  return s;
}

std::string SourceSpan::to_string() const {
  return std::to_string(line) + ":" + std::to_string(column) + "-" + std::to_string(end_line) +
         ":" + std::to_string(end_column);
}

bool Diagnostics::has_errors() const {
  return std::any_of(items_.begin(), items_.end(),
                     [](const Diagnostic& d) { return d.severity == Severity::error; });
}

std::string Diagnostics::render(std::string_view filename) const {
  std::string out;
  for (const auto& d : items_) {
    out += filename;
    out += ":" + std::to_string(d.span.line) + ":" + std::to_string(d.span.column) + ": ";
    out += d.severity == Severity::error ? "error: " : "warning: ";
    out += d.message;
    out += "\n";
  }
  return out;
}

}  // namespace evidentia::dsl
