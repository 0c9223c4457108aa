#pragma once

#include <string>
#include <string_view>

namespace rexp {

// A half-open slice of a source file.  Line and column are 1-based and
// measured in Unicode code points; length is a code point count.
struct SourceSpan {
  std::string file;
  int line = 1;
  int column = 1;
  int length = 0;

  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

// "file:line:column"
std::string to_string(const SourceSpan& s);

// Number of code points in a UTF-8 string (continuation bytes are skipped).
std::size_t utf8_length(std::string_view text);

}  // namespace rexp
