#include "rexp/span.hpp"

namespace rexp {

std::string to_string(const SourceSpan& s) {
  return s.file + ":" + std::to_string(s.line) + ":" + std::to_string(s.column);
}

std::size_t utf8_length(std::string_view text) {
  std::size_t n = 0;
  for (unsigned char ch : text) {
    if ((ch & 0xc0) != 0x80) ++n;  // count everything but continuation bytes
  }
  return n;
}

}  // namespace rexp
