#include "rexp/symbol.hpp"

#include <algorithm>
#include <stdexcept>

namespace rexp {

namespace {
constexpr std::string_view kSpecials = "$&!*";
}

Symbol::Symbol(char ch) : ch_(ch) {
  if (!valid_char(ch)) {
    throw std::invalid_argument(std::string("not a symbol character: ") + ch);
  }
}

bool Symbol::valid_char(char ch) {
  return (ch >= 'a' && ch <= 'z') || kSpecials.find(ch) != std::string_view::npos;
}

std::string Symbol::universe() {
  std::string all;
  for (char ch = 'a'; ch <= 'z'; ++ch) all.push_back(ch);
  all.append(kSpecials);
  return all;
}

Word word_from(std::string_view letters) {
  Word w;
  w.reserve(letters.size());
  for (char ch : letters) w.push_back(Symbol(ch));
  return w;
}

std::string render_word(const Word& w) {
  if (w.empty()) return "ε";
  std::string out = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out.push_back(' ');
    out.push_back(w[i].value());
  }
  out.push_back(')');
  return out;
}

std::string render_word_list(const std::vector<Word>& ws) {
  std::string out = "(";
  for (std::size_t i = 0; i < ws.size(); ++i) {
    if (i > 0) out.push_back(' ');
    out += render_word(ws[i]);
  }
  out.push_back(')');
  return out;
}

std::optional<Alphabet> Alphabet::from_symbols(std::vector<Symbol> symbols) {
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    for (std::size_t j = i + 1; j < symbols.size(); ++j) {
      if (symbols[i] == symbols[j]) return std::nullopt;
    }
  }
  Alphabet a;
  a.symbols_ = std::move(symbols);
  return a;
}

bool Alphabet::contains(Symbol s) const {
  return std::find(symbols_.begin(), symbols_.end(), s) != symbols_.end();
}

bool Alphabet::contains(char ch) const {
  return Symbol::valid_char(ch) && contains(Symbol(ch));
}

std::string Alphabet::render() const {
  std::string out = "(";
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (i > 0) out.push_back(' ');
    out.push_back(symbols_[i].value());
  }
  out.push_back(')');
  return out;
}

}  // namespace rexp
