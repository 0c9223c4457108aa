#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rexp {

// A symbol is a single character drawn from the fixed universe: the lowercase
// Roman letters plus the four specials $ & ! *.  Digits and uppercase letters
// are deliberately not symbols.
class Symbol {
 public:
  // Throws std::invalid_argument for characters outside the universe.
  explicit Symbol(char ch);

  char value() const { return ch_; }

  static bool valid_char(char ch);
  static std::string universe();  // "abc...z$&!*"

  friend bool operator==(Symbol, Symbol) = default;
  friend auto operator<=>(Symbol, Symbol) = default;

 private:
  char ch_;
};

using Word = std::vector<Symbol>;

// Convenience: "bba" -> (b b a).  Throws on invalid characters.
Word word_from(std::string_view letters);

// Diagnostic renderings: a word prints as (b b a), the empty word as ε, and a
// word list as ((a b b) (b)).
std::string render_word(const Word& w);
std::string render_word_list(const std::vector<Word>& ws);

// A duplicate-free ordered sequence of symbols.
class Alphabet {
 public:
  Alphabet() = default;

  // Rejects duplicates; preserves the given order.
  static std::optional<Alphabet> from_symbols(std::vector<Symbol> symbols);

  bool contains(Symbol s) const;
  bool contains(char ch) const;
  const std::vector<Symbol>& symbols() const { return symbols_; }
  bool empty() const { return symbols_.empty(); }

  std::string render() const;  // (a b)

 private:
  std::vector<Symbol> symbols_;
};

}  // namespace rexp
