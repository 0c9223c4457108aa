#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "rexp/regexp.hpp"

namespace rexp {

// Outcome of applying a user predicate to a single word.  A predicate that
// raises instead of answering is reported as Error; a non-boolean answer
// carries its rendering for diagnostics.
struct PredResult {
  enum class Kind { True, False, NonBoolean, Error };

  Kind kind = Kind::False;
  std::string produced;  // rendering of a non-boolean result
  std::string error;     // description of an evaluation failure

  static PredResult yes() { return {Kind::True, {}, {}}; }
  static PredResult no() { return {Kind::False, {}, {}}; }
  static PredResult non_boolean(std::string rendering) {
    return {Kind::NonBoolean, std::move(rendering), {}};
  }
  static PredResult failure(std::string message) {
    return {Kind::Error, {}, std::move(message)};
  }
};

using Predicate = std::function<PredResult(const Word&)>;

// A dynamically typed argument value, exactly as a checked constructor
// receives it.  Anything may arrive in any position; the recipe checks sort
// out what is acceptable where.
class Value {
 public:
  static Value regexp(RegExp r);
  static Value symbol(std::string text);  // bare atom, e.g. b or foo
  static Value string(std::string text);  // quoted text, e.g. "b"
  static Value integer(std::int64_t n);
  static Value list(std::vector<Value> items);
  static Value predicate(Predicate p);

  bool is_regexp() const;
  bool is_symbol() const;
  bool is_string() const;
  bool is_integer() const;
  bool is_list() const;
  bool is_predicate() const;

  const RegExp& as_regexp() const;
  const std::string& as_symbol() const;
  const std::string& as_string() const;
  std::int64_t as_integer() const;
  const std::vector<Value>& as_list() const;
  const Predicate& as_predicate() const;

 private:
  struct Sym { std::string text; };
  struct Str { std::string text; };
  using Rep = std::variant<RegExp, Sym, Str, std::int64_t, std::vector<Value>, Predicate>;

  explicit Value(Rep rep) : rep_(std::move(rep)) {}
  Rep rep_;
};

// Diagnostic rendering: symbols bare (b), texts quoted ("b"), integers plain
// (3), lists parenthesized ((a b)), regexps in constructor syntax, and
// procedures as #<procedure>.
std::string render_value(const Value& v);

}  // namespace rexp
