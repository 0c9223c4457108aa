#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rexp/automata.hpp"
#include "rexp/span.hpp"
#include "rexp/validation.hpp"

namespace rexp::dsl {

// Thrown for anything malformed before evaluation begins: lexical errors,
// arity and keyword mistakes, predicate type errors, duplicate definitions.
struct ParseError {
  std::string message;
  SourceSpan span;
};

// Thrown during evaluation for static mistakes the recipe does not cover,
// such as in-lang-of naming an unknown regexp.
struct EvalError {
  std::string message;
  SourceSpan span;
};

// ---------------------------------------------------------------------------
// Predicate mini-language

enum class PredOp {
  WordVar,    // the lambda parameter
  SymbolLit,  // 'a
  IntLit,     // 3
  And, Or, Not,
  EqQ,                 // eq?   (atoms: symbols or integers, mixed compares false)
  NumEq, Lt, Le, Gt, Ge,  // = < <= > >=
  OddQ, EvenQ,
  EmptyQ,
  Length,
  Count,     // (count 'a w)
  First, Last, Rest,
  InLangOf,  // (in-lang-of NAME w)
};

struct PredExpr {
  PredOp op{};
  SourceSpan span;
  std::string text;        // SymbolLit text, InLangOf name
  std::int64_t number = 0; // IntLit
  std::vector<PredExpr> args;
};

struct Lambda {
  std::string param;
  SourceSpan span;
  PredExpr body;
};

// ---------------------------------------------------------------------------
// Expressions

struct Datum {
  enum class Kind { Symbol, Integer, String, List };
  Kind kind{};
  SourceSpan span;
  std::string text;         // Symbol/String
  std::int64_t number = 0;  // Integer
  std::vector<Datum> items; // List
};

enum class KwKey { Sigma, Pred, GenCases, InLang, NotInLang };

const char* kw_name(KwKey key);  // "#:sigma", ...

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct KwArg {
  KwKey key{};
  SourceSpan span;              // span of the keyword token
  ExprPtr value;                // all keys except #:pred
  std::optional<Lambda> lambda; // #:pred only
};

struct Binding {
  std::string name;
  SourceSpan name_span;
  ExprPtr value;
};

enum class ExprKind { Name, StringLit, IntLit, Quoted, Call, Let };

struct Expr {
  ExprKind kind{};
  SourceSpan span;
  std::string name;             // Name
  std::string str;              // StringLit
  std::int64_t number = 0;      // IntLit
  std::optional<Datum> datum;   // Quoted
  RegExpKind ctor{};            // Call
  std::vector<ExprPtr> args;    // Call positional arguments
  std::vector<KwArg> kwargs;    // Call keyword arguments
  std::vector<Binding> bindings;// Let
  ExprPtr body;                 // Let
};

struct Definition {
  std::string name;
  SourceSpan name_span;
  ExprPtr body;
  SourceSpan span;
};

// Parse a whole file.  Throws ParseError.
std::vector<Definition> parse_file(std::string_view text, std::string file_name);

// Canonical surface rendering; parsing it again yields an equal AST.
std::string render(const std::vector<Definition>& defs);
std::string render(const Expr& e);

// Structural equality, ignoring spans.
bool structurally_equal(const Expr& a, const Expr& b);
bool structurally_equal(const std::vector<Definition>& a, const std::vector<Definition>& b);

// ---------------------------------------------------------------------------
// Evaluation

// Name -> regexp environment captured by a predicate, with NFA reuse.
class RegexpEnv {
 public:
  RegexpEnv() = default;
  explicit RegexpEnv(std::map<std::string, RegExp> defs);

  const RegExp* find(const std::string& name) const;
  const Nfa& nfa_for(const std::string& name) const;  // name must be bound

 private:
  std::map<std::string, RegExp> defs_;
  mutable std::map<std::string, Nfa> nfas_;
};

// Apply a predicate lambda to one word.
PredResult eval_pred(const Lambda& p, const Word& w, const RegexpEnv& env);

struct DefinitionReport {
  std::string name;
  TestReport report;
};

struct Session {
  std::map<std::string, Value> env;        // final bindings, in name order
  std::vector<DefinitionReport> reports;   // in definition order

  std::map<std::string, RegExp> regexps() const;  // regexp-valued subset
};

using FileResult = std::variant<Session, RecipeError, EvalError>;

// Evaluate definitions in order.  Stops at the first error; a RecipeError
// carries the span of the constructor call that failed.
FileResult eval_file(const std::vector<Definition>& defs, const ValidationOptions& opts);

}  // namespace rexp::dsl
