#pragma once

#include <memory>
#include <set>
#include <stdexcept>
#include <string>

#include "rexp/symbol.hpp"

namespace rexp {

enum class RegExpKind { Null, Empty, Singleton, Union, Concat, KleeneStar };

// Lowercase constructor-style name: "null", "empty", "singleton", "union",
// "concat", "kleenestar".  Diagnostics append "-regexp".
const char* kind_name(RegExpKind k);

// Thrown by observers applied to the wrong variant.
struct VariantError : std::logic_error {
  explicit VariantError(const std::string& what) : std::logic_error(what) {}
};

// An immutable regular expression over Symbol.  Values are cheap shared
// handles to structurally immutable trees; equality is structural.
class RegExp {
 public:
  RegExpKind kind() const { return node_->kind; }

  friend bool operator==(const RegExp& a, const RegExp& b);

 private:
  struct Node {
    RegExpKind kind;
    std::optional<Symbol> sym;  // Singleton only
    std::shared_ptr<const Node> r1;
    std::shared_ptr<const Node> r2;
  };

  explicit RegExp(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;

  friend RegExp make_null();
  friend RegExp make_empty();
  friend RegExp make_singleton(Symbol a);
  friend RegExp make_union(const RegExp& r1, const RegExp& r2);
  friend RegExp make_concat(const RegExp& r1, const RegExp& r2);
  friend RegExp make_kleenestar(const RegExp& r1);
  friend Symbol singleton_a(const RegExp& r);
  friend RegExp union_r1(const RegExp& r);
  friend RegExp union_r2(const RegExp& r);
  friend RegExp concat_r1(const RegExp& r);
  friend RegExp concat_r2(const RegExp& r);
  friend RegExp kleenestar_r1(const RegExp& r);
};

// Constructors.  These build the plain algebra and perform no recipe checks;
// the checked path lives in validation.
RegExp make_null();
RegExp make_empty();
RegExp make_singleton(Symbol a);
RegExp make_union(const RegExp& r1, const RegExp& r2);
RegExp make_concat(const RegExp& r1, const RegExp& r2);
RegExp make_kleenestar(const RegExp& r1);

// Variant predicates.  Exactly one holds for any regexp.
bool is_null(const RegExp& r);
bool is_empty(const RegExp& r);
bool is_singleton(const RegExp& r);
bool is_union(const RegExp& r);
bool is_concat(const RegExp& r);
bool is_kleenestar(const RegExp& r);

// Observers.  Throw VariantError when applied to the wrong variant.
Symbol singleton_a(const RegExp& r);
RegExp union_r1(const RegExp& r);
RegExp union_r2(const RegExp& r);
RegExp concat_r1(const RegExp& r);
RegExp concat_r2(const RegExp& r);
RegExp kleenestar_r1(const RegExp& r);

// The set of symbols appearing in singleton leaves.
std::set<Symbol> collect_singletons(const RegExp& r);

// Canonical surface rendering, e.g. (union-regexp (singleton-regexp "a")
// (kleenestar-regexp (singleton-regexp "b"))).
std::string to_string(const RegExp& r);

}  // namespace rexp
