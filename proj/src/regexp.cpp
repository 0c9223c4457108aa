#include "rexp/regexp.hpp"

namespace rexp {

const char* kind_name(RegExpKind k) {
  switch (k) {
    case RegExpKind::Null: return "null";
    case RegExpKind::Empty: return "empty";
    case RegExpKind::Singleton: return "singleton";
    case RegExpKind::Union: return "union";
    case RegExpKind::Concat: return "concat";
    case RegExpKind::KleeneStar: return "kleenestar";
  }
  return "?";
}

namespace {

std::string variant_error_text(const char* observer, RegExpKind expected, RegExpKind actual) {
  std::string msg = observer;
  msg += ": expected a ";
  msg += kind_name(expected);
  msg += " regexp, but got a ";
  msg += kind_name(actual);
  msg += " regexp";
  return msg;
}

}  // namespace

RegExp make_null() {
  return RegExp(std::make_shared<const RegExp::Node>(
      RegExp::Node{RegExpKind::Null, std::nullopt, nullptr, nullptr}));
}

RegExp make_empty() {
  return RegExp(std::make_shared<const RegExp::Node>(
      RegExp::Node{RegExpKind::Empty, std::nullopt, nullptr, nullptr}));
}

RegExp make_singleton(Symbol a) {
  return RegExp(std::make_shared<const RegExp::Node>(
      RegExp::Node{RegExpKind::Singleton, a, nullptr, nullptr}));
}

RegExp make_union(const RegExp& r1, const RegExp& r2) {
  return RegExp(std::make_shared<const RegExp::Node>(
      RegExp::Node{RegExpKind::Union, std::nullopt, r1.node_, r2.node_}));
}

RegExp make_concat(const RegExp& r1, const RegExp& r2) {
  return RegExp(std::make_shared<const RegExp::Node>(
      RegExp::Node{RegExpKind::Concat, std::nullopt, r1.node_, r2.node_}));
}

RegExp make_kleenestar(const RegExp& r1) {
  return RegExp(std::make_shared<const RegExp::Node>(
      RegExp::Node{RegExpKind::KleeneStar, std::nullopt, r1.node_, nullptr}));
}

bool is_null(const RegExp& r) { return r.kind() == RegExpKind::Null; }
bool is_empty(const RegExp& r) { return r.kind() == RegExpKind::Empty; }
bool is_singleton(const RegExp& r) { return r.kind() == RegExpKind::Singleton; }
bool is_union(const RegExp& r) { return r.kind() == RegExpKind::Union; }
bool is_concat(const RegExp& r) { return r.kind() == RegExpKind::Concat; }
bool is_kleenestar(const RegExp& r) { return r.kind() == RegExpKind::KleeneStar; }

Symbol singleton_a(const RegExp& r) {
  if (!is_singleton(r)) {
    throw VariantError(variant_error_text("singleton-regexp-a", RegExpKind::Singleton, r.kind()));
  }
  return *r.node_->sym;
}

RegExp union_r1(const RegExp& r) {
  if (!is_union(r)) {
    throw VariantError(variant_error_text("union-regexp-r1", RegExpKind::Union, r.kind()));
  }
  return RegExp(r.node_->r1);
}

RegExp union_r2(const RegExp& r) {
  if (!is_union(r)) {
    throw VariantError(variant_error_text("union-regexp-r2", RegExpKind::Union, r.kind()));
  }
  return RegExp(r.node_->r2);
}

RegExp concat_r1(const RegExp& r) {
  if (!is_concat(r)) {
    throw VariantError(variant_error_text("concat-regexp-r1", RegExpKind::Concat, r.kind()));
  }
  return RegExp(r.node_->r1);
}

RegExp concat_r2(const RegExp& r) {
  if (!is_concat(r)) {
    throw VariantError(variant_error_text("concat-regexp-r2", RegExpKind::Concat, r.kind()));
  }
  return RegExp(r.node_->r2);
}

RegExp kleenestar_r1(const RegExp& r) {
  if (!is_kleenestar(r)) {
    throw VariantError(
        variant_error_text("kleenestar-regexp-r1", RegExpKind::KleeneStar, r.kind()));
  }
  return RegExp(r.node_->r1);
}

bool operator==(const RegExp& a, const RegExp& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case RegExpKind::Null:
    case RegExpKind::Empty:
      return true;
    case RegExpKind::Singleton:
      return *a.node_->sym == *b.node_->sym;
    case RegExpKind::KleeneStar:
      return RegExp(a.node_->r1) == RegExp(b.node_->r1);
    case RegExpKind::Union:
    case RegExpKind::Concat:
      return RegExp(a.node_->r1) == RegExp(b.node_->r1) &&
             RegExp(a.node_->r2) == RegExp(b.node_->r2);
  }
  return false;
}

namespace {

void collect(const RegExp& r, std::set<Symbol>& into) {
  switch (r.kind()) {
    case RegExpKind::Null:
    case RegExpKind::Empty:
      return;
    case RegExpKind::Singleton:
      into.insert(singleton_a(r));
      return;
    case RegExpKind::KleeneStar:
      collect(kleenestar_r1(r), into);
      return;
    case RegExpKind::Union:
      collect(union_r1(r), into);
      collect(union_r2(r), into);
      return;
    case RegExpKind::Concat:
      collect(concat_r1(r), into);
      collect(concat_r2(r), into);
      return;
  }
}

}  // namespace

std::set<Symbol> collect_singletons(const RegExp& r) {
  std::set<Symbol> out;
  collect(r, out);
  return out;
}

std::string to_string(const RegExp& r) {
  switch (r.kind()) {
    case RegExpKind::Null: return "(null-regexp)";
    case RegExpKind::Empty: return "(empty-regexp)";
    case RegExpKind::Singleton:
      return std::string("(singleton-regexp \"") + singleton_a(r).value() + "\")";
    case RegExpKind::Union:
      return "(union-regexp " + to_string(union_r1(r)) + " " + to_string(union_r2(r)) + ")";
    case RegExpKind::Concat:
      return "(concat-regexp " + to_string(concat_r1(r)) + " " + to_string(concat_r2(r)) + ")";
    case RegExpKind::KleeneStar:
      return "(kleenestar-regexp " + to_string(kleenestar_r1(r)) + ")";
  }
  return "?";
}

}  // namespace rexp
