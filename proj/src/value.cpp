#include "rexp/value.hpp"

#include <stdexcept>

namespace rexp {

Value Value::regexp(RegExp r) { return Value(Rep(std::move(r))); }
Value Value::symbol(std::string text) { return Value(Rep(Sym{std::move(text)})); }
Value Value::string(std::string text) { return Value(Rep(Str{std::move(text)})); }
Value Value::integer(std::int64_t n) { return Value(Rep(n)); }
Value Value::list(std::vector<Value> items) { return Value(Rep(std::move(items))); }
Value Value::predicate(Predicate p) { return Value(Rep(std::move(p))); }

bool Value::is_regexp() const { return std::holds_alternative<RegExp>(rep_); }
bool Value::is_symbol() const { return std::holds_alternative<Sym>(rep_); }
bool Value::is_string() const { return std::holds_alternative<Str>(rep_); }
bool Value::is_integer() const { return std::holds_alternative<std::int64_t>(rep_); }
bool Value::is_list() const { return std::holds_alternative<std::vector<Value>>(rep_); }
bool Value::is_predicate() const { return std::holds_alternative<Predicate>(rep_); }

const RegExp& Value::as_regexp() const { return std::get<RegExp>(rep_); }
const std::string& Value::as_symbol() const { return std::get<Sym>(rep_).text; }
const std::string& Value::as_string() const { return std::get<Str>(rep_).text; }
std::int64_t Value::as_integer() const { return std::get<std::int64_t>(rep_); }
const std::vector<Value>& Value::as_list() const { return std::get<std::vector<Value>>(rep_); }
const Predicate& Value::as_predicate() const { return std::get<Predicate>(rep_); }

namespace {

std::string quoted(const std::string& text) {
  std::string out = "\"";
  for (char ch : text) {
    if (ch == '"' || ch == '\\') out.push_back('\\');
    out.push_back(ch);
  }
  out.push_back('"');
  return out;
}

}  // namespace

std::string render_value(const Value& v) {
  if (v.is_regexp()) return to_string(v.as_regexp());
  if (v.is_symbol()) return v.as_symbol();
  if (v.is_string()) return quoted(v.as_string());
  if (v.is_integer()) return std::to_string(v.as_integer());
  if (v.is_predicate()) return "#<procedure>";
  if (v.is_list()) {
    std::string out = "(";
    const auto& items = v.as_list();
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (i > 0) out.push_back(' ');
      out += render_value(items[i]);
    }
    out.push_back(')');
    return out;
  }
  throw std::logic_error("unhandled value alternative");
}

}  // namespace rexp
